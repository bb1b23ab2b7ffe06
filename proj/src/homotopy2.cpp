#include "lca/homotopy2.hpp"

#include <sstream>
#include <stdexcept>

namespace lca {

namespace {

std::string idx2(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string idx3(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

void record(Report &rep, const std::string &name, bool &flag,
            const std::string &tuple, const ModElem &lhs, const ModElem &rhs) {
    if (lhs != rhs) {
        flag = false;
        rep.fail(name, tuple, lhs.to_string(), rhs.to_string(),
                 (lhs - rhs).to_string());
    }
}

} // namespace

TwoTermLInf TwoTermLInf::make(std::vector<std::string> b0,
                              std::vector<std::string> b1) {
    TwoTermLInf T;
    T.basis0 = std::move(b0);
    T.basis1 = std::move(b1);
    int n0 = T.n0(), n1 = T.n1();
    T.d = ConformalMap::zero(n0, n1);
    T.bracket00 = MultiTable({n0, n0}, n0);
    T.bracket01 = MultiTable({n0, n1}, n1);
    T.l3 = MultiTable({n0, n0, n0}, n1);
    return T;
}

ModElem TwoTermLInf::b00(const ModElem &x, const Poly &sx, const ModElem &y,
                         const Poly &sy) const {
    return eval_table(bracket00, {{x, sx}, {y, sy}});
}

ModElem TwoTermLInf::b01(const ModElem &x, const Poly &sx, const ModElem &m,
                         const Poly &sm) const {
    return eval_table(bracket01, {{x, sx}, {m, sm}});
}

ModElem TwoTermLInf::b10(const ModElem &m, const Poly &sm, const ModElem &x,
                         const Poly &sx) const {
    return -b01(x, sx, m, sm);
}

ModElem TwoTermLInf::l3v(const ModElem &x, const Poly &sx, const ModElem &y,
                         const Poly &sy, const ModElem &z,
                         const Poly &sz) const {
    return eval_table(l3, {{x, sx}, {y, sy}, {z, sz}});
}

std::string to_string(TwoTermClass c) {
    switch (c) {
    case TwoTermClass::Skeletal:
        return "skeletal";
    case TwoTermClass::Strict:
        return "strict";
    case TwoTermClass::Both:
        return "skeletal and strict";
    default:
        return "neither";
    }
}

Report check_2term(const TwoTermLInf &T) {
    Report rep;
    rep.subject = "two-term structure";
    int n0 = T.n0(), n1 = T.n1();
    Poly la = Poly::l(1), mu = Poly::l(2), nu = Poly::l(3);
    Poly D = Poly::d();
    Poly s3 = -D - la - mu;       // third slot at arity 3
    Poly s4 = -D - la - mu - nu;  // fourth slot at arity 4

    // (L1) holds structurally: the L1xL1 bracket is not stored.
    rep.pass("L1");
    // (L2) defines bracket10 from bracket01; nothing stored to check.
    rep.pass("L2");

    // (L3): skew-symmetry of bracket00.
    {
        bool ok = true;
        std::map<int, Poly> twist{{var_l(1), -D - la}};
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                record(rep, "L3", ok, idx2(i, j), T.bracket00.at({i, j}),
                       -T.bracket00.at({j, i}).subst(twist));
        if (ok)
            rep.pass("L3");
    }

    // (L4): d([[x_l m]]) = [[x_l dm]].
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int a = 0; a < n1; ++a) {
                ModElem x = ModElem::basis(n0, i), m = ModElem::basis(n1, a);
                ModElem lhs = T.d.apply(T.b01(x, la, m, -D - la));
                ModElem rhs = T.b00(x, la, T.d.apply(m), -D - la);
                record(rep, "L4", ok, idx2(i, a), lhs, rhs);
            }
        if (ok)
            rep.pass("L4");
    }

    // (L5): [[dm_l n]] = [[m_l dn]].
    {
        bool ok = true;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n1; ++b) {
                ModElem m = ModElem::basis(n1, a), n = ModElem::basis(n1, b);
                ModElem lhs = T.b01(T.d.apply(m), la, n, -D - la);
                ModElem rhs = T.b10(m, la, T.d.apply(n), -D - la);
                record(rep, "L5", ok, idx2(a, b), lhs, rhs);
            }
        if (ok)
            rep.pass("L5");
    }

    // (L6): d(l3(x,y,z)) = [[x_l [[y_m z]]]] - [[[[x_l y]]_{l+m} z]] - [[y_m [[x_l z]]]].
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int k = 0; k < n0; ++k) {
                    ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j),
                            z = ModElem::basis(n0, k);
                    ModElem lhs = T.d.apply(T.l3v(x, la, y, mu, z, s3));
                    ModElem rhs =
                        T.b00(x, la, T.b00(y, mu, z, s3), -D - la) -
                        T.b00(T.b00(x, la, y, -D - la), la + mu, z, s3) -
                        T.b00(y, mu, T.b00(x, la, z, s3), -D - mu);
                    record(rep, "L6", ok, idx3(i, j, k), lhs, rhs);
                }
        if (ok)
            rep.pass("L6");
    }

    // (L7): l3(x,y,dm) = [[x_l [[y_m m]]]] - [[[[x_l y]]_{l+m} m]] - [[y_m [[x_l m]]]].
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int a = 0; a < n1; ++a) {
                    ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j),
                            m = ModElem::basis(n1, a);
                    ModElem lhs = T.l3v(x, la, y, mu, T.d.apply(m), s3);
                    ModElem rhs =
                        T.b01(x, la, T.b01(y, mu, m, s3), -D - la) -
                        T.b01(T.b00(x, la, y, -D - la), la + mu, m, s3) -
                        T.b01(y, mu, T.b01(x, la, m, s3), -D - mu);
                    record(rep, "L7", ok, idx3(i, j, a), lhs, rhs);
                }
        if (ok)
            rep.pass("L7");
    }

    // (L8), equivalent to delta(l3) = 0 termwise; the insertion term
    // l3_{l,m+n}(x, [[y_m z]], w) carries a minus sign.
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int k = 0; k < n0; ++k)
                    for (int w = 0; w < n0; ++w) {
                        ModElem X = ModElem::basis(n0, i),
                                Y = ModElem::basis(n0, j),
                                Z = ModElem::basis(n0, k),
                                W = ModElem::basis(n0, w);
                        ModElem lhs =
                            T.b01(X, la, T.l3v(Y, mu, Z, nu, W, s4), -D - la) -
                            T.b01(Y, mu, T.l3v(X, la, Z, nu, W, s4), -D - mu) +
                            T.b01(Z, nu, T.l3v(X, la, Y, mu, W, s4), -D - nu) -
                            T.b01(W, s4, T.l3v(X, la, Y, mu, Z, nu),
                                  la + mu + nu);
                        ModElem rhs =
                            T.l3v(T.b00(X, la, Y, mu), la + mu, Z, nu, W, s4) +
                            T.l3v(Y, mu, T.b00(X, la, Z, s4), la + nu, W, s4) +
                            T.l3v(Y, mu, Z, nu, T.b00(X, la, W, s4), la + s4) -
                            T.l3v(X, la, T.b00(Y, mu, Z, s4), mu + nu, W, s4) -
                            T.l3v(X, la, Z, nu, T.b00(Y, mu, W, s4), mu + s4) +
                            T.l3v(X, la, Y, mu, T.b00(Z, nu, W, s4), nu + s4);
                        record(rep, "L8",
                               ok, idx3(i, j, k) + "," + std::to_string(w),
                               lhs, rhs);
                    }
        if (ok)
            rep.pass("L8");
    }

    // stored-table skew invariants
    {
        Cochain c3;
        c3.degree = 3;
        c3.alg_rank = n0;
        c3.module_rank = n1;
        c3.values = T.l3;
        Report r = check_cochain(c3, "l3");
        if (r.ok())
            rep.pass("l3-skew");
        else
            rep.merge(r, "l3-");
    }
    return rep;
}

Report check_homotopy_avg(const TwoTermLInf &T, const HomotopyAvg &P) {
    Report rep;
    rep.subject = "homotopy averaging operator";
    int n0 = T.n0(), n1 = T.n1();
    Poly la = Poly::l(1), mu = Poly::l(2), D = Poly::d();
    Poly s3 = -D - la - mu;
    auto P2v = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                   const Poly &sy) {
        return eval_table(P.P2, {{x, sx}, {y, sy}});
    };

    // (A1): P0 d = d P1.
    if (P.P0.compose(T.d) == T.d.compose(P.P1))
        rep.pass("A1");
    else
        rep.fail("A1", "", "", "", "P0 d != d P1");

    // (A2): d(P2(x,y)) = [[P0x_l P0y]] - P0([[P0x_l y]]).
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j) {
                ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j);
                ModElem lhs = T.d.apply(P2v(x, la, y, -D - la));
                ModElem rhs =
                    T.b00(P.P0.apply(x), la, P.P0.apply(y), -D - la) -
                    P.P0.apply(T.b00(P.P0.apply(x), la, y, -D - la));
                record(rep, "A2", ok, idx2(i, j), lhs, rhs);
            }
        if (ok)
            rep.pass("A2");
    }

    // (A3): P2(x, dm) = -P1([[P0x_l m]]) + [[P0x_l P1m]]
    //                 = -P1([[x_l P1m]]) + [[P0x_l P1m]].
    {
        bool ok1 = true, ok2 = true;
        for (int i = 0; i < n0; ++i)
            for (int a = 0; a < n1; ++a) {
                ModElem x = ModElem::basis(n0, i), m = ModElem::basis(n1, a);
                ModElem lhs = P2v(x, la, T.d.apply(m), -D - la);
                ModElem common =
                    T.b01(P.P0.apply(x), la, P.P1.apply(m), -D - la);
                ModElem r1 =
                    -P.P1.apply(T.b01(P.P0.apply(x), la, m, -D - la)) + common;
                ModElem r2 =
                    -P.P1.apply(T.b01(x, la, P.P1.apply(m), -D - la)) + common;
                record(rep, "A3-1", ok1, idx2(i, a), lhs, r1);
                record(rep, "A3-2", ok2, idx2(i, a), r1, r2);
            }
        if (ok1)
            rep.pass("A3-1");
        if (ok2)
            rep.pass("A3-2");
    }

    // (A4): P2(dm, x) = -P1([[m_l P0x]]) + [[P1m_l P0x]]
    //                 = -P1([[P1m_l x]]) + [[P1m_l P0x]].
    {
        bool ok1 = true, ok2 = true;
        for (int a = 0; a < n1; ++a)
            for (int i = 0; i < n0; ++i) {
                ModElem m = ModElem::basis(n1, a), x = ModElem::basis(n0, i);
                ModElem lhs = P2v(T.d.apply(m), la, x, -D - la);
                ModElem common =
                    T.b10(P.P1.apply(m), la, P.P0.apply(x), -D - la);
                ModElem r1 =
                    -P.P1.apply(T.b10(m, la, P.P0.apply(x), -D - la)) + common;
                ModElem r2 =
                    -P.P1.apply(T.b10(P.P1.apply(m), la, x, -D - la)) + common;
                record(rep, "A4-1", ok1, idx2(a, i), lhs, r1);
                record(rep, "A4-2", ok2, idx2(a, i), r1, r2);
            }
        if (ok1)
            rep.pass("A4-1");
        if (ok2)
            rep.pass("A4-2");
    }

    // (A5): l3(P0x,P0y,P0z) - P1 l3(P0x,y,z) =
    //   [[P0x_l P2(y,z)]] - [[P2(x,y)_{l+m} P0z]] - [[P0y_m P2(x,z)]]
    //   + P2(x, [[P0y_m z]]) - P2([[P0x_l y]], z) - P2(y, [[P0x_l z]]).
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int k = 0; k < n0; ++k) {
                    ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j),
                            z = ModElem::basis(n0, k);
                    ModElem p0x = P.P0.apply(x), p0y = P.P0.apply(y),
                            p0z = P.P0.apply(z);
                    ModElem lhs = T.l3v(p0x, la, p0y, mu, p0z, s3) -
                                  P.P1.apply(T.l3v(p0x, la, y, mu, z, s3));
                    ModElem rhs =
                        T.b01(p0x, la, P2v(y, mu, z, s3), -D - la) -
                        T.b10(P2v(x, la, y, mu), la + mu, p0z, s3) -
                        T.b01(p0y, mu, P2v(x, la, z, s3), -D - mu) +
                        P2v(x, la, T.b00(p0y, mu, z, s3), -D - la) -
                        P2v(T.b00(p0x, la, y, mu), la + mu, z, s3) -
                        P2v(y, mu, T.b00(p0x, la, z, s3), -D - mu);
                    record(rep, "A5", ok, idx3(i, j, k), lhs, rhs);
                }
        if (ok)
            rep.pass("A5");
    }

    // stored P2 skew invariant
    {
        Cochain c2;
        c2.degree = 2;
        c2.alg_rank = n0;
        c2.module_rank = n1;
        c2.values = P.P2;
        Report r = check_cochain(c2, "P2");
        if (r.ok())
            rep.pass("P2-skew");
        else
            rep.merge(r, "P2-");
    }
    return rep;
}

Report check_morphism(const TwoTermLInf &T, const TwoTermLInf &Tp,
                      const TwoTermMorphism &M) {
    Report rep;
    rep.subject = "two-term morphism";
    int n0 = T.n0(), n1 = T.n1();
    Poly la = Poly::l(1), mu = Poly::l(2), D = Poly::d();
    Poly s3 = -D - la - mu;
    auto f2v = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                   const Poly &sy) {
        return eval_table(M.f2, {{x, sx}, {y, sy}});
    };

    // (H1): f0 d = d' f1.
    if (M.f0.compose(T.d) == Tp.d.compose(M.f1))
        rep.pass("H1");
    else
        rep.fail("H1", "", "", "", "f0 d != d' f1");

    // (H2): d'(f2(x,y)) = [[f0x_l f0y]]' - f0([[x_l y]]).
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j) {
                ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j);
                ModElem lhs = Tp.d.apply(f2v(x, la, y, -D - la));
                ModElem rhs =
                    Tp.b00(M.f0.apply(x), la, M.f0.apply(y), -D - la) -
                    M.f0.apply(T.b00(x, la, y, -D - la));
                record(rep, "H2", ok, idx2(i, j), lhs, rhs);
            }
        if (ok)
            rep.pass("H2");
    }

    // (H3): f2(x, dm) = -f1([[x_l m]]) + [[f0x_l f1m]]'.
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int a = 0; a < n1; ++a) {
                ModElem x = ModElem::basis(n0, i), m = ModElem::basis(n1, a);
                ModElem lhs = f2v(x, la, T.d.apply(m), -D - la);
                ModElem rhs =
                    -M.f1.apply(T.b01(x, la, m, -D - la)) +
                    Tp.b01(M.f0.apply(x), la, M.f1.apply(m), -D - la);
                record(rep, "H3", ok, idx2(i, a), lhs, rhs);
            }
        if (ok)
            rep.pass("H3");
    }

    // (H4): f2(dm, x) = -f1([[m_l x]]) + [[f1m_l f0x]]'.
    {
        bool ok = true;
        for (int a = 0; a < n1; ++a)
            for (int i = 0; i < n0; ++i) {
                ModElem m = ModElem::basis(n1, a), x = ModElem::basis(n0, i);
                ModElem lhs = f2v(T.d.apply(m), la, x, -D - la);
                ModElem rhs =
                    -M.f1.apply(T.b10(m, la, x, -D - la)) +
                    Tp.b10(M.f1.apply(m), la, M.f0.apply(x), -D - la);
                record(rep, "H4", ok, idx2(a, i), lhs, rhs);
            }
        if (ok)
            rep.pass("H4");
    }

    // (H5): l3'(f0x,f0y,f0z) - f1 l3(x,y,z) =
    //   [[f0x_l f2(y,z)]]' + f2(x, [[y_m z]]) - [[f0y_m f2(x,z)]]'
    //   - f2(y, [[x_l z]]) - [[f2(x,y)_{l+m} f0z]]' - f2([[x_l y]], z).
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int k = 0; k < n0; ++k) {
                    ModElem x = ModElem::basis(n0, i), y = ModElem::basis(n0, j),
                            z = ModElem::basis(n0, k);
                    ModElem lhs =
                        Tp.l3v(M.f0.apply(x), la, M.f0.apply(y), mu,
                               M.f0.apply(z), s3) -
                        M.f1.apply(T.l3v(x, la, y, mu, z, s3));
                    ModElem rhs =
                        Tp.b01(M.f0.apply(x), la, f2v(y, mu, z, s3), -D - la) +
                        f2v(x, la, T.b00(y, mu, z, s3), -D - la) -
                        Tp.b01(M.f0.apply(y), mu, f2v(x, la, z, s3), -D - mu) -
                        f2v(y, mu, T.b00(x, la, z, s3), -D - mu) -
                        Tp.b10(f2v(x, la, y, mu), la + mu, M.f0.apply(z), s3) -
                        f2v(T.b00(x, la, y, mu), la + mu, z, s3);
                    record(rep, "H5", ok, idx3(i, j, k), lhs, rhs);
                }
        if (ok)
            rep.pass("H5");
    }
    return rep;
}

TwoTermClass classify(const TwoTermLInf &T, const HomotopyAvg &P) {
    bool skeletal = T.d.is_zero();
    bool strict = T.l3.is_zero() && P.P2.is_zero();
    if (skeletal && strict)
        return TwoTermClass::Both;
    if (skeletal)
        return TwoTermClass::Skeletal;
    if (strict)
        return TwoTermClass::Strict;
    return TwoTermClass::Neither;
}

CochainContext two_term_context(const TwoTermLInf &T, const HomotopyAvg &P) {
    CochainContext ctx;
    ctx.alg.name = "two-term-base";
    ctx.alg.basis = T.basis0;
    ctx.alg.structure = T.bracket00;
    ctx.action = T.bracket01;
    ctx.module_rank = T.n1();
    ctx.P = P.P0;
    ctx.phi = P.P1;
    return ctx;
}

CochainPair skeletal_to_cocycle(const TwoTermLInf &T, const HomotopyAvg &P) {
    TwoTermClass cls = classify(T, P);
    if (cls != TwoTermClass::Skeletal && cls != TwoTermClass::Both)
        throw std::invalid_argument("datum is not skeletal");
    CochainPair pair;
    pair.f.degree = 3;
    pair.f.alg_rank = T.n0();
    pair.f.module_rank = T.n1();
    pair.f.values = T.l3;
    pair.g.degree = 2;
    pair.g.alg_rank = T.n0();
    pair.g.module_rank = T.n1();
    pair.g.values = -P.P2;
    return pair;
}

std::pair<TwoTermLInf, HomotopyAvg>
cocycle_to_skeletal(const CochainContext &ctx,
                    const std::vector<std::string> &basis0,
                    const std::vector<std::string> &basis1,
                    const CochainPair &pair) {
    if (pair.f.degree != 3 || pair.g.degree != 2)
        throw std::invalid_argument("skeletal data need a (3,2) cochain pair");
    if (!d_AL(ctx, pair).is_zero())
        throw std::invalid_argument("cochain pair is not d_AL-closed");
    TwoTermLInf T = TwoTermLInf::make(basis0, basis1);
    T.bracket00 = ctx.alg.structure;
    T.bracket01 = ctx.action;
    T.l3 = pair.f.values;
    HomotopyAvg P;
    P.P0 = ctx.P;
    P.P1 = ctx.phi;
    P.P2 = (-pair.g).values;
    return {T, P};
}

Report skeletal_equiv_check(const TwoTermLInf &T, const HomotopyAvg &P,
                            const TwoTermLInf &Tp, const HomotopyAvg &Pp,
                            const Cochain &f_witness,
                            const ConformalMap &xi_witness) {
    Report rep;
    rep.subject = "skeletal equivalence";
    if (!(T.bracket00 == Tp.bracket00) || !(T.bracket01 == Tp.bracket01) ||
        !(P.P0 == Pp.P0) || !(P.P1 == Pp.P1)) {
        rep.fail("equiv-pre", "", "", "",
                 "underlying brackets/operators differ");
        return rep;
    }
    if (!T.d.is_zero() || !Tp.d.is_zero()) {
        rep.fail("equiv-pre", "", "", "", "data are not skeletal");
        return rep;
    }
    rep.pass("equiv-pre");
    CochainContext ctx = two_term_context(T, P);
    CochainPair a = skeletal_to_cocycle(T, P);
    CochainPair b = skeletal_to_cocycle(Tp, Pp);
    CochainPair w;
    w.f = f_witness;
    w.g.degree = 1;
    w.g.alg_rank = T.n0();
    w.g.module_rank = T.n1();
    w.g.values = MultiTable({T.n0()}, T.n1());
    for (int i = 0; i < T.n0(); ++i) {
        ModElem v(T.n1());
        for (int r = 0; r < T.n1(); ++r)
            v.coords[r] = xi_witness.at(r, i);
        w.g.values.at({i}) = v;
    }
    CochainPair shift = d_AL(ctx, w);
    if (b.f.values == (a.f + shift.f).values)
        rep.pass("equiv-l3");
    else
        rep.fail("equiv-l3", "", "", "", "l3' != l3 + (d_AL witness).f");
    if (b.g.values == (a.g + shift.g).values)
        rep.pass("equiv-P2");
    else
        rep.fail("equiv-P2", "", "", "", "P2' != P2 - (d_AL witness).g");
    return rep;
}

Report check_crossed_module(const CrossedModule &C) {
    Report rep;
    rep.subject = "crossed module";
    int n0 = C.down.rank(), n1 = C.up.rank();
    Poly la = Poly::l(1), D = Poly::d();

    rep.merge(check_skew(C.down), "down-");
    rep.merge(check_jacobi(C.down), "down-");
    rep.merge(check_averaging(C.down, C.P0), "down-");
    rep.merge(check_skew(C.up), "up-");
    rep.merge(check_jacobi(C.up), "up-");
    rep.merge(check_averaging(C.up, C.P1), "up-");

    ConformalRep R;
    R.algebra = C.down;
    R.module_basis = C.up.basis;
    R.action = C.action;
    rep.merge(check_rep(R), "action-");
    AvgRepTriple A{R, C.P1, C.P0};
    rep.merge(check_avg_rep(A), "action-");

    // d is a morphism of averaging algebras
    if (C.d.compose(C.P1) == C.P0.compose(C.d))
        rep.pass("d-operator");
    else
        rep.fail("d-operator", "", "", "", "d P1 != P0 d");
    {
        bool ok = true;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n1; ++b) {
                ModElem fa = ModElem::basis(n1, a), fb = ModElem::basis(n1, b);
                ModElem lhs =
                    C.d.apply(bracket_eval(C.up, fa, la, fb, -D - la));
                ModElem rhs = bracket_eval(C.down, C.d.apply(fa), la,
                                           C.d.apply(fb), -D - la);
                record(rep, "d-bracket", ok, idx2(a, b), lhs, rhs);
            }
        if (ok)
            rep.pass("d-bracket");
    }

    // equivariance: d(rho(x)_l m) = [x_l dm]
    {
        bool ok = true;
        for (int i = 0; i < n0; ++i)
            for (int a = 0; a < n1; ++a) {
                ModElem x = ModElem::basis(n0, i), m = ModElem::basis(n1, a);
                ModElem lhs = C.d.apply(rep_apply(R, x, la, m));
                ModElem rhs =
                    bracket_eval(C.down, x, la, C.d.apply(m), -D - la);
                record(rep, "equivariance", ok, idx2(i, a), lhs, rhs);
            }
        if (ok)
            rep.pass("equivariance");
    }

    // Peiffer identity: rho(dm)_l n = [m_l n]
    {
        bool ok = true;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n1; ++b) {
                ModElem m = ModElem::basis(n1, a), nn = ModElem::basis(n1, b);
                ModElem lhs = rep_apply(R, C.d.apply(m), la, nn);
                ModElem rhs = bracket_eval(C.up, m, la, nn, -D - la);
                record(rep, "peiffer", ok, idx2(a, b), lhs, rhs);
            }
        if (ok)
            rep.pass("peiffer");
    }
    return rep;
}

CrossedModule strict_to_crossed(const TwoTermLInf &T, const HomotopyAvg &P) {
    TwoTermClass cls = classify(T, P);
    if (cls != TwoTermClass::Strict && cls != TwoTermClass::Both)
        throw std::invalid_argument("datum is not strict");
    CrossedModule C;
    C.down.name = "strict-down";
    C.down.basis = T.basis0;
    C.down.structure = T.bracket00;
    C.P0 = P.P0;
    C.up.name = "strict-up";
    C.up.basis = T.basis1;
    C.up.structure = MultiTable({T.n1(), T.n1()}, T.n1());
    Poly la = Poly::l(1), D = Poly::d();
    for (int a = 0; a < T.n1(); ++a)
        for (int b = 0; b < T.n1(); ++b)
            C.up.structure.at({a, b}) =
                T.b01(T.d.apply(ModElem::basis(T.n1(), a)), la,
                      ModElem::basis(T.n1(), b), -D - la);
    C.P1 = P.P1;
    C.d = T.d;
    C.action = T.bracket01;
    return C;
}

std::pair<TwoTermLInf, HomotopyAvg> crossed_to_strict(const CrossedModule &C) {
    TwoTermLInf T = TwoTermLInf::make(C.down.basis, C.up.basis);
    T.d = C.d;
    T.bracket00 = C.down.structure;
    T.bracket01 = C.action;
    HomotopyAvg P;
    P.P0 = C.P0;
    P.P1 = C.P1;
    P.P2 = MultiTable({T.n0(), T.n0()}, T.n1());
    return {T, P};
}

std::pair<LieConformalAlgebra, ConformalMap>
crossed_direct_sum(const CrossedModule &C) {
    int n0 = C.down.rank(), n1 = C.up.rank();
    std::vector<std::string> basis = C.down.basis;
    basis.insert(basis.end(), C.up.basis.begin(), C.up.basis.end());
    LieConformalAlgebra S = LieConformalAlgebra::make("crossed_sum", basis);
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            ModElem v(n0 + n1);
            for (int t = 0; t < n0; ++t)
                v.coords[t] = C.down.entry(i, j).coords[t];
            S.entry(i, j) = v;
        }
    for (int i = 0; i < n0; ++i)
        for (int a = 0; a < n1; ++a) {
            ModElem v(n0 + n1), w(n0 + n1);
            for (int t = 0; t < n1; ++t) {
                v.coords[n0 + t] = C.action.at({i, a}).coords[t];
                w.coords[n0 + t] = (-C.action.at({i, a}).subst(twist)).coords[t];
            }
            S.entry(i, n0 + a) = v;
            S.entry(n0 + a, i) = w;
        }
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            ModElem v(n0 + n1);
            for (int t = 0; t < n1; ++t)
                v.coords[n0 + t] = C.up.entry(a, b).coords[t];
            S.entry(n0 + a, n0 + b) = v;
        }
    ConformalMap P = ConformalMap::block(
        C.P0, ConformalMap::zero(n0, n1), ConformalMap::zero(n1, n0), C.P1);
    return {S, P};
}

std::pair<LieConformalAlgebra, ConformalMap>
strict_direct_sum(const TwoTermLInf &T, const HomotopyAvg &H) {
    int n0 = T.n0(), n1 = T.n1();
    std::vector<std::string> basis = T.basis0;
    basis.insert(basis.end(), T.basis1.begin(), T.basis1.end());
    LieConformalAlgebra S = LieConformalAlgebra::make("strict_sum", basis);
    Poly la = Poly::l(1), D = Poly::d();
    for (int i = 0; i < n0 + n1; ++i)
        for (int j = 0; j < n0 + n1; ++j) {
            ModElem x0(n0), m0(n1), y0(n0), m1(n1);
            if (i < n0)
                x0 = ModElem::basis(n0, i);
            else
                m0 = ModElem::basis(n1, i - n0);
            if (j < n0)
                y0 = ModElem::basis(n0, j);
            else
                m1 = ModElem::basis(n1, j - n0);
            // ([[x_l y]], [[x_l n]] - [[y_{-d-l} m]] + [[dm_l n]])
            ModElem part0 = T.b00(x0, la, y0, -D - la);
            ModElem part1 = T.b01(x0, la, m1, -D - la) -
                            T.b01(y0, -D - la, m0, la) +
                            T.b01(T.d.apply(m0), la, m1, -D - la);
            ModElem v(n0 + n1);
            for (int t = 0; t < n0; ++t)
                v.coords[t] = part0.coords[t];
            for (int t = 0; t < n1; ++t)
                v.coords[n0 + t] = part1.coords[t];
            S.entry(i, j) = v;
        }
    ConformalMap P = ConformalMap::block(
        H.P0, ConformalMap::zero(n0, n1), ConformalMap::zero(n1, n0), H.P1);
    return {S, P};
}

std::pair<TwoTermLInf, HomotopyAvg>
strict_from_avg(const LieConformalAlgebra &A, const ConformalMap &P) {
    TwoTermLInf T = TwoTermLInf::make(A.basis, A.basis);
    T.d = ConformalMap::identity(A.rank());
    T.bracket00 = A.structure;
    T.bracket01 = A.structure;
    HomotopyAvg H;
    H.P0 = P;
    H.P1 = P;
    H.P2 = MultiTable({A.rank(), A.rank()}, A.rank());
    return {T, H};
}

CrossedModule crossed_id_ad(const LieConformalAlgebra &A,
                            const ConformalMap &P) {
    CrossedModule C;
    C.down = A;
    C.P0 = P;
    C.up = A;
    C.P1 = P;
    C.d = ConformalMap::identity(A.rank());
    C.action = A.structure;
    return C;
}

CrossedModule crossed_kernel_example(const LieConformalAlgebra &A) {
    // Direct product A x A, projection onto the first factor; the kernel is
    // the second copy with the adjoint action.
    int n = A.rank();
    std::vector<std::string> basis;
    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < n; ++k)
            basis.push_back(A.basis[k] + (c == 0 ? "a" : "b"));
    LieConformalAlgebra D2 = LieConformalAlgebra::make(A.name + "_x2", basis);
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ModElem v(2 * n);
                for (int t = 0; t < n; ++t)
                    v.coords[c * n + t] = A.entry(i, j).coords[t];
                D2.entry(c * n + i, c * n + j) = v;
            }
    CrossedModule C;
    C.down = D2;
    C.P0 = ConformalMap::identity(2 * n);
    C.up = A;
    C.P1 = ConformalMap::identity(n);
    C.d = ConformalMap(2 * n, n);
    for (int k = 0; k < n; ++k)
        C.d.at(n + k, k) = Poly(1);
    C.action = MultiTable({2 * n, n}, n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            C.action.at({n + i, a}) = A.entry(i, a);
    return C;
}

} // namespace lca
