#include "lca/extensions.hpp"

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

Report check_cocycle(const NonAbCocycle &c) {
    Report rep;
    rep.subject = "non-abelian 2-cocycle";
    int n = c.base.rank(), h = c.fiber.rank();
    Poly la = Poly::l(1), mu = Poly::l(2), D = Poly::d();
    Poly s3 = -D - la - mu;

    rep.merge(check_skew(c.base.alg), "base-");
    rep.merge(check_jacobi(c.base.alg), "base-");
    rep.merge(check_averaging(c.base.alg, c.base.P), "base-");
    rep.merge(check_skew(c.fiber.alg), "fiber-");
    rep.merge(check_jacobi(c.fiber.alg), "fiber-");
    rep.merge(check_averaging(c.fiber.alg, c.fiber.P), "fiber-");

    auto bb = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                  const Poly &sy) {
        return bracket_eval(c.base.alg, x, sx, y, sy);
    };
    auto fb = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                  const Poly &sy) {
        return bracket_eval(c.fiber.alg, x, sx, y, sy);
    };
    auto chi_v = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                     const Poly &sy) {
        return eval_table(c.chi, {{x, sx}, {y, sy}});
    };
    auto rho_v = [&](const ModElem &x, const Poly &sx, const ModElem &m,
                     const Poly &sm) {
        return eval_table(c.rho, {{x, sx}, {m, sm}});
    };

    // chi is twisted-skew
    {
        bool ok = true;
        std::map<int, Poly> twist{{var_l(1), -D - la}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                record(rep, "chi-skew", ok, idx2(i, j), c.chi.at({i, j}),
                       -c.chi.at({j, i}).subst(twist));
        if (ok)
            rep.pass("chi-skew");
    }

    // (C1): rho(x) rho(y) - rho(y) rho(x) - rho([x_l y]) = [chi_l(x,y)_{l+m} h]
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int a = 0; a < h; ++a) {
                    ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
                    ModElem hm = ModElem::basis(h, a);
                    ModElem lhs =
                        rho_v(x, la, rho_v(y, mu, hm, s3), -D - la) -
                        rho_v(y, mu, rho_v(x, la, hm, s3), -D - mu) -
                        rho_v(bb(x, la, y, mu), la + mu, hm, s3);
                    ModElem rhs =
                        fb(chi_v(x, la, y, mu), la + mu, hm, s3);
                    record(rep, "2cocycle1", ok, idx3(i, j, a), lhs, rhs);
                }
        if (ok)
            rep.pass("2cocycle1");
    }

    // (C2): the fiber component of the Jacobi identity on base triples.
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j),
                            z = ModElem::basis(n, k);
                    ModElem t1 =
                        rho_v(x, la, chi_v(y, mu, z, s3), -D - la);
                    ModElem t2 = chi_v(x, la, bb(y, mu, z, s3), -D - la);
                    ModElem t3 =
                        rho_v(y, mu, chi_v(x, la, z, s3), -D - mu);
                    ModElem t4 = chi_v(y, mu, bb(x, la, z, s3), -D - mu);
                    ModElem t5 = rho_v(z, s3, chi_v(x, la, y, mu), la + mu);
                    ModElem t6 = chi_v(bb(x, la, y, mu), la + mu, z, s3);
                    ModElem lhs = t1 + t2 - t3 - t4 + t5;
                    record(rep, "2cocycle2", ok, idx3(i, j, k), lhs, t6);
                }
        if (ok)
            rep.pass("2cocycle2");
    }

    // (E1), both printed equalities.
    {
        bool ok1 = true, ok2 = true;
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < h; ++a) {
                ModElem x = ModElem::basis(n, i), hm = ModElem::basis(h, a);
                ModElem px = c.base.P.apply(x);
                ModElem qh = c.fiber.P.apply(hm);
                ModElem phix = c.Phi.apply(x);
                ModElem lhs = rho_v(px, la, qh, -D - la);
                ModElem r1 = c.fiber.P.apply(rho_v(px, la, hm, -D - la)) +
                             c.fiber.P.apply(fb(phix, la, hm, -D - la)) -
                             fb(phix, la, qh, -D - la);
                ModElem r2 = c.fiber.P.apply(rho_v(x, la, qh, -D - la)) -
                             fb(phix, la, qh, -D - la);
                record(rep, "E1-1", ok1, idx2(i, a), lhs, r1);
                record(rep, "E1-2", ok2, idx2(i, a), lhs, r2);
            }
        if (ok1)
            rep.pass("E1-1");
        if (ok2)
            rep.pass("E1-2");
    }

    // (E2).
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
                ModElem px = c.base.P.apply(x), py = c.base.P.apply(y);
                ModElem phix = c.Phi.apply(x), phiy = c.Phi.apply(y);
                ModElem u1 = chi_v(px, la, py, -D - la);
                ModElem u2 = c.fiber.P.apply(chi_v(px, la, y, -D - la));
                ModElem u3 = c.Phi.apply(bb(px, la, y, -D - la));
                ModElem u4 = rho_v(px, la, phiy, -D - la);
                ModElem u5 = rho_v(py, -D - la, phix, la);
                ModElem u6 = c.fiber.P.apply(rho_v(y, -D - la, phix, la));
                ModElem u7 = fb(phix, la, phiy, -D - la);
                ModElem lhs = u1 - u2 - u3 + u4 - u5 + u6 + u7;
                record(rep, "E2", ok, idx2(i, j), lhs,
                       ModElem::zero(h));
            }
        if (ok)
            rep.pass("E2");
    }
    return rep;
}

Extension build_extension(const NonAbCocycle &c) {
    Report pre = check_cocycle(c);
    if (!pre.ok())
        throw std::invalid_argument("cocycle check failure:\n" + pre.summary());
    int n = c.base.rank(), h = c.fiber.rank();
    Extension E;
    E.base = c.base;
    E.fiber = c.fiber;
    std::vector<std::string> basis = c.base.alg.basis;
    basis.insert(basis.end(), c.fiber.alg.basis.begin(),
                 c.fiber.alg.basis.end());
    E.total.alg = LieConformalAlgebra::make(c.base.alg.name + "_ext", basis);
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    auto base_embed = [&](const ModElem &v, ModElem &out) {
        for (int t = 0; t < n; ++t)
            out.coords[t] += v.coords[t];
    };
    auto fiber_embed = [&](const ModElem &v, ModElem &out) {
        for (int t = 0; t < h; ++t)
            out.coords[n + t] += v.coords[t];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ModElem v(n + h);
            base_embed(c.base.alg.entry(i, j), v);
            fiber_embed(c.chi.at({i, j}), v);
            E.total.alg.entry(i, j) = v;
        }
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < h; ++a) {
            ModElem v(n + h), w(n + h);
            fiber_embed(c.rho.at({i, a}), v);
            fiber_embed(-c.rho.at({i, a}).subst(twist), w);
            E.total.alg.entry(i, n + a) = v;
            E.total.alg.entry(n + a, i) = w;
        }
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
            ModElem v(n + h);
            fiber_embed(c.fiber.alg.entry(a, b), v);
            E.total.alg.entry(n + a, n + b) = v;
        }
    // R = [[P, 0], [Phi, Q]]
    E.total.P = ConformalMap::block(c.base.P, ConformalMap::zero(n, h), c.Phi,
                                    c.fiber.P);
    E.incl = ConformalMap(n + h, h);
    for (int a = 0; a < h; ++a)
        E.incl.at(n + a, a) = Poly(1);
    E.proj = ConformalMap(n, n + h);
    for (int i = 0; i < n; ++i)
        E.proj.at(i, i) = Poly(1);
    E.section = ConformalMap(n + h, n);
    for (int i = 0; i < n; ++i)
        E.section.at(i, i) = Poly(1);
    return E;
}

Report check_extension(const Extension &E) {
    Report rep;
    rep.subject = "extension";
    int n = E.base.rank(), h = E.fiber.rank();
    Poly la = Poly::l(1), D = Poly::d();
    if (E.proj.compose(E.incl).is_zero())
        rep.pass("p-i-zero");
    else
        rep.fail("p-i-zero", "", "", "", "p o i != 0");
    if (E.proj.compose(E.section) == ConformalMap::identity(n))
        rep.pass("p-s-identity");
    else
        rep.fail("p-s-identity", "", "", "", "p o s != id");
    // i is bracket-preserving
    {
        bool ok = true;
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b) {
                ModElem fa = ModElem::basis(h, a), fbv = ModElem::basis(h, b);
                ModElem lhs =
                    bracket_eval(E.total.alg, E.incl.apply(fa), la,
                                 E.incl.apply(fbv), -D - la);
                ModElem rhs = E.incl.apply(
                    bracket_eval(E.fiber.alg, fa, la, fbv, -D - la));
                record(rep, "i-bracket", ok, idx2(a, b), lhs, rhs);
            }
        if (ok)
            rep.pass("i-bracket");
    }
    // R restricted to the fiber equals Q: R o i = i o Q
    if (E.total.P.compose(E.incl) == E.incl.compose(E.fiber.P))
        rep.pass("R-fiber-Q");
    else
        rep.fail("R-fiber-Q", "", "", "", "R|_H != Q");
    // the projection intertwines R and P
    if (E.proj.compose(E.total.P) == E.base.P.compose(E.proj))
        rep.pass("p-R-P");
    else
        rep.fail("p-R-P", "", "", "", "p R != P p");
    return rep;
}

namespace {

// Split a total-algebra element into base and fiber parts; the base part
// must vanish for fiber-valued quantities.
ModElem fiber_part_checked(const ModElem &v, int n, int h,
                           const char *what) {
    for (int t = 0; t < n; ++t)
        if (!v.coords[t].is_zero())
            throw std::invalid_argument(
                std::string(what) +
                " escapes the fiber block (non-extension input)");
    ModElem out(h);
    for (int t = 0; t < h; ++t)
        out.coords[t] = v.coords[n + t];
    return out;
}

} // namespace

NonAbCocycle extract_cocycle(const Extension &E) {
    return extract_cocycle(E, E.section);
}

NonAbCocycle extract_cocycle(const Extension &E, const ConformalMap &s) {
    int n = E.base.rank(), h = E.fiber.rank();
    Poly la = Poly::l(1), D = Poly::d();
    NonAbCocycle c;
    c.base = E.base;
    c.fiber = E.fiber;
    c.chi = MultiTable({n, n}, h);
    c.rho = MultiTable({n, h}, h);
    c.Phi = ConformalMap(h, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
            ModElem v = bracket_eval(E.total.alg, s.apply(x), la, s.apply(y),
                                     -D - la) -
                        s.apply(bracket_eval(E.base.alg, x, la, y, -D - la));
            c.chi.at({i, j}) = fiber_part_checked(v, n, h, "chi value");
        }
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < h; ++a) {
            ModElem x = ModElem::basis(n, i);
            ModElem m = E.incl.apply(ModElem::basis(h, a));
            ModElem v = bracket_eval(E.total.alg, s.apply(x), la, m, -D - la);
            c.rho.at({i, a}) = fiber_part_checked(v, n, h, "rho value");
        }
    for (int i = 0; i < n; ++i) {
        ModElem x = ModElem::basis(n, i);
        ModElem v = E.total.P.apply(s.apply(x)) -
                    s.apply(E.base.P.apply(x));
        ModElem col = fiber_part_checked(v, n, h, "Phi value");
        for (int a = 0; a < h; ++a)
            c.Phi.at(a, i) = col.coords[a];
    }
    return c;
}

Report check_equivalence(const NonAbCocycle &c, const NonAbCocycle &cp,
                         const ConformalMap &tau) {
    Report rep;
    rep.subject = "cocycle equivalence";
    int n = c.base.rank(), h = c.fiber.rank();
    if (cp.base.rank() != n || cp.fiber.rank() != h)
        throw std::invalid_argument("cocycles live over different algebras");
    Poly la = Poly::l(1), D = Poly::d();
    auto fb = [&](const ModElem &x, const Poly &sx, const ModElem &y,
                  const Poly &sy) {
        return bracket_eval(c.fiber.alg, x, sx, y, sy);
    };
    // (equivalent1): rho(x) h - rho'(x) h = [tau(x)_l h]
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < h; ++a) {
                ModElem lhs = c.rho.at({i, a}) - cp.rho.at({i, a});
                ModElem rhs = fb(tau.apply(ModElem::basis(n, i)), la,
                                 ModElem::basis(h, a), -D - la);
                record(rep, "equivalent1", ok, idx2(i, a), lhs, rhs);
            }
        if (ok)
            rep.pass("equivalent1");
    }
    // (equivalent2): chi - chi' = rho'(x) tau(y) - rho'(y)_{-d-l} tau(x)
    //                - tau([x_l y]) + [tau(x)_l tau(y)]
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
                ModElem tx = tau.apply(x), ty = tau.apply(y);
                ModElem lhs = c.chi.at({i, j}) - cp.chi.at({i, j});
                ModElem rhs =
                    eval_table(cp.rho, {{x, la}, {ty, -D - la}}) -
                    eval_table(cp.rho, {{y, -D - la}, {tx, la}}) -
                    tau.apply(
                        bracket_eval(c.base.alg, x, la, y, -D - la)) +
                    fb(tx, la, ty, -D - la);
                record(rep, "equivalent2", ok, idx2(i, j), lhs, rhs);
            }
        if (ok)
            rep.pass("equivalent2");
    }
    // (equivalent3): Phi - Phi' = Q tau - tau P
    {
        ConformalMap lhs = c.Phi - cp.Phi;
        ConformalMap rhs =
            c.fiber.P.compose(tau) - tau.compose(c.base.P);
        if (lhs == rhs)
            rep.pass("equivalent3");
        else
            rep.fail("equivalent3", "", "", "", "Phi - Phi' != Q tau - tau P");
    }
    return rep;
}

Report check_ext_equivalence(const Extension &E, const Extension &Ep,
                             const ConformalMap &tau_hom) {
    Report rep;
    rep.subject = "extension equivalence";
    int n = E.base.rank(), h = E.fiber.rank();
    int N = n + h;
    Poly la = Poly::l(1), D = Poly::d();
    if (tau_hom.rows != N || tau_hom.cols != N)
        throw std::invalid_argument("morphism dimension mismatch");
    // morphism of brackets
    {
        bool ok = true;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                ModElem u = ModElem::basis(N, i), v = ModElem::basis(N, j);
                ModElem lhs = tau_hom.apply(
                    bracket_eval(E.total.alg, u, la, v, -D - la));
                ModElem rhs = bracket_eval(Ep.total.alg, tau_hom.apply(u), la,
                                           tau_hom.apply(v), -D - la);
                record(rep, "morphism-bracket", ok, idx2(i, j), lhs, rhs);
            }
        if (ok)
            rep.pass("morphism-bracket");
    }
    if (tau_hom.compose(E.total.P) == Ep.total.P.compose(tau_hom))
        rep.pass("morphism-operator");
    else
        rep.fail("morphism-operator", "", "", "", "tau R != R' tau");
    if (tau_hom.compose(E.incl) == Ep.incl)
        rep.pass("fiber-identity");
    else
        rep.fail("fiber-identity", "", "", "", "tau o i != i'");
    if (Ep.proj.compose(tau_hom) == E.proj)
        rep.pass("projection-commutes");
    else
        rep.fail("projection-commutes", "", "", "", "p' o tau != p");
    return rep;
}

namespace {

Report check_algebra_automorphism(const LieConformalAlgebra &A,
                                  const ConformalMap &P,
                                  const ConformalMap &m,
                                  const std::string &prefix) {
    Report rep;
    rep.subject = prefix + "automorphism";
    Poly la = Poly::l(1), D = Poly::d();
    ConformalMap inv;
    if (m.inverse(inv))
        rep.pass(prefix + "invertible");
    else
        rep.fail(prefix + "invertible", "", "", "",
                 "determinant is not a nonzero constant");
    bool ok = true;
    int n = A.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
            ModElem lhs =
                m.apply(bracket_eval(A, x, la, y, -D - la));
            ModElem rhs = bracket_eval(A, m.apply(x), la, m.apply(y), -D - la);
            record(rep, prefix + "bracket", ok, idx2(i, j), lhs, rhs);
        }
    if (ok)
        rep.pass(prefix + "bracket");
    if (m.compose(P) == P.compose(m))
        rep.pass(prefix + "operator");
    else
        rep.fail(prefix + "operator", "", "", "",
                 "map does not commute with the averaging operator");
    return rep;
}

} // namespace

Report check_aut_pair(const AvgLca &fiber, const AvgLca &base,
                      const AutPair &ap) {
    Report rep;
    rep.subject = "automorphism pair";
    rep.merge(check_algebra_automorphism(fiber.alg, fiber.P, ap.alpha,
                                         "alpha-"));
    rep.merge(check_algebra_automorphism(base.alg, base.P, ap.beta, "beta-"));
    return rep;
}

NonAbCocycle transform_cocycle(const AutPair &ap, const NonAbCocycle &c) {
    int n = c.base.rank(), h = c.fiber.rank();
    ConformalMap binv, ainv;
    if (!ap.beta.inverse(binv))
        throw std::invalid_argument("beta is not invertible over C[d]");
    if (!ap.alpha.inverse(ainv))
        throw std::invalid_argument("alpha is not invertible over C[d]");
    Poly la = Poly::l(1), D = Poly::d();
    NonAbCocycle out;
    out.base = c.base;
    out.fiber = c.fiber;
    out.chi = MultiTable({n, n}, h);
    out.rho = MultiTable({n, h}, h);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.chi.at({i, j}) = ap.alpha.apply(eval_table(
                c.chi, {{binv.apply(ModElem::basis(n, i)), la},
                        {binv.apply(ModElem::basis(n, j)), -D - la}}));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < h; ++a)
            out.rho.at({i, a}) = ap.alpha.apply(eval_table(
                c.rho, {{binv.apply(ModElem::basis(n, i)), la},
                        {ainv.apply(ModElem::basis(h, a)), -D - la}}));
    out.Phi = ap.alpha.compose(c.Phi).compose(binv);
    return out;
}

Report wells_verify(const AutPair &ap, const Extension &E,
                    const ConformalMap &tau) {
    Report rep;
    rep.subject = "wells";
    rep.merge(check_aut_pair(E.fiber, E.base, ap));
    NonAbCocycle c = extract_cocycle(E);
    NonAbCocycle ct = transform_cocycle(ap, c);
    rep.merge(check_equivalence(ct, c, tau), "wells-");
    return rep;
}

Report check_total_automorphism(const Extension &E, const ConformalMap &gamma) {
    Report rep;
    rep.subject = "total automorphism";
    int n = E.base.rank(), h = E.fiber.rank();
    rep.merge(check_algebra_automorphism(E.total.alg, E.total.P, gamma,
                                         "gamma-"));
    // gamma preserves the fiber block
    bool ok = true;
    for (int a = 0; a < h; ++a)
        for (int t = 0; t < n; ++t)
            if (!gamma.at(t, n + a).is_zero())
                ok = false;
    if (ok)
        rep.pass("gamma-fiber-preserving");
    else
        rep.fail("gamma-fiber-preserving", "", "", "",
                 "gamma does not preserve the fiber");
    return rep;
}

AutPair pi_restrict(const Extension &E, const ConformalMap &gamma) {
    Report pre = check_total_automorphism(E, gamma);
    if (!pre.ok())
        throw std::invalid_argument(
            "gamma is not a fiber-preserving automorphism:\n" + pre.summary());
    int n = E.base.rank(), h = E.fiber.rank();
    AutPair out;
    out.alpha = ConformalMap(h, h);
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
            out.alpha.at(a, b) = gamma.at(n + a, n + b);
    out.beta = E.proj.compose(gamma).compose(E.section);
    return out;
}

namespace {

// Flatten a list of module elements into rational coordinates on the union
// of their monomials, for the linear solver.
struct LinearSystem {
    std::vector<std::vector<Rat>> rows; // augmented matrix [A | b]
    size_t unknowns = 0;

    void add(const std::vector<Rat> &coeffs, const Rat &rhs) {
        std::vector<Rat> row = coeffs;
        row.push_back(rhs);
        rows.push_back(std::move(row));
    }

    // Gaussian elimination; returns false when inconsistent.
    bool solve(std::vector<Rat> &out) {
        size_t m = rows.size();
        size_t ncols = unknowns;
        size_t rank = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < ncols && rank < m; ++col) {
            size_t piv = m;
            for (size_t r = rank; r < m; ++r)
                if (rows[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv == m)
                continue;
            std::swap(rows[rank], rows[piv]);
            Rat p = rows[rank][col];
            for (size_t cc = col; cc <= ncols; ++cc) {
                rows[rank][cc] /= p;
                rows[rank][cc].canonicalize();
            }
            for (size_t r = 0; r < m; ++r) {
                if (r == rank || rows[r][col] == 0)
                    continue;
                Rat f = rows[r][col];
                for (size_t cc = col; cc <= ncols; ++cc) {
                    rows[r][cc] -= f * rows[rank][cc];
                    rows[r][cc].canonicalize();
                }
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (size_t r = rank; r < m; ++r)
            if (rows[r][ncols] != 0)
                return false;
        out.assign(ncols, Rat(0));
        for (size_t r = 0; r < rank; ++r)
            out[pivot_col[r]] = rows[r][ncols];
        return true;
    }
};

std::vector<Poly> equivalence_residual(const NonAbCocycle &c,
                                       const NonAbCocycle &cp,
                                       const ConformalMap &tau) {
    // Residuals of (equivalent1)-(equivalent3) with an abelian fiber: the
    // fiber brackets vanish, so everything is affine in tau.
    int n = c.base.rank(), h = c.fiber.rank();
    Poly la = Poly::l(1), D = Poly::d();
    std::vector<Poly> out;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < h; ++a) {
            ModElem r = (c.rho.at({i, a}) - cp.rho.at({i, a}));
            for (int t = 0; t < h; ++t)
                out.push_back(r.coords[t]);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ModElem x = ModElem::basis(n, i), y = ModElem::basis(n, j);
            ModElem tx = tau.apply(x), ty = tau.apply(y);
            ModElem r =
                c.chi.at({i, j}) - cp.chi.at({i, j}) -
                eval_table(cp.rho, {{x, la}, {ty, -D - la}}) +
                eval_table(cp.rho, {{y, -D - la}, {tx, la}}) +
                tau.apply(bracket_eval(c.base.alg, x, la, y, -D - la));
            for (int t = 0; t < h; ++t)
                out.push_back(r.coords[t]);
        }
    {
        ConformalMap r = c.Phi - cp.Phi -
                         c.fiber.P.compose(tau) + tau.compose(c.base.P);
        for (const auto &p : r.entries)
            out.push_back(p);
    }
    return out;
}

} // namespace

std::optional<ConformalMap> tau_solve_abelian(const NonAbCocycle &c,
                                              const NonAbCocycle &cp,
                                              int degree_cap) {
    if (!c.fiber.alg.structure.is_zero())
        throw std::invalid_argument(
            "tau_solve_abelian requires an abelian fiber");
    int n = c.base.rank(), h = c.fiber.rank();
    int per_entry = degree_cap + 1;
    size_t unknowns = static_cast<size_t>(h) * n * per_entry;

    auto tau_from = [&](const std::vector<Rat> &coef) {
        ConformalMap tau(h, n);
        size_t u = 0;
        for (int a = 0; a < h; ++a)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < per_entry; ++k, ++u)
                    if (coef[u] != 0)
                        tau.at(a, i) += Poly(coef[u]) * Poly::d().pow(k);
        return tau;
    };

    std::vector<Poly> base_res =
        equivalence_residual(c, cp, ConformalMap::zero(h, n));
    std::vector<std::vector<Poly>> unit_res(unknowns);
    {
        std::vector<Rat> coef(unknowns, Rat(0));
        for (size_t u = 0; u < unknowns; ++u) {
            coef[u] = 1;
            unit_res[u] = equivalence_residual(c, cp, tau_from(coef));
            for (size_t t = 0; t < unit_res[u].size(); ++t)
                unit_res[u][t] -= base_res[t];
            coef[u] = 0;
        }
    }

    // Collect the monomial support of all residual polynomials.
    std::map<Mono, size_t, MonoGrlexGreater> mono_index;
    auto note = [&](const Poly &p) {
        for (const auto &[m, a] : p.terms())
            mono_index.emplace(m, 0);
    };
    for (const auto &p : base_res)
        note(p);
    for (const auto &v : unit_res)
        for (const auto &p : v)
            note(p);
    size_t nm = 0;
    for (auto &[m, idx] : mono_index)
        idx = nm++;

    LinearSystem sys;
    sys.unknowns = unknowns;
    size_t nres = base_res.size();
    for (size_t t = 0; t < nres; ++t) {
        // one equation per (residual position, monomial)
        std::map<size_t, std::vector<Rat>> eq; // mono -> coefficients
        auto touch = [&](size_t mi) -> std::vector<Rat> & {
            auto it = eq.find(mi);
            if (it == eq.end())
                it = eq.emplace(mi, std::vector<Rat>(unknowns, Rat(0))).first;
            return it->second;
        };
        std::map<size_t, Rat> rhs;
        for (const auto &[m, a] : base_res[t].terms()) {
            size_t mi = mono_index.at(m);
            touch(mi);
            rhs[mi] = -a;
        }
        for (size_t u = 0; u < unknowns; ++u)
            for (const auto &[m, a] : unit_res[u][t].terms()) {
                size_t mi = mono_index.at(m);
                touch(mi)[u] = a;
                if (!rhs.count(mi))
                    rhs[mi] = 0;
            }
        for (auto &[mi, coeffs] : eq)
            sys.add(coeffs, rhs.count(mi) ? rhs[mi] : Rat(0));
    }

    std::vector<Rat> solution;
    if (!sys.solve(solution))
        return std::nullopt;
    ConformalMap tau = tau_from(solution);
    if (!check_equivalence(c, cp, tau).ok())
        return std::nullopt;
    return tau;
}

} // namespace lca
