#include "lca/representations.hpp"

#include <stdexcept>

namespace lca {

ConformalRep ConformalRep::make(LieConformalAlgebra A,
                                std::vector<std::string> module_basis) {
    ConformalRep R;
    R.algebra = std::move(A);
    R.module_basis = std::move(module_basis);
    R.action = MultiTable({R.algebra.rank(), R.module_rank()}, R.module_rank());
    return R;
}

ModElem rep_apply(const ConformalRep &R, const ModElem &x, const Poly &slot,
                  const ModElem &v) {
    return eval_table(R.action, {{x, slot}, {v, -Poly::d() - slot}});
}

Report check_rep(const ConformalRep &R) {
    Report rep;
    rep.subject = R.algebra.name + " rep";
    int n = R.algebra.rank(), m = R.module_rank();
    Poly la = Poly::l(1), mu = Poly::l(2);
    bool all = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a) {
                ModElem x = ModElem::basis(n, i);
                ModElem y = ModElem::basis(n, j);
                ModElem f = ModElem::basis(m, a);
                ModElem w = bracket_eval(R.algebra, x, la, y, -Poly::d() - la);
                ModElem lhs = rep_apply(R, w, la + mu, f);
                ModElem rhs = rep_apply(R, x, la, rep_apply(R, y, mu, f)) -
                              rep_apply(R, y, mu, rep_apply(R, x, la, f));
                if (lhs != rhs) {
                    all = false;
                    rep.fail("rep-composition",
                             "(" + R.algebra.basis[i] + "," + R.algebra.basis[j] +
                                 "," + R.module_basis[a] + ")",
                             lhs.to_string(), rhs.to_string(),
                             (lhs - rhs).to_string());
                }
            }
    if (all)
        rep.pass("rep-composition");
    return rep;
}

ConformalRep adjoint_rep(const LieConformalAlgebra &A) {
    ConformalRep R = ConformalRep::make(A, A.basis);
    R.action = A.structure;
    return R;
}

Report check_avg_rep(const AvgRepTriple &T) {
    Report rep;
    rep.subject = T.rep.algebra.name + " avg-rep";
    int n = T.rep.algebra.rank(), m = T.rep.module_rank();
    if (T.phi.rows != m || T.phi.cols != m || T.P.rows != n || T.P.cols != n)
        throw std::invalid_argument("avg-rep operator dimension mismatch");
    Poly la = Poly::l(1);
    bool eq1 = true, eq2 = true;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a) {
            ModElem x = ModElem::basis(n, i);
            ModElem f = ModElem::basis(m, a);
            ModElem px = T.P.apply(x);
            ModElem phif = T.phi.apply(f);
            ModElem e1 = rep_apply(T.rep, px, la, phif);
            ModElem e2 = T.phi.apply(rep_apply(T.rep, px, la, f));
            ModElem e3 = T.phi.apply(rep_apply(T.rep, x, la, phif));
            std::string tup = "(" + T.rep.algebra.basis[i] + "," +
                              T.rep.module_basis[a] + ")";
            if (e1 != e2) {
                eq1 = false;
                rep.fail("eqrep-1", tup, e1.to_string(), e2.to_string(),
                         (e1 - e2).to_string());
            }
            if (e2 != e3) {
                eq2 = false;
                rep.fail("eqrep-2", tup, e2.to_string(), e3.to_string(),
                         (e2 - e3).to_string());
            }
        }
    if (eq1)
        rep.pass("eqrep-1");
    if (eq2)
        rep.pass("eqrep-2");
    return rep;
}

LieConformalAlgebra semidirect(const LieConformalAlgebra &A,
                               const ConformalRep &R) {
    int n = A.rank(), m = R.module_rank();
    std::vector<std::string> basis = A.basis;
    basis.insert(basis.end(), R.module_basis.begin(), R.module_basis.end());
    LieConformalAlgebra S =
        LieConformalAlgebra::make(A.name + "_semidirect", basis);
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    auto alg_part = [&](const ModElem &v) {
        ModElem out(n + m);
        for (int t = 0; t < n; ++t)
            out.coords[t] = v.coords[t];
        return out;
    };
    auto mod_part = [&](const ModElem &v) {
        ModElem out(n + m);
        for (int t = 0; t < m; ++t)
            out.coords[n + t] = v.coords[t];
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            S.entry(i, j) = alg_part(A.entry(i, j));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b) {
            S.entry(i, n + b) = mod_part(R.action.at({i, b}));
            S.entry(n + b, i) = mod_part(-R.action.at({i, b}).subst(twist));
        }
    return S;
}

Report check_embedding_tensor(const ConformalRep &R, const ConformalMap &T) {
    Report rep;
    rep.subject = R.algebra.name + " embedding-tensor";
    int n = R.algebra.rank(), m = R.module_rank();
    if (T.rows != n || T.cols != m)
        throw std::invalid_argument("embedding tensor dimension mismatch");
    Poly la = Poly::l(1);
    bool all = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            ModElem fa = ModElem::basis(m, a), fb = ModElem::basis(m, b);
            ModElem ta = T.apply(fa), tb = T.apply(fb);
            ModElem lhs = bracket_eval(R.algebra, ta, la, tb, -Poly::d() - la);
            ModElem rhs = T.apply(rep_apply(R, ta, la, fb));
            if (lhs != rhs) {
                all = false;
                rep.fail("embedding-tensor",
                         "(" + R.module_basis[a] + "," + R.module_basis[b] + ")",
                         lhs.to_string(), rhs.to_string(),
                         (lhs - rhs).to_string());
            }
        }
    if (all)
        rep.pass("embedding-tensor");
    return rep;
}

std::pair<LieConformalAlgebra, ConformalMap>
lift_embedding_tensor(const ConformalRep &R, const ConformalMap &T) {
    int n = R.algebra.rank(), m = R.module_rank();
    LieConformalAlgebra S = semidirect(R.algebra, R);
    ConformalMap PT = ConformalMap::block(ConformalMap::zero(n, n), T,
                                          ConformalMap::zero(m, n),
                                          ConformalMap::zero(m, m));
    return {S, PT};
}

std::array<ConformalMap, 3> prop_2_10_operators(const AvgRepTriple &T) {
    int n = T.rep.algebra.rank(), m = T.rep.module_rank();
    ConformalMap P1 = ConformalMap::block(
        ConformalMap::identity(n), ConformalMap::zero(n, m),
        ConformalMap::zero(m, n), ConformalMap::zero(m, m));
    ConformalMap P2 = ConformalMap::block(
        ConformalMap::zero(n, n), ConformalMap::zero(n, m),
        ConformalMap::zero(m, n), T.phi);
    ConformalMap P3 =
        ConformalMap::block(T.P, ConformalMap::zero(n, m),
                            ConformalMap::zero(m, n), T.phi);
    return {P1, P2, P3};
}

AvgRepTriple tensor2_rep(const LieConformalAlgebra &A, const ConformalMap &P) {
    if (A.rank() != 1)
        throw std::invalid_argument("tensor2_rep supports rank-1 algebras");
    const Poly &q = A.entry(0, 0).coords[0];
    const Poly &p = P.at(0, 0);
    if (q.degree_in(VAR_D) > 1 || p.degree_in(VAR_D) > 1)
        throw std::invalid_argument(
            "tensor2_rep needs d-degree <= 1 in bracket and operator");
    // q = a*d + r(l1): action on the tensor generator is a*d + 2*r(l1).
    std::map<int, Poly> killd{{VAR_D, Poly()}};
    Poly r = q.subst(killd);
    Poly a = q - r; // a*d
    Poly action = a + r * Rat(2);
    Poly pr = p.subst(killd);
    Poly pa = p - pr;
    Poly phi = pa + pr * Rat(2);

    ConformalRep R = ConformalRep::make(A, {A.basis[0] + A.basis[0]});
    ModElem v(1);
    v.coords[0] = action;
    R.action.at({0, 0}) = v;
    AvgRepTriple T;
    T.rep = R;
    T.phi = ConformalMap(1, 1);
    T.phi.at(0, 0) = phi;
    T.P = P;
    return T;
}

} // namespace lca
