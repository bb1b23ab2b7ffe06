#include "lca/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace lca {

LieConformalAlgebra LieConformalAlgebra::make(std::string name,
                                              std::vector<std::string> basis) {
    LieConformalAlgebra A;
    A.name = std::move(name);
    A.basis = std::move(basis);
    int n = A.rank();
    A.structure = MultiTable({n, n}, n);
    return A;
}

std::string tuple_name(const LieConformalAlgebra &A, const std::vector<int> &t) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < t.size(); ++k) {
        if (k)
            os << ",";
        os << A.basis[t[k]];
    }
    os << ")";
    return os.str();
}

ModElem bracket_eval(const LieConformalAlgebra &A, const ModElem &x,
                     const ModElem &y, int slot) {
    Poly s = Poly::l(slot);
    return bracket_eval(A, x, s, y, -Poly::d() - s);
}

ModElem bracket_eval(const LieConformalAlgebra &A, const ModElem &x,
                     const Poly &sx, const ModElem &y, const Poly &sy) {
    if (x.rank() != A.rank() || y.rank() != A.rank())
        throw std::invalid_argument("rank mismatch in bracket_eval");
    return eval_table(A.structure, {{x, sx}, {y, sy}});
}

Report check_skew(const LieConformalAlgebra &A) {
    Report rep;
    rep.subject = A.name;
    int n = A.rank();
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    bool all = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ModElem lhs = A.entry(i, j);
            ModElem rhs = -A.entry(j, i).subst(twist);
            if (lhs != rhs) {
                all = false;
                rep.fail("skew", tuple_name(A, {i, j}), lhs.to_string(),
                         rhs.to_string(), (lhs - rhs).to_string());
            }
        }
    }
    if (all)
        rep.pass("skew");
    return rep;
}

Report check_jacobi(const LieConformalAlgebra &A) {
    Report rep;
    rep.subject = A.name;
    int n = A.rank();
    Poly la = Poly::l(1), mu = Poly::l(2);
    Poly lm = -Poly::d() - la - mu; // slot of the third argument
    bool all = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                ModElem x = ModElem::basis(n, i);
                ModElem y = ModElem::basis(n, j);
                ModElem z = ModElem::basis(n, k);
                ModElem inner_yz = bracket_eval(A, y, mu, z, lm);
                ModElem t1 = bracket_eval(A, x, la, inner_yz, -Poly::d() - la);
                ModElem inner_xz = bracket_eval(A, x, la, z, lm);
                ModElem t2 = bracket_eval(A, y, mu, inner_xz, -Poly::d() - mu);
                ModElem inner_xy = bracket_eval(A, x, la, y, -Poly::d() - la);
                ModElem t3 = bracket_eval(A, inner_xy, la + mu, z, lm);
                ModElem res = t1 - t2 - t3;
                if (!res.is_zero()) {
                    all = false;
                    rep.fail("jacobi", tuple_name(A, {i, j, k}),
                             (t1 - t2).to_string(), t3.to_string(),
                             res.to_string());
                }
            }
        }
    }
    if (all)
        rep.pass("jacobi");
    return rep;
}

Report check_averaging(const LieConformalAlgebra &A, const ConformalMap &P,
                       bool two_sided) {
    Report rep;
    rep.subject = A.name;
    int n = A.rank();
    if (P.rows != n || P.cols != n)
        throw std::invalid_argument("operator dimension mismatch");
    bool all = true, all2 = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ModElem x = ModElem::basis(n, i);
            ModElem y = ModElem::basis(n, j);
            ModElem px = P.apply(x), py = P.apply(y);
            ModElem lhs = P.apply(bracket_eval(A, px, y, 1));
            ModElem rhs = bracket_eval(A, px, py, 1);
            if (lhs != rhs) {
                all = false;
                rep.fail("averaging", tuple_name(A, {i, j}), lhs.to_string(),
                         rhs.to_string(), (lhs - rhs).to_string());
            }
            if (two_sided) {
                ModElem lhs2 = P.apply(bracket_eval(A, x, py, 1));
                if (lhs2 != rhs) {
                    all2 = false;
                    rep.fail("averaging-two-sided", tuple_name(A, {i, j}),
                             lhs2.to_string(), rhs.to_string(),
                             (lhs2 - rhs).to_string());
                }
            }
        }
    }
    if (all)
        rep.pass("averaging");
    if (two_sided && all2)
        rep.pass("averaging-two-sided");
    return rep;
}

LieConformalAlgebra induced_bracket(const LieConformalAlgebra &A,
                                    const ConformalMap &P) {
    if (P.rows != A.rank() || P.cols != A.rank())
        throw std::invalid_argument("operator dimension mismatch");
    LieConformalAlgebra B =
        LieConformalAlgebra::make(A.name + "_P", A.basis);
    int n = A.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B.entry(i, j) = bracket_eval(A, P.apply(ModElem::basis(n, i)),
                                         ModElem::basis(n, j), 1);
    return B;
}

Report check_assoc(const AssocConformalAlgebra &B) {
    Report rep;
    rep.subject = B.name;
    int n = B.rank();
    Poly la = Poly::l(1), mu = Poly::l(2);
    Poly nu = -Poly::d() - la - mu;
    bool all = true;
    auto prod = [&](const ModElem &a, const Poly &sa, const ModElem &b,
                    const Poly &sb) {
        return eval_table(B.structure, {{a, sa}, {b, sb}});
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ModElem x = ModElem::basis(n, i);
                ModElem y = ModElem::basis(n, j);
                ModElem z = ModElem::basis(n, k);
                // (x a_lambda y) a_{lambda+mu} z = x a_lambda (y a_mu z)
                ModElem lhs = prod(prod(x, la, y, -Poly::d() - la), la + mu, z, nu);
                ModElem rhs = prod(x, la, prod(y, mu, z, nu), -Poly::d() - la);
                if (lhs != rhs) {
                    all = false;
                    rep.fail("assoc", "(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," +
                                          std::to_string(k) + ")",
                             lhs.to_string(), rhs.to_string(),
                             (lhs - rhs).to_string());
                }
            }
    if (all)
        rep.pass("assoc");
    return rep;
}

LieConformalAlgebra commutator_lca(const AssocConformalAlgebra &B) {
    LieConformalAlgebra A = LieConformalAlgebra::make(B.name + "_comm", B.basis);
    int n = B.rank();
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A.entry(i, j) =
                B.structure.at({i, j}) - B.structure.at({j, i}).subst(twist);
    return A;
}

std::pair<LieConformalAlgebra, std::vector<ConformalMap>>
direct_sum_example(const LieConformalAlgebra &A, int n) {
    if (n < 2)
        throw std::invalid_argument("direct_sum_example needs n >= 2");
    int r = A.rank();
    std::vector<std::string> basis;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < r; ++k)
            basis.push_back(A.basis[k] + std::to_string(c + 1));
    LieConformalAlgebra S = LieConformalAlgebra::make(
        A.name + "_sum" + std::to_string(n), basis);
    std::map<int, Poly> twist{{var_l(1), -Poly::d() - Poly::l(1)}};
    auto put = [&](int copy, const ModElem &val, ModElem &out) {
        for (int t = 0; t < r; ++t)
            out.coords[copy * r + t] += val.coords[t];
    };
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < r; ++k)
            for (int c2 = 0; c2 < n; ++c2)
                for (int k2 = 0; k2 < r; ++k2) {
                    ModElem val(n * r);
                    if (c == 0 && c2 == 0) {
                        put(0, A.entry(k, k2), val);
                    } else if (c == 0 && c2 >= 1) {
                        put(c2, A.entry(k, k2), val);
                    } else if (c >= 1 && c2 == 0) {
                        put(c, -A.entry(k2, k).subst(twist), val);
                    }
                    S.entry(c * r + k, c2 * r + k2) = val;
                }
    std::vector<ConformalMap> ops;
    // P(x1..xn) = (sum_{i>=2} x_i, 0, ..., 0)
    ConformalMap P(n * r, n * r);
    for (int c = 1; c < n; ++c)
        for (int k = 0; k < r; ++k)
            P.at(k, c * r + k) = Poly(1);
    ops.push_back(P);
    // P_i(x1..xn) = (x_i, 0, ..., 0) for i >= 2
    for (int c = 1; c < n; ++c) {
        ConformalMap Pi(n * r, n * r);
        for (int k = 0; k < r; ++k)
            Pi.at(k, c * r + k) = Poly(1);
        ops.push_back(Pi);
    }
    return {S, ops};
}

LieConformalAlgebra virasoro() {
    LieConformalAlgebra A = LieConformalAlgebra::make("virasoro", {"L"});
    ModElem v(1);
    v.coords[0] = Poly::d() + Poly(2) * Poly::l(1);
    A.entry(0, 0) = v;
    return A;
}

LieConformalAlgebra cur_sl2() {
    LieConformalAlgebra A = LieConformalAlgebra::make("cur_sl2", {"E", "H", "F"});
    int E = 0, H = 1, F = 2;
    auto put = [&](int i, int j, int k, long c) {
        ModElem v(3);
        v.coords[k] = Poly(c);
        A.entry(i, j) = v;
    };
    put(E, F, H, 1);
    put(F, E, H, -1);
    put(H, E, E, 2);
    put(E, H, E, -2);
    put(H, F, F, -2);
    put(F, H, F, 2);
    return A;
}

LieConformalAlgebra abelian(int n) {
    std::vector<std::string> basis;
    for (int i = 0; i < n; ++i)
        basis.push_back("A" + std::to_string(i + 1));
    return LieConformalAlgebra::make("abelian_" + std::to_string(n), basis);
}

} // namespace lca
