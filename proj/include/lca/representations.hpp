#pragma once

#include <array>

#include "lca/conformal.hpp"

namespace lca {

// Conformal representation: action table rho(e_i)_lambda f_a over C[d, l1],
// extended sesquilinearly.
struct ConformalRep {
    LieConformalAlgebra algebra;
    std::vector<std::string> module_basis;
    MultiTable action; // dims {n, m}, target rank m

    int module_rank() const { return static_cast<int>(module_basis.size()); }

    static ConformalRep make(LieConformalAlgebra A,
                             std::vector<std::string> module_basis);
};

// Representation of an averaging Lie conformal algebra: (rep, phi) together
// with the algebra operator P.
struct AvgRepTriple {
    ConformalRep rep;
    ConformalMap phi; // m x m
    ConformalMap P;   // n x n, the averaging operator on the algebra
};

// rho(x)_lambda v for a module element v with lambda-polynomial coefficients.
ModElem rep_apply(const ConformalRep &R, const ModElem &x, const Poly &slot,
                  const ModElem &v);

Report check_rep(const ConformalRep &R);
ConformalRep adjoint_rep(const LieConformalAlgebra &A);
Report check_avg_rep(const AvgRepTriple &T);

// Semi-direct sum L x| M with bracket ([x_l y], rho(x)_l n - rho(y)_{-d-l} m).
LieConformalAlgebra semidirect(const LieConformalAlgebra &A,
                               const ConformalRep &R);

// Embedding tensor (relative averaging operator): [T(m)_l T(n)] = T(rho(Tm)_l n).
Report check_embedding_tensor(const ConformalRep &R, const ConformalMap &T);

// Lift of T to P_T(x, m) = (T(m), 0) on the semidirect sum.
std::pair<LieConformalAlgebra, ConformalMap>
lift_embedding_tensor(const ConformalRep &R, const ConformalMap &T);

// The three operators of the semidirect sum of an averaging representation:
// P1(x+m) = x, P2(x+m) = phi(m), P3(x+m) = P(x) + phi(m).
std::array<ConformalMap, 3> prop_2_10_operators(const AvgRepTriple &T);

// Tensor square of a rank-1 algebra: the action closes on the rank-1 tensor
// module exactly when the bracket has d-degree <= 1, which covers Virasoro.
AvgRepTriple tensor2_rep(const LieConformalAlgebra &A, const ConformalMap &P);

} // namespace lca
