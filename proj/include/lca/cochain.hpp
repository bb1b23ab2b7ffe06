#pragma once

#include "lca/representations.hpp"

namespace lca {

// Degree-p cochain of an algebra with coefficients in a module: a value over
// C[d, l1..l_{p-1}] for each p-tuple of algebra basis indices.
struct Cochain {
    int degree = 0;
    int alg_rank = 0;
    int module_rank = 0;
    MultiTable values; // dims = {n,...,n} (p times), target rank m

    static Cochain make(int degree, int alg_rank, int module_rank);
    bool is_zero() const { return values.is_zero(); }
    bool operator==(const Cochain &o) const {
        return degree == o.degree && values == o.values;
    }
    Cochain operator+(const Cochain &o) const;
    Cochain operator-(const Cochain &o) const;
    Cochain operator-() const;
};

// Pair (f, g) in C^p_AL = C^p + C^{p-1}_AO.
struct CochainPair {
    Cochain f; // degree p
    Cochain g; // degree p-1
    bool is_zero() const { return f.is_zero() && g.is_zero(); }
    bool operator==(const CochainPair &o) const { return f == o.f && g == o.g; }
};

// Shared context for cochain calculus: the algebra, the coefficient action,
// and the operators P (on the algebra) and phi (on the module).
struct CochainContext {
    LieConformalAlgebra alg;
    MultiTable action; // dims {n, m}
    int module_rank = 0;
    ConformalMap P;
    ConformalMap phi;

    static CochainContext adjoint(const LieConformalAlgebra &A,
                                  const ConformalMap &P, const ConformalMap &phi);
    static CochainContext adjoint(const LieConformalAlgebra &A);
    static CochainContext with_rep(const ConformalRep &R, const ConformalMap &P,
                                   const ConformalMap &phi);

    ModElem act(const ModElem &x, const Poly &slot, const ModElem &v) const;
};

// Evaluate a stored cochain on explicit (element, slot) arguments.
ModElem eval_cochain(const Cochain &f, const std::vector<SlotArg> &args);

// Twisted S_p action on raw tables: permute argument slots and values
// simultaneously, the last slot mapping to -d - (sum of the others).
Cochain cochain_permuted(const Cochain &f, const std::vector<int> &perm);
int perm_sign(const std::vector<int> &perm);

// Exhaustive check of the twisted skew-symmetry for p <= 4.
Report check_cochain(const Cochain &f, const std::string &subject = "cochain");

// (1/p!) sum of sign(tau) tau.raw over S_p; reports post hoc whether the
// result actually satisfies the skew condition.
std::pair<Cochain, Report> skew_symmetrize(const Cochain &raw);

std::string var_bound_error(const Cochain &f);

} // namespace lca
