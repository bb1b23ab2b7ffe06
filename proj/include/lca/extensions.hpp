#pragma once

#include <optional>

#include "lca/representations.hpp"

namespace lca {

// Averaging Lie conformal algebra as a unit: algebra + operator.
struct AvgLca {
    LieConformalAlgebra alg;
    ConformalMap P;
    int rank() const { return alg.rank(); }
};

// Non-abelian 2-cocycle of a base averaging algebra with values in a fiber
// averaging algebra: (chi, rho, Phi).
struct NonAbCocycle {
    AvgLca base;  // (L, P), rank n
    AvgLca fiber; // (H, Q), rank h
    MultiTable chi; // {n,n} -> h, over C[d,l1]
    MultiTable rho; // {n,h} -> h, over C[d,l1]
    ConformalMap Phi; // h x n, d-only

    bool same_tables(const NonAbCocycle &o) const {
        return chi == o.chi && rho == o.rho && Phi == o.Phi;
    }
};

// Non-abelian extension with the block decomposition E = L + H, the
// canonical inclusion/projection, and an explicit section.
struct Extension {
    AvgLca base;
    AvgLca fiber;
    AvgLca total;         // rank n + h, fiber in the trailing block
    ConformalMap incl;    // (n+h) x h, canonical [0; Id]
    ConformalMap proj;    // n x (n+h), canonical [Id, 0]
    ConformalMap section; // (n+h) x n with proj o section = Id
};

// Pair of automorphisms (alpha on the fiber, beta on the base).
struct AutPair {
    ConformalMap alpha;
    ConformalMap beta;
};

Report check_cocycle(const NonAbCocycle &c);

// Builds the extension with bracket
//   ([x_l y], rho(x)_l k - rho(y)_{-d-l} h + chi_l(x,y) + [h_l k])
// and operator R(x,h) = (P(x), Q(h) + Phi(x)); canonical section s(x) = (x, 0).
Extension build_extension(const NonAbCocycle &c);

// Structural invariants of an extension (p o i = 0, p o s = Id, i is
// bracket- and operator-preserving, R restricted to the fiber equals Q).
Report check_extension(const Extension &E);

// Extract (chi, rho, Phi) from an extension through its section. Throws if a
// value escapes the fiber block.
NonAbCocycle extract_cocycle(const Extension &E);
NonAbCocycle extract_cocycle(const Extension &E, const ConformalMap &section);

// Equivalence of cocycles witnessed by tau: L -> H.
Report check_equivalence(const NonAbCocycle &c, const NonAbCocycle &cp,
                         const ConformalMap &tau);

// Equivalence of extensions witnessed by a morphism E -> E'.
Report check_ext_equivalence(const Extension &E, const Extension &Ep,
                             const ConformalMap &tau_hom);

Report check_aut_pair(const AvgLca &fiber, const AvgLca &base,
                      const AutPair &ap);

// (chi, rho, Phi) -> (alpha chi (b^-1, b^-1), alpha rho(b^-1 x) a^-1, a Phi b^-1).
NonAbCocycle transform_cocycle(const AutPair &ap, const NonAbCocycle &c);

// Wells criterion: the pair (alpha, beta) is inducible iff the transformed
// cocycle is equivalent to the original; tau is the offered witness.
Report wells_verify(const AutPair &ap, const Extension &E,
                    const ConformalMap &tau);

// Pi: restrict an automorphism gamma of the total algebra to (gamma|_H, p gamma s).
AutPair pi_restrict(const Extension &E, const ConformalMap &gamma);

// Check that gamma is an averaging-algebra automorphism of the total algebra
// preserving the fiber block.
Report check_total_automorphism(const Extension &E, const ConformalMap &gamma);

// Bounded-degree linear solver for the witness tau when the fiber bracket is
// identically zero. Returns std::nullopt when no witness of d-degree at most
// degree_cap exists. Throws on a non-abelian fiber.
std::optional<ConformalMap> tau_solve_abelian(const NonAbCocycle &c,
                                              const NonAbCocycle &cp,
                                              int degree_cap);

} // namespace lca
