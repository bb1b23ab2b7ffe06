#pragma once

#include "lca/cohomology.hpp"

namespace lca {

// 2-term L-infinity conformal algebra: complex d: L1 -> L0 with the binary
// brackets and the ternary homotopy l3. The L1xL1 bracket is identically
// zero and the L1xL0 bracket is derived from bracket01 by the skew rule, so
// neither is stored.
struct TwoTermLInf {
    std::vector<std::string> basis0, basis1;
    ConformalMap d;      // L1 -> L0 (rows n0, cols n1)
    MultiTable bracket00; // {n0,n0} -> n0
    MultiTable bracket01; // {n0,n1} -> n1
    MultiTable l3;        // {n0,n0,n0} -> n1, over C[d,l1,l2]

    int n0() const { return static_cast<int>(basis0.size()); }
    int n1() const { return static_cast<int>(basis1.size()); }

    static TwoTermLInf make(std::vector<std::string> basis0,
                            std::vector<std::string> basis1);

    ModElem b00(const ModElem &x, const Poly &sx, const ModElem &y,
                const Poly &sy) const;
    ModElem b01(const ModElem &x, const Poly &sx, const ModElem &m,
                const Poly &sm) const;
    // [[m_s x]] := -[[x_{-d-s} m]]
    ModElem b10(const ModElem &m, const Poly &sm, const ModElem &x,
                const Poly &sx) const;
    ModElem l3v(const ModElem &x, const Poly &sx, const ModElem &y,
                const Poly &sy, const ModElem &z, const Poly &sz) const;

    bool operator==(const TwoTermLInf &o) const {
        return d == o.d && bracket00 == o.bracket00 &&
               bracket01 == o.bracket01 && l3 == o.l3;
    }
};

// Homotopy averaging operator (P0, P1, P2).
struct HomotopyAvg {
    ConformalMap P0; // n0 x n0
    ConformalMap P1; // n1 x n1
    MultiTable P2;   // {n0,n0} -> n1

    bool operator==(const HomotopyAvg &o) const {
        return P0 == o.P0 && P1 == o.P1 && P2 == o.P2;
    }
};

// Morphism (f0, f1, f2) between two-term structures.
struct TwoTermMorphism {
    ConformalMap f0; // n0 -> n0'
    ConformalMap f1; // n1 -> n1'
    MultiTable f2;   // {n0,n0} -> n1'
};

// Crossed module of averaging Lie conformal algebras.
struct CrossedModule {
    LieConformalAlgebra up;   // L1
    ConformalMap P1;
    LieConformalAlgebra down; // L0
    ConformalMap P0;
    ConformalMap d;           // up -> down
    MultiTable action;        // {n0,n1} -> n1
};

enum class TwoTermClass { Skeletal, Strict, Both, Neither };
std::string to_string(TwoTermClass c);

// L1-L8 as exact polynomial identities (plus the stored-table skew checks).
Report check_2term(const TwoTermLInf &T);
// A1-A5, with the double-equality lines of A3/A4 tested as separate items.
Report check_homotopy_avg(const TwoTermLInf &T, const HomotopyAvg &P);
// H1-H5.
Report check_morphism(const TwoTermLInf &T, const TwoTermLInf &Tp,
                      const TwoTermMorphism &M);

TwoTermClass classify(const TwoTermLInf &T, const HomotopyAvg &P);

// The cochain context of a skeletal or strict datum: algebra (L0, bracket00)
// with operator P0, module (L1, bracket01-action) with phi = P1.
CochainContext two_term_context(const TwoTermLInf &T, const HomotopyAvg &P);

// Skeletal datum -> d_AL-closed 3-cocycle pair. The pair is (l3, -P2):
// (A5) makes delta_AO(P2) equal xi(l3), so the sign on the second component
// is what d_AL(f, g) = (delta f, -xi f - delta_AO g) annihilates.
CochainPair skeletal_to_cocycle(const TwoTermLInf &T, const HomotopyAvg &P);

// Closed pair -> skeletal datum over the given context; inverse of the above.
std::pair<TwoTermLInf, HomotopyAvg>
cocycle_to_skeletal(const CochainContext &ctx,
                    const std::vector<std::string> &basis0,
                    const std::vector<std::string> &basis1,
                    const CochainPair &pair);

// Witnessed equivalence of two skeletal data over the same brackets and
// operators: their cocycle pairs differ by d_AL of the witness.
Report skeletal_equiv_check(const TwoTermLInf &T, const HomotopyAvg &P,
                            const TwoTermLInf &Tp, const HomotopyAvg &Pp,
                            const Cochain &f_witness,
                            const ConformalMap &xi_witness);

Report check_crossed_module(const CrossedModule &C);

CrossedModule strict_to_crossed(const TwoTermLInf &T, const HomotopyAvg &P);
std::pair<TwoTermLInf, HomotopyAvg> crossed_to_strict(const CrossedModule &C);

// (L0 + L1, P0 + P1) with the crossed-module bracket.
std::pair<LieConformalAlgebra, ConformalMap>
crossed_direct_sum(const CrossedModule &C);

// Strict-datum route of the same direct sum, for the consistency property.
std::pair<LieConformalAlgebra, ConformalMap>
strict_direct_sum(const TwoTermLInf &T, const HomotopyAvg &P);

// Builtins: the strict datum (L =Id=> L, ad) of an averaging algebra, and
// the kernel crossed module of a direct-product projection.
std::pair<TwoTermLInf, HomotopyAvg> strict_from_avg(const LieConformalAlgebra &A,
                                                    const ConformalMap &P);
CrossedModule crossed_id_ad(const LieConformalAlgebra &A, const ConformalMap &P);
CrossedModule crossed_kernel_example(const LieConformalAlgebra &A);

} // namespace lca
