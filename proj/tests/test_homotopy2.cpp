#include <doctest.h>

#include <set>

#include "lca/homotopy2.hpp"
#include "test_support.hpp"

using namespace lca;
using namespace lca::testsupport;

namespace {

// Names of the failing checks in a report.
std::set<std::string> failures(const Report &r) {
    std::set<std::string> out;
    for (const auto &it : r.items)
        if (!it.pass)
            out.insert(it.check);
    return out;
}

TwoTermLInf zero_two_term(int n0, int n1) {
    std::vector<std::string> b0, b1;
    for (int i = 0; i < n0; ++i)
        b0.push_back("x" + std::to_string(i));
    for (int i = 0; i < n1; ++i)
        b1.push_back("m" + std::to_string(i));
    return TwoTermLInf::make(b0, b1);
}

HomotopyAvg scalar_avg(const TwoTermLInf &T, const Rat &c) {
    HomotopyAvg P;
    P.P0 = ConformalMap::scalar(T.n0(), c);
    P.P1 = ConformalMap::scalar(T.n1(), c);
    P.P2 = MultiTable({T.n0(), T.n0()}, T.n1());
    return P;
}

Poly skew_u() { return Poly::d() + Rat(2) * Poly::l(1); }

// The Vandermonde (l1-l2)(l1-l3)(l2-l3) with l3 = -d-l1-l2: the unique
// twisted-skew degree-3 value over a rank-1 algebra, up to scale.
Poly vandermonde() {
    Poly l3s = -Poly::d() - Poly::l(1) - Poly::l(2);
    return (Poly::l(1) - Poly::l(2)) * (Poly::l(1) - l3s) *
           (Poly::l(2) - l3s);
}

// Vandermonde times the symmetric cubic e3; its alternating four-term sum is
// the four-variable Vandermonde, so it is not closed under constant actions.
Poly vandermonde_e3() {
    Poly l3s = -Poly::d() - Poly::l(1) - Poly::l(2);
    return vandermonde() * Poly::l(1) * Poly::l(2) * l3s;
}

} // namespace

TEST_CASE("all-zero two-term structure passes and classifies as both") {
    TwoTermLInf T = zero_two_term(1, 1);
    HomotopyAvg P = scalar_avg(T, Rat(1));
    CHECK(check_2term(T).ok());
    CHECK(check_homotopy_avg(T, P).ok());
    CHECK(classify(T, P) == TwoTermClass::Both);
}

TEST_CASE("l3 = 0, d = 0, Virasoro bracket with adjoint action passes") {
    TwoTermLInf T = zero_two_term(1, 1);
    LieConformalAlgebra vir = virasoro();
    T.bracket00 = vir.structure;
    T.bracket01 = vir.structure;
    HomotopyAvg P = scalar_avg(T, Rat(1));
    CHECK(check_2term(T).ok());
    CHECK(check_homotopy_avg(T, P).ok());
    CHECK(classify(T, P) == TwoTermClass::Both);
}

TEST_CASE("Example 4.12 strict data pass all identities") {
    LieConformalAlgebra vir = virasoro();
    auto [T1, P1] = strict_from_avg(vir, ConformalMap::identity(1));
    CHECK(check_2term(T1).ok());
    CHECK(check_homotopy_avg(T1, P1).ok());
    CHECK(classify(T1, P1) == TwoTermClass::Strict);

    auto [T2, P2] = strict_from_avg(vir, ConformalMap::scalar(1, Rat(2)));
    CHECK(check_2term(T2).ok());
    CHECK(check_homotopy_avg(T2, P2).ok());

    auto [T3, P3] = strict_from_avg(cur_sl2(), ConformalMap::identity(3));
    CHECK(check_2term(T3).ok());
    CHECK(check_homotopy_avg(T3, P3).ok());

    auto [S, ops] = direct_sum_example(vir, 2);
    auto [T4, P4] = strict_from_avg(S, ops[0]);
    CHECK(check_2term(T4).ok());
    CHECK(check_homotopy_avg(T4, P4).ok());
}

TEST_CASE("identity morphism passes H1-H5") {
    LieConformalAlgebra vir = virasoro();
    auto [T, P] = strict_from_avg(vir, ConformalMap::identity(1));
    TwoTermMorphism id;
    id.f0 = ConformalMap::identity(1);
    id.f1 = ConformalMap::identity(1);
    id.f2 = MultiTable({1, 1}, 1);
    CHECK(check_morphism(T, T, id).ok());
}

TEST_CASE("L3 mutant fails exactly L3") {
    // rank-2 L0 with the nilpotent non-skew table [[v_l u]] = u
    TwoTermLInf T = zero_two_term(2, 1);
    ModElem u(2);
    u.coords[0] = Poly(1);
    T.bracket00.at({1, 0}) = u;
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L3"});
}

TEST_CASE("L4 mutant fails exactly L4") {
    // abelian L0 rank 2, d(m) = u_2, action only through u_1
    TwoTermLInf T = zero_two_term(2, 1);
    T.d.at(1, 0) = Poly(1);
    ModElem m(1);
    m.coords[0] = Poly(1);
    T.bracket01.at({0, 0}) = m; // [[e1_l m]] = m, [[e2_l m]] = 0
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L4"});
}

TEST_CASE("L5 mutant fails exactly L5") {
    // Virasoro L0, rank-2 module with weights (2, 3), d(m1) = L, d(m2) = 0
    TwoTermLInf T = zero_two_term(1, 2);
    LieConformalAlgebra vir = virasoro();
    T.bracket00 = vir.structure;
    ModElem w2(2), w3(2);
    w2.coords[0] = Poly::d() + Rat(2) * Poly::l(1);
    w3.coords[1] = Poly::d() + Rat(3) * Poly::l(1);
    T.bracket01.at({0, 0}) = w2;
    T.bracket01.at({0, 1}) = w3;
    T.d.at(0, 0) = Poly(1);
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L5"});
}

TEST_CASE("L6 mutant fails exactly L6") {
    // skew but non-Jacobi bracket00, everything else zero
    TwoTermLInf T = zero_two_term(1, 1);
    ModElem v(1);
    v.coords[0] = Poly::d() * skew_u();
    T.bracket00.at({0, 0}) = v;
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L6"});
}

TEST_CASE("L7 mutant fails exactly L7") {
    // valid bracket00 = Virasoro, non-representation bracket01
    TwoTermLInf T = zero_two_term(1, 1);
    LieConformalAlgebra vir = virasoro();
    T.bracket00 = vir.structure;
    ModElem bad(1);
    bad.coords[0] = Poly::l(1) * Poly::l(1);
    T.bracket01.at({0, 0}) = bad;
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L7"});
}

TEST_CASE("L8 mutant fails exactly L8") {
    // abelian L0, constant commuting action, nonzero skew l3
    TwoTermLInf T = zero_two_term(1, 1);
    ModElem c(1);
    c.coords[0] = Poly(1);
    T.bracket01.at({0, 0}) = c;
    T.l3.at({0, 0, 0}).coords[0] = vandermonde_e3();
    Cochain c3;
    c3.degree = 3;
    c3.alg_rank = 1;
    c3.module_rank = 1;
    c3.values = T.l3;
    REQUIRE(check_cochain(c3).ok());
    Report r = check_2term(T);
    CHECK(failures(r) == std::set<std::string>{"L8"});
}

TEST_CASE("L6 mutant via inconsistent l3 with nonzero d shows residual") {
    LieConformalAlgebra vir = virasoro();
    auto [T, P] = strict_from_avg(vir, ConformalMap::identity(1));
    T.l3.at({0, 0, 0}).coords[0] = vandermonde();
    Report r = check_2term(T);
    CHECK_FALSE(r.ok());
    bool l6_failed = false;
    for (const auto &it : r.items)
        if (it.check == "L6" && !it.pass) {
            l6_failed = true;
            CHECK_FALSE(it.residual.empty());
        }
    CHECK(l6_failed);
}

TEST_CASE("A1 mutant fails exactly A1") {
    TwoTermLInf T = zero_two_term(1, 1);
    T.d.at(0, 0) = Poly(1);
    HomotopyAvg P = scalar_avg(T, Rat(1));
    P.P1 = ConformalMap::scalar(1, Rat(2));
    Report r = check_homotopy_avg(T, P);
    CHECK(failures(r) == std::set<std::string>{"A1"});
}

TEST_CASE("A2 mutant fails exactly A2") {
    // non-averaging P0 = d*Id on Virasoro, d = 0, no module action
    TwoTermLInf T = zero_two_term(1, 1);
    T.bracket00 = virasoro().structure;
    HomotopyAvg P = scalar_avg(T, Rat(1));
    P.P0 = ConformalMap(1, 1);
    P.P0.at(0, 0) = Poly::d();
    Report r = check_homotopy_avg(T, P);
    CHECK(failures(r) == std::set<std::string>{"A2"});
}

TEST_CASE("A3/A4 mutant pair: P2 valued in ker d") {
    TwoTermLInf T = zero_two_term(1, 2);
    T.d.at(0, 0) = Poly(1); // d(m1) = x, d(m2) = 0
    HomotopyAvg P = scalar_avg(T, Rat(1));
    ModElem v(2);
    v.coords[1] = skew_u();
    P.P2.at({0, 0}) = v;
    Report r = check_homotopy_avg(T, P);
    CHECK(failures(r) == std::set<std::string>{"A3-1", "A4-1"});
}

TEST_CASE("A3-2/A4-2 mutant pair: P0 != P1 on the adjoint") {
    TwoTermLInf T = zero_two_term(1, 1);
    LieConformalAlgebra vir = virasoro();
    T.bracket00 = vir.structure;
    T.bracket01 = vir.structure;
    HomotopyAvg P = scalar_avg(T, Rat(1));
    P.P1 = ConformalMap::scalar(1, Rat(2));
    Report r = check_homotopy_avg(T, P);
    CHECK(failures(r) == std::set<std::string>{"A3-2", "A4-2"});
}

TEST_CASE("A5 mutant fails exactly A5") {
    // nonzero l3 with P1 != P0 over the zero base: only the A5 left-hand
    // side survives
    TwoTermLInf T = zero_two_term(1, 1);
    T.l3.at({0, 0, 0}).coords[0] = vandermonde();
    HomotopyAvg P = scalar_avg(T, Rat(1));
    P.P1 = ConformalMap::scalar(1, Rat(2));
    REQUIRE(check_2term(T).ok());
    Report r = check_homotopy_avg(T, P);
    CHECK(failures(r) == std::set<std::string>{"A5"});
}

TEST_CASE("H mutants") {
    // H1 only
    {
        TwoTermLInf T = zero_two_term(1, 1);
        T.d.at(0, 0) = Poly(1);
        TwoTermMorphism M;
        M.f0 = ConformalMap::identity(1);
        M.f1 = ConformalMap::scalar(1, Rat(2));
        M.f2 = MultiTable({1, 1}, 1);
        CHECK(failures(check_morphism(T, T, M)) ==
              std::set<std::string>{"H1"});
    }
    // H2 only
    {
        TwoTermLInf T = zero_two_term(1, 1);
        T.bracket00 = virasoro().structure;
        TwoTermMorphism M;
        M.f0 = ConformalMap::scalar(1, Rat(2));
        M.f1 = ConformalMap::identity(1);
        M.f2 = MultiTable({1, 1}, 1);
        CHECK(failures(check_morphism(T, T, M)) ==
              std::set<std::string>{"H2"});
    }
    // H3/H4 mirror pair
    {
        TwoTermLInf T = zero_two_term(1, 1);
        ModElem c(1);
        c.coords[0] = Poly(1);
        T.bracket01.at({0, 0}) = c;
        TwoTermMorphism M;
        M.f0 = ConformalMap::scalar(1, Rat(2));
        M.f1 = ConformalMap::identity(1);
        M.f2 = MultiTable({1, 1}, 1);
        CHECK(failures(check_morphism(T, T, M)) ==
              std::set<std::string>{"H3", "H4"});
    }
    // H5 only
    {
        TwoTermLInf T = zero_two_term(1, 1);
        T.l3.at({0, 0, 0}).coords[0] = vandermonde();
        TwoTermMorphism M;
        M.f0 = ConformalMap::identity(1);
        M.f1 = ConformalMap::scalar(1, Rat(2));
        M.f2 = MultiTable({1, 1}, 1);
        CHECK(failures(check_morphism(T, T, M)) ==
              std::set<std::string>{"H5"});
    }
    // rescaled target: (Id, Id, 0) fails at H2 (and its bracket01 mirrors)
    {
        LieConformalAlgebra vir = virasoro();
        auto [T, P] = strict_from_avg(vir, ConformalMap::identity(1));
        TwoTermLInf T2 = T;
        T2.bracket00 = T.bracket00.scaled(Rat(2));
        T2.bracket01 = T.bracket01.scaled(Rat(2));
        REQUIRE(check_2term(T2).ok());
        TwoTermMorphism M;
        M.f0 = ConformalMap::identity(1);
        M.f1 = ConformalMap::identity(1);
        M.f2 = MultiTable({1, 1}, 1);
        auto f = failures(check_morphism(T, T2, M));
        CHECK(f.count("H2") == 1);
    }
}

TEST_CASE("classification labels") {
    TwoTermLInf T = zero_two_term(1, 1);
    HomotopyAvg P = scalar_avg(T, Rat(1));

    // d = 0, l3 != 0: skeletal only
    TwoTermLInf Tsk = T;
    Tsk.l3.at({0, 0, 0}).coords[0] = vandermonde();
    CHECK(classify(Tsk, P) == TwoTermClass::Skeletal);

    // l3 = 0, P2 = 0, d != 0: strict only
    TwoTermLInf Tst = T;
    Tst.d.at(0, 0) = Poly(1);
    CHECK(classify(Tst, P) == TwoTermClass::Strict);

    CHECK(classify(T, P) == TwoTermClass::Both);
}


namespace {

// Skeletal corpus entry: structure + operator expected to pass all checks.
struct SkeletalDatum {
    TwoTermLInf T;
    HomotopyAvg P;
};

std::vector<SkeletalDatum> skeletal_corpus() {
    std::vector<SkeletalDatum> out;
    // 1) all-zero
    {
        TwoTermLInf T = zero_two_term(1, 1);
        out.push_back({T, scalar_avg(T, Rat(1))});
    }
    // 2) abelian base, commuting action, hand-built l3 and P2, P = Id
    {
        TwoTermLInf T = zero_two_term(1, 1);
        T.l3.at({0, 0, 0}).coords[0] = vandermonde();
        HomotopyAvg P = scalar_avg(T, Rat(1));
        ModElem v(1);
        v.coords[0] = skew_u();
        P.P2.at({0, 0}) = v;
        out.push_back({T, P});
    }
    // 3) coboundary datum over Virasoro with P0 = P1 = 0
    {
        TwoTermLInf T = zero_two_term(1, 1);
        LieConformalAlgebra vir = virasoro();
        T.bracket00 = vir.structure;
        T.bracket01 = vir.structure;
        CochainContext ctx = CochainContext::adjoint(
            vir, ConformalMap::zero(1, 1), ConformalMap::zero(1, 1));
        Cochain two = Cochain::make(2, 1, 1);
        two.values.at({0, 0}).coords[0] = Poly::d() * skew_u();
        T.l3 = delta(ctx, two).values;
        HomotopyAvg P;
        P.P0 = ConformalMap::zero(1, 1);
        P.P1 = ConformalMap::zero(1, 1);
        P.P2 = MultiTable({1, 1}, 1);
        out.push_back({T, P});
    }
    // 4) coboundary datum over Virasoro with P0 = P1 = Id and P2 a
    //    delta_AO-coboundary
    {
        TwoTermLInf T = zero_two_term(1, 1);
        LieConformalAlgebra vir = virasoro();
        T.bracket00 = vir.structure;
        T.bracket01 = vir.structure;
        CochainContext ctx = CochainContext::adjoint(vir);
        Cochain two = Cochain::make(2, 1, 1);
        two.values.at({0, 0}).coords[0] = Poly::d() * skew_u();
        T.l3 = delta(ctx, two).values;
        HomotopyAvg P = scalar_avg(T, Rat(1));
        Cochain one = cochain_from_map(ConformalMap::scalar(1, Rat(3)));
        P.P2 = delta_AO(ctx, one).values;
        out.push_back({T, P});
    }
    return out;
}

} // namespace

TEST_CASE("skeletal corpus passes the structure and operator checks") {
    for (auto &[T, P] : skeletal_corpus()) {
        CHECK(check_2term(T).ok());
        CHECK(check_homotopy_avg(T, P).ok());
        auto cls = classify(T, P);
        CHECK((cls == TwoTermClass::Skeletal || cls == TwoTermClass::Both));
    }
}

TEST_CASE("skeletal data give d_AL-closed pairs and round-trip") {
    for (auto &[T, P] : skeletal_corpus()) {
        CochainContext ctx = two_term_context(T, P);
        CochainPair pair = skeletal_to_cocycle(T, P);
        CHECK(d_AL(ctx, pair).is_zero());
        auto [T2, P2] = cocycle_to_skeletal(ctx, T.basis0, T.basis1, pair);
        CHECK(T2.l3 == T.l3);
        CHECK(T2.bracket00 == T.bracket00);
        CHECK(T2.bracket01 == T.bracket01);
        CHECK(P2.P2 == P.P2);
        CHECK(P2.P0 == P.P0);
        CHECK(P2.P1 == P.P1);
        CHECK(T2.d.is_zero());
        // classification is stable under the round trip
        CHECK(classify(T2, P2) == classify(T, P));
    }
}

TEST_CASE("cocycle_to_skeletal rejects non-closed pairs") {
    // with P = 2 Id the xi term of d_AL does not vanish on the Vandermonde
    LieConformalAlgebra vir = virasoro();
    CochainContext ctx = scalar_ctx(vir, Rat(2));
    CochainPair pair;
    pair.f = Cochain::make(3, 1, 1);
    pair.f.values.at({0, 0, 0}).coords[0] = vandermonde();
    pair.g = Cochain::make(2, 1, 1);
    REQUIRE_FALSE(d_AL(ctx, pair).is_zero());
    CHECK_THROWS(cocycle_to_skeletal(ctx, {"x"}, {"m"}, pair));
}

TEST_CASE("skeletal equivalence witnessed by a d_AL shift") {
    auto corpus = skeletal_corpus();
    auto &[T, P] = corpus[3]; // Virasoro, P = Id
    CochainContext ctx = two_term_context(T, P);

    // witness (f, xi)
    Cochain fw = Cochain::make(2, 1, 1);
    fw.values.at({0, 0}).coords[0] = skew_u() * skew_u() * skew_u();
    ConformalMap xiw(1, 1);
    xiw.at(0, 0) = Poly::d() * Poly::d();

    // trivial witness on identical data
    CHECK(skeletal_equiv_check(T, P, T, P, Cochain::make(2, 1, 1),
                               ConformalMap::zero(1, 1))
              .ok());

    // shifted datum
    CochainPair a = skeletal_to_cocycle(T, P);
    CochainPair w{fw, cochain_from_map(xiw)};
    CochainPair shift = d_AL(ctx, w);
    CochainPair b{a.f + shift.f, a.g + shift.g};
    auto [T2, P2] = cocycle_to_skeletal(ctx, T.basis0, T.basis1, b);
    CHECK(check_2term(T2).ok());
    CHECK(check_homotopy_avg(T2, P2).ok());
    CHECK(skeletal_equiv_check(T, P, T2, P2, fw, xiw).ok());

    // a wrong witness fails
    ConformalMap wrong(1, 1);
    wrong.at(0, 0) = Poly(5);
    CHECK_FALSE(skeletal_equiv_check(T, P, T2, P2, fw, wrong).ok());
}

TEST_CASE("crossed modules: Example 4.12 and the kernel example") {
    LieConformalAlgebra vir = virasoro();
    CrossedModule C1 = crossed_id_ad(vir, ConformalMap::identity(1));
    CHECK(check_crossed_module(C1).ok());

    CrossedModule C2 = crossed_id_ad(cur_sl2(), ConformalMap::identity(3));
    CHECK(check_crossed_module(C2).ok());

    CrossedModule C3 = crossed_kernel_example(vir);
    CHECK(check_crossed_module(C3).ok());

    // breaking equivariance by rescaling the action fails
    CrossedModule bad = C1;
    bad.action = bad.action.scaled(Rat(2));
    CHECK_FALSE(check_crossed_module(bad).ok());
}

TEST_CASE("strict <-> crossed module round trips") {
    LieConformalAlgebra vir = virasoro();
    std::vector<std::pair<TwoTermLInf, HomotopyAvg>> strict_data;
    strict_data.push_back(strict_from_avg(vir, ConformalMap::identity(1)));
    strict_data.push_back(strict_from_avg(vir, ConformalMap::scalar(1, Rat(2))));
    strict_data.push_back(strict_from_avg(cur_sl2(), ConformalMap::identity(3)));
    {
        auto [S, ops] = direct_sum_example(vir, 2);
        strict_data.push_back(strict_from_avg(S, ops[0]));
    }

    for (auto &[T, P] : strict_data) {
        REQUIRE(check_2term(T).ok());
        REQUIRE(check_homotopy_avg(T, P).ok());
        CrossedModule C = strict_to_crossed(T, P);
        CHECK(check_crossed_module(C).ok());
        auto [T2, P2] = crossed_to_strict(C);
        CHECK(T2 == T);
        CHECK(P2 == P);
        CHECK(classify(T2, P2) == classify(T, P));
        // and the other direction
        CrossedModule C2 = strict_to_crossed(T2, P2);
        CHECK(C2.up.structure == C.up.structure);
        CHECK(C2.down.structure == C.down.structure);
        CHECK(C2.action == C.action);
    }

    // Example 4.12: the crossed module of (Vir, Id) is (Vir, Vir, Id, ad)
    auto [T, P] = strict_data[0];
    CrossedModule C = strict_to_crossed(T, P);
    CHECK(C.d == ConformalMap::identity(1));
    CHECK(C.up.structure == vir.structure);
    CHECK(C.action == vir.structure);

    // d = 0 strict datum gives an abelian upstairs algebra
    TwoTermLInf T0 = zero_two_term(1, 1);
    T0.bracket00 = vir.structure;
    HomotopyAvg P0 = scalar_avg(T0, Rat(1));
    CrossedModule C0 = strict_to_crossed(T0, P0);
    CHECK(C0.up.structure.is_zero());
}

TEST_CASE("crossed direct sums pass all checks and match the strict route") {
    LieConformalAlgebra vir = virasoro();
    std::vector<CrossedModule> data;
    data.push_back(crossed_id_ad(vir, ConformalMap::identity(1)));
    data.push_back(crossed_id_ad(cur_sl2(), ConformalMap::identity(3)));
    data.push_back(crossed_kernel_example(vir));

    for (const auto &C : data) {
        REQUIRE(check_crossed_module(C).ok());
        auto [S, Psum] = crossed_direct_sum(C);
        CHECK(check_skew(S).ok());
        CHECK(check_jacobi(S).ok());
        CHECK(check_averaging(S, Psum).ok());
    }

    // Prop 4.11: the strict-datum bracket equals the crossed-module route
    for (auto &[T, P] : {strict_from_avg(vir, ConformalMap::identity(1)),
                         strict_from_avg(cur_sl2(), ConformalMap::identity(3))}) {
        auto [S1, P1] = strict_direct_sum(T, P);
        auto [S2, P2] = crossed_direct_sum(strict_to_crossed(T, P));
        CHECK(S1.structure == S2.structure);
        CHECK(P1 == P2);
        CHECK(check_jacobi(S1).ok());
        CHECK(check_averaging(S1, P1).ok());
    }

    // abelian upstairs with zero action: plain direct product
    TwoTermLInf T0 = zero_two_term(1, 1);
    T0.bracket00 = vir.structure;
    HomotopyAvg H0 = scalar_avg(T0, Rat(1));
    CrossedModule C0 = strict_to_crossed(T0, H0);
    auto [S0, Q0] = crossed_direct_sum(C0);
    CHECK(S0.entry(1, 1).is_zero());
    CHECK(S0.entry(0, 1).is_zero());
    CHECK(check_jacobi(S0).ok());
}
