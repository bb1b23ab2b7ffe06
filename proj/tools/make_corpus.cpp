// Generates the shipped corpus of bundle files from the builtin structures.

#include <fstream>
#include <iostream>

#include "lca/bundle.hpp"
#include "lca/cohomology.hpp"

using namespace lca;

namespace {

void write(const std::string &dir, const std::string &name,
           const std::string &text) {
    std::ofstream out(dir + "/" + name);
    if (!out)
        throw std::runtime_error("cannot write " + dir + "/" + name);
    out << text;
    std::cout << "wrote " << name << "\n";
}

Cochain bracket_cochain(const LieConformalAlgebra &A) {
    Cochain f = Cochain::make(2, A.rank(), A.rank());
    f.values = A.structure;
    return f;
}

Cochain identity_cochain(int n) {
    Cochain f = Cochain::make(1, n, n);
    for (int i = 0; i < n; ++i)
        f.values.at({i}) = ModElem::basis(n, i);
    return f;
}

Poly vandermonde() {
    Poly l3s = -Poly::d() - Poly::l(1) - Poly::l(2);
    return (Poly::l(1) - Poly::l(2)) * (Poly::l(1) - l3s) *
           (Poly::l(2) - l3s);
}

MultiTable weight_action(long delta) {
    MultiTable rho({1, 1}, 1);
    rho.at({0, 0}).coords[0] = Poly::d() + Rat(delta) * Poly::l(1);
    return rho;
}

NonAbCocycle semidirect_cocycle() {
    NonAbCocycle c;
    c.base = {virasoro(), ConformalMap::identity(1)};
    c.fiber = {abelian(1), ConformalMap::identity(1)};
    c.chi = MultiTable({1, 1}, 1);
    c.rho = weight_action(2);
    c.Phi = ConformalMap::zero(1, 1);
    return c;
}

NonAbCocycle chi_cocycle() {
    NonAbCocycle c = semidirect_cocycle();
    c.chi.at({0, 0}).coords[0] = Poly::d() + Rat(2) * Poly::l(1);
    return c;
}

NonAbCocycle phi_cocycle() {
    NonAbCocycle c = semidirect_cocycle();
    c.Phi = ConformalMap::identity(1);
    return c;
}

ConformalMap shifted_section(const Extension &E, const ConformalMap &tau) {
    ConformalMap s = E.section;
    int n = E.base.rank(), h = E.fiber.rank();
    for (int a = 0; a < h; ++a)
        for (int i = 0; i < n; ++i)
            s.at(n + a, i) -= tau.at(a, i);
    return s;
}

} // namespace

int main(int argc, char **argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";

    {
        Bundle b;
        b.algebra = virasoro();
        b.maps.emplace("P", ConformalMap::identity(1));
        b.maps.emplace("P0", ConformalMap::zero(1, 1));
        b.maps.emplace("P2", ConformalMap::scalar(1, Rat(2)));
        b.maps.emplace("Phalf", ConformalMap::scalar(1, Rat(1, 2)));
        ConformalMap pbad(1, 1);
        pbad.at(0, 0) = Poly::d();
        b.maps.emplace("Pbad", pbad);
        b.cochains.emplace("eta", bracket_cochain(b.algebra));
        b.cochains.emplace("idc", identity_cochain(1));
        Cochain g2 = Cochain::make(2, 1, 1);
        g2.values.at({0, 0}).coords[0] =
            Poly::d() * (Poly::d() + Rat(2) * Poly::l(1));
        b.cochains.emplace("g2", g2);
        Cochain v3 = Cochain::make(3, 1, 1);
        v3.values.at({0, 0, 0}).coords[0] = vandermonde();
        b.cochains.emplace("v3", v3);
        write(dir, "virasoro.json", save_bundle(b));
    }
    {
        Bundle b;
        b.algebra = cur_sl2();
        b.maps.emplace("P", ConformalMap::identity(3));
        b.maps.emplace("P2", ConformalMap::scalar(3, Rat(2)));
        b.cochains.emplace("eta", bracket_cochain(b.algebra));
        b.cochains.emplace("idc", identity_cochain(3));
        write(dir, "cur_sl2.json", save_bundle(b));
    }
    {
        Bundle b;
        b.algebra = abelian(2);
        b.maps.emplace("P", ConformalMap::identity(2));
        write(dir, "abelian_2.json", save_bundle(b));
    }
    for (int n : {2, 3}) {
        auto [S, ops] = direct_sum_example(virasoro(), n);
        Bundle b;
        b.algebra = S;
        b.maps.emplace("P", ops[0]);
        for (int i = 1; i < static_cast<int>(ops.size()); ++i)
            b.maps.emplace("Pi" + std::to_string(i + 1), ops[i]);
        write(dir, "vir_sum" + std::to_string(n) + ".json", save_bundle(b));
    }
    {
        // broken skew: [e_l e] = l1 e
        Bundle b;
        b.algebra = LieConformalAlgebra::make("broken_skew", {"e"});
        b.algebra.entry(0, 0).coords[0] = Poly::l(1);
        write(dir, "broken_skew.json", save_bundle(b));
    }
    {
        // skew but not Jacobi: [e_l e] = d (d + 2 l1) e
        Bundle b;
        b.algebra = LieConformalAlgebra::make("broken_jacobi", {"e"});
        b.algebra.entry(0, 0).coords[0] =
            Poly::d() * (Poly::d() + Rat(2) * Poly::l(1));
        b.cochains.emplace("eta", bracket_cochain(b.algebra));
        write(dir, "broken_jacobi.json", save_bundle(b));
    }
    {
        // tensor square of Virasoro with P = Id
        AvgRepTriple T = tensor2_rep(virasoro(), ConformalMap::identity(1));
        Bundle b;
        b.algebra = virasoro();
        b.maps.emplace("P", T.P);
        b.maps.emplace("phi", T.phi);
        BundleRep rep;
        rep.module_basis = T.rep.module_basis;
        rep.action = T.rep.action;
        rep.phi_name = "phi";
        rep.operator_name = "P";
        b.rep = rep;
        write(dir, "tensor2.json", save_bundle(b));
    }
    {
        // adjoint representation bundle of Virasoro with phi = P = Id
        Bundle b;
        b.algebra = virasoro();
        b.maps.emplace("P", ConformalMap::identity(1));
        b.maps.emplace("phi", ConformalMap::identity(1));
        BundleRep rep;
        rep.module_basis = b.algebra.basis;
        rep.action = b.algebra.structure;
        rep.phi_name = "phi";
        rep.operator_name = "P";
        b.rep = rep;
        write(dir, "vir_adjoint_rep.json", save_bundle(b));
    }
    {
        Bundle b;
        b.algebra = virasoro();
        b.crossed = crossed_id_ad(virasoro(), ConformalMap::identity(1));
        write(dir, "crossed_id_ad.json", save_bundle(b));
    }
    {
        Bundle b;
        b.algebra = virasoro();
        auto [T, P] = strict_from_avg(virasoro(), ConformalMap::identity(1));
        b.two_term = TwoTermBundle{T, P};
        write(dir, "twoterm_ex412.json", save_bundle(b));
    }
    {
        // skeletal datum: abelian base, vandermonde l3, skew P2
        Bundle b;
        b.algebra = abelian(1);
        TwoTermLInf T = TwoTermLInf::make({"x"}, {"m"});
        T.l3.at({0, 0, 0}).coords[0] = vandermonde();
        HomotopyAvg P;
        P.P0 = ConformalMap::identity(1);
        P.P1 = ConformalMap::identity(1);
        P.P2 = MultiTable({1, 1}, 1);
        P.P2.at({0, 0}).coords[0] = Poly::d() + Rat(2) * Poly::l(1);
        b.two_term = TwoTermBundle{T, P};
        write(dir, "twoterm_skeletal.json", save_bundle(b));
    }
    {
        // semidirect cocycle with an equivalent section-shift partner and a
        // solver witness map
        NonAbCocycle c = chi_cocycle();
        Extension E = build_extension(c);
        ConformalMap tau(1, 1);
        tau.at(0, 0) = Poly(1) + Poly::d();
        NonAbCocycle cp = extract_cocycle(E, shifted_section(E, tau));
        Bundle b;
        b.algebra = virasoro();
        b.fiber = abelian(1);
        b.cocycle = c;
        b.cocycle2 = cp;
        b.maps.emplace("tau", tau);
        b.maps.emplace("tau0", ConformalMap::zero(1, 1));
        write(dir, "cocycle_pair_equivalent.json", save_bundle(b));
    }
    {
        // inequivalent pair: Phi differs by a constant map
        Bundle b;
        b.algebra = virasoro();
        b.fiber = abelian(1);
        b.cocycle = semidirect_cocycle();
        b.cocycle2 = phi_cocycle();
        b.maps.emplace("tau0", ConformalMap::zero(1, 1));
        write(dir, "cocycle_pair_inequivalent.json", save_bundle(b));
    }
    {
        // nonabelian-fiber cocycle (crossed-module shape)
        NonAbCocycle c;
        c.base = {virasoro(), ConformalMap::identity(1)};
        c.fiber = {virasoro(), ConformalMap::identity(1)};
        c.chi = MultiTable({1, 1}, 1);
        c.rho = weight_action(2);
        c.Phi = ConformalMap::zero(1, 1);
        Bundle b;
        b.algebra = virasoro();
        b.fiber = virasoro();
        b.cocycle = c;
        write(dir, "cocycle_nonabelian.json", save_bundle(b));
    }
    {
        // built extension of the semidirect cocycle, with automorphism data
        NonAbCocycle c = semidirect_cocycle();
        Extension E = build_extension(c);
        Bundle b;
        b.algebra = virasoro();
        b.fiber = abelian(1);
        b.extension = E;
        b.maps.emplace("alpha5", ConformalMap::scalar(1, Rat(5)));
        b.maps.emplace("alphaId", ConformalMap::identity(1));
        b.maps.emplace("betaId", ConformalMap::identity(1));
        b.maps.emplace("tau0", ConformalMap::zero(1, 1));
        write(dir, "ext_semidirect.json", save_bundle(b));
    }
    {
        // extension whose cocycle has Phi != 0: scaling alpha is then not
        // inducible with the zero witness
        NonAbCocycle c = phi_cocycle();
        Extension E = build_extension(c);
        Bundle b;
        b.algebra = virasoro();
        b.fiber = abelian(1);
        b.extension = E;
        b.maps.emplace("alpha3", ConformalMap::scalar(1, Rat(3)));
        b.maps.emplace("betaId", ConformalMap::identity(1));
        b.maps.emplace("tau0", ConformalMap::zero(1, 1));
        write(dir, "ext_phi.json", save_bundle(b));
    }
    {
        // schema-error fixture: l2 inside a bracket value
        write(dir, "schema_error.json", R"({
  "format": 1,
  "algebra": {
    "name": "broken",
    "basis": ["e"],
    "bracket": { "0,0": ["l2"] }
  }
}
)");
    }
    return 0;
}
