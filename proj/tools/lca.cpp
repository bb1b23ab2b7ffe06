#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "lca/bundle.hpp"
#include "lca/cohomology.hpp"

using namespace lca;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Output {
    std::string json_path;
    bool quiet = false;

    int finish(const Report &rep, const ordered_json &extra = {}) const {
        if (!quiet) {
            std::cout << rep.summary();
            if (extra.contains("result"))
                std::cout << "result:\n" << extra["result"].dump(2) << "\n";
        }
        if (!json_path.empty()) {
            ordered_json j;
            j["tool"] = TOOL_VERSION;
            j["subject"] = rep.subject;
            j["overall_pass"] = rep.ok();
            ordered_json checks = ordered_json::array();
            for (const auto &it : rep.items) {
                ordered_json c;
                c["check"] = it.check;
                c["pass"] = it.pass;
                if (!it.pass) {
                    c["tuple"] = it.tuple;
                    c["lhs"] = it.lhs;
                    c["rhs"] = it.rhs;
                    c["residual"] = it.residual;
                }
                checks.push_back(c);
            }
            j["checks"] = checks;
            for (const auto &[k, v] : extra.items())
                j[k] = v;
            std::ofstream out(json_path);
            out << j.dump(2) << "\n";
        }
        return rep.ok() ? 0 : 1;
    }
};

ordered_json table_json(const MultiTable &t) {
    ordered_json obj = ordered_json::object();
    t.for_each_tuple([&](const std::vector<int> &tuple) {
        const ModElem &v = t.at(tuple);
        if (v.is_zero())
            return;
        std::string key;
        for (size_t k = 0; k < tuple.size(); ++k)
            key += (k ? "," : "") + std::to_string(tuple[k]);
        ordered_json arr = ordered_json::array();
        for (const auto &p : v.coords)
            arr.push_back(p.to_string());
        obj[key] = arr;
    });
    return obj;
}

ordered_json cochain_json(const Cochain &f) {
    ordered_json j;
    j["degree"] = f.degree;
    j["values"] = table_json(f.values);
    return j;
}

ordered_json map_json(const ConformalMap &m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols; ++c)
            row.push_back(m.at(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

const ConformalMap &named_map(const Bundle &b, const std::string &name,
                              const std::string &what) {
    auto it = b.maps.find(name);
    if (it == b.maps.end())
        throw BundleError("no map named '" + name + "' for " + what);
    return it->second;
}

// Cochain-calculus context from a bundle: representation coefficients when a
// rep block is present, adjoint otherwise; P and phi resolved by name with
// the defaults P = "P" (or identity) and phi = P.
CochainContext bundle_context(const Bundle &b, std::string op_name,
                              std::string phi_name) {
    int n = b.algebra.rank();
    ConformalMap P = ConformalMap::identity(n);
    if (!op_name.empty())
        P = named_map(b, op_name, "--op");
    else if (b.maps.count("P"))
        P = b.maps.at("P");
    CochainContext ctx;
    if (b.rep) {
        ConformalRep R;
        R.algebra = b.algebra;
        R.module_basis = b.rep->module_basis;
        R.action = b.rep->action;
        int m = R.module_rank();
        ConformalMap phi = P;
        if (!phi_name.empty())
            phi = named_map(b, phi_name, "--phi");
        else if (!b.rep->phi_name.empty())
            phi = named_map(b, b.rep->phi_name, "rep.phi");
        if (phi.rows != m || phi.cols != m)
            throw BundleError("phi has the wrong shape for the module");
        ctx = CochainContext::with_rep(R, P, phi);
    } else {
        ConformalMap phi = P;
        if (!phi_name.empty())
            phi = named_map(b, phi_name, "--phi");
        ctx = CochainContext::adjoint(b.algebra, P, phi);
    }
    return ctx;
}

const Cochain &named_cochain(const Bundle &b, const std::string &name) {
    auto it = b.cochains.find(name);
    if (it == b.cochains.end())
        throw BundleError("no cochain named '" + name + "' in the bundle");
    return it->second;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"lca: exact calculus of averaging Lie conformal algebras"};
    app.require_subcommand(1);

    std::string input, json_path, op_name, phi_name;
    std::string cochain1, cochain2, tau_name, alpha_name, beta_name, out_path;
    int cap = 2;
    bool quiet = false, two_sided = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--input", input, "bundle file")->required();
        cmd->add_option("--json", json_path, "write the full report here");
        cmd->add_flag("--quiet", quiet, "suppress the human summary");
    };

    CLI::App *c_check = app.add_subcommand("check", "skew + Jacobi of the algebra");
    add_common(c_check);

    CLI::App *c_avg = app.add_subcommand("avg-check", "averaging identity of an operator");
    add_common(c_avg);
    c_avg->add_option("--op", op_name, "operator name in maps")->required();
    c_avg->add_flag("--two-sided", two_sided,
                    "also test the optional two-sided identity");

    CLI::App *c_rep = app.add_subcommand("rep-check", "representation axioms");
    add_common(c_rep);

    CLI::App *c_cohom = app.add_subcommand("cohom", "cochain calculus");
    c_cohom->require_subcommand(1);
    std::vector<CLI::App *> cohom_subs;
    for (const char *verb : {"delta", "delta-ao", "xi", "dal", "nr", "mc"}) {
        CLI::App *sc = c_cohom->add_subcommand(verb);
        add_common(sc);
        sc->add_option("--cochain", cochain1, "cochain name")->required();
        sc->add_option("--cochain2", cochain2, "second cochain name");
        sc->add_option("--op", op_name, "averaging operator name");
        sc->add_option("--phi", phi_name, "module operator name");
        cohom_subs.push_back(sc);
    }

    CLI::App *c_two = app.add_subcommand("twoterm", "2-term structures");
    c_two->require_subcommand(1);
    for (const char *verb : {"check", "classify", "to-crossed", "to-cocycle"}) {
        CLI::App *sc = c_two->add_subcommand(verb);
        add_common(sc);
    }

    CLI::App *c_cross = app.add_subcommand("crossed", "crossed modules");
    c_cross->require_subcommand(1);
    for (const char *verb : {"check", "direct-sum"}) {
        CLI::App *sc = c_cross->add_subcommand(verb);
        add_common(sc);
    }

    CLI::App *c_ext = app.add_subcommand("ext", "non-abelian extensions");
    c_ext->require_subcommand(1);
    for (const char *verb : {"check-cocycle", "build", "extract", "equiv"}) {
        CLI::App *sc = c_ext->add_subcommand(verb);
        add_common(sc);
        if (std::string(verb) == "equiv")
            sc->add_option("--tau", tau_name, "witness map name")->required();
        if (std::string(verb) == "build")
            sc->add_option("--out", out_path, "write the built extension bundle");
    }

    CLI::App *c_wells = app.add_subcommand("wells", "Wells inducibility verifier");
    add_common(c_wells);
    c_wells->add_option("--alpha", alpha_name, "fiber automorphism")->required();
    c_wells->add_option("--beta", beta_name, "base automorphism")->required();
    c_wells->add_option("--tau", tau_name, "witness map name");

    CLI::App *c_solve = app.add_subcommand("solve-tau", "abelian-fiber witness solver");
    add_common(c_solve);
    c_solve->add_option("--cap", cap, "maximum d-degree of tau")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{json_path, quiet};
    try {
        Bundle b = load_bundle_file(input);

        if (c_check->parsed()) {
            Report rep = check_skew(b.algebra);
            rep.merge(check_jacobi(b.algebra));
            rep.subject = b.algebra.name;
            return out.finish(rep);
        }
        if (c_avg->parsed()) {
            Report rep =
                check_averaging(b.algebra, named_map(b, op_name, "--op"),
                                two_sided);
            return out.finish(rep);
        }
        if (c_rep->parsed()) {
            if (!b.rep)
                throw BundleError("the bundle has no rep block");
            ConformalRep R;
            R.algebra = b.algebra;
            R.module_basis = b.rep->module_basis;
            R.action = b.rep->action;
            Report rep = check_rep(R);
            if (!b.rep->phi_name.empty() && !b.rep->operator_name.empty()) {
                AvgRepTriple T;
                T.rep = R;
                T.phi = named_map(b, b.rep->phi_name, "rep.phi");
                T.P = named_map(b, b.rep->operator_name, "rep.operator");
                rep.merge(check_avg_rep(T));
            }
            return out.finish(rep);
        }
        if (c_cohom->parsed()) {
            CLI::App *sub = c_cohom->get_subcommands().front();
            std::string verb = sub->get_name();
            CochainContext ctx = bundle_context(b, op_name, phi_name);
            const Cochain &f = named_cochain(b, cochain1);
            Report rep;
            rep.subject = "cohom " + verb + " " + cochain1;
            ordered_json extra;
            Report fcheck = check_cochain(f, cochain1);
            if (!fcheck.ok()) {
                rep.merge(fcheck, "input-");
                return out.finish(rep);
            }
            if (verb == "delta" || verb == "delta-ao") {
                if (f.degree > 3)
                    throw BundleError("differential input degree must be <= 3");
                Cochain r = (verb == "delta") ? delta(ctx, f) : delta_AO(ctx, f);
                rep.pass(verb);
                extra["result"] = cochain_json(r);
            } else if (verb == "xi") {
                Cochain r = xi(ctx, f);
                rep.pass("xi");
                extra["result"] = cochain_json(r);
            } else if (verb == "dal") {
                if (cochain2.empty())
                    throw BundleError("dal needs --cochain2 (the AO component)");
                CochainPair pr{f, named_cochain(b, cochain2)};
                CochainPair r = d_AL(ctx, pr);
                rep.pass("dal");
                ordered_json rj;
                rj["f"] = cochain_json(r.f);
                rj["g"] = cochain_json(r.g);
                extra["result"] = rj;
            } else if (verb == "nr") {
                if (cochain2.empty())
                    throw BundleError("nr needs --cochain2");
                Cochain r = nr_bracket(f, named_cochain(b, cochain2));
                rep.pass("nr");
                extra["result"] = cochain_json(r);
            } else { // mc
                rep.merge(mc_check(f));
            }
            return out.finish(rep, extra);
        }
        if (c_two->parsed()) {
            if (!b.two_term)
                throw BundleError("the bundle has no two_term block");
            CLI::App *sub = c_two->get_subcommands().front();
            std::string verb = sub->get_name();
            const TwoTermLInf &T = b.two_term->T;
            const HomotopyAvg &P = b.two_term->P;
            if (verb == "check") {
                Report rep = check_2term(T);
                rep.merge(check_homotopy_avg(T, P));
                return out.finish(rep);
            }
            Report pre = check_2term(T);
            pre.merge(check_homotopy_avg(T, P));
            if (!pre.ok())
                return out.finish(pre);
            if (verb == "classify") {
                Report rep;
                rep.subject = "classification";
                rep.pass("classify: " + to_string(classify(T, P)));
                return out.finish(rep);
            }
            if (verb == "to-crossed") {
                CrossedModule C = strict_to_crossed(T, P);
                Report rep = check_crossed_module(C);
                ordered_json rj;
                rj["up_bracket"] = table_json(C.up.structure);
                rj["d"] = map_json(C.d);
                ordered_json extra;
                extra["result"] = rj;
                return out.finish(rep, extra);
            }
            // to-cocycle
            CochainPair pair = skeletal_to_cocycle(T, P);
            CochainContext ctx = two_term_context(T, P);
            Report rep;
            rep.subject = "skeletal 3-cocycle";
            if (d_AL(ctx, pair).is_zero())
                rep.pass("d_AL-closed");
            else
                rep.fail("d_AL-closed", "", "", "", "pair is not closed");
            ordered_json rj;
            rj["f"] = cochain_json(pair.f);
            rj["g"] = cochain_json(pair.g);
            ordered_json extra;
            extra["result"] = rj;
            return out.finish(rep, extra);
        }
        if (c_cross->parsed()) {
            if (!b.crossed)
                throw BundleError("the bundle has no crossed block");
            CLI::App *sub = c_cross->get_subcommands().front();
            if (sub->get_name() == "check")
                return out.finish(check_crossed_module(*b.crossed));
            Report pre = check_crossed_module(*b.crossed);
            if (!pre.ok())
                return out.finish(pre);
            auto [S, Psum] = crossed_direct_sum(*b.crossed);
            Report rep = check_skew(S);
            rep.merge(check_jacobi(S));
            rep.merge(check_averaging(S, Psum));
            rep.subject = "crossed direct sum";
            ordered_json rj;
            rj["bracket"] = table_json(S.structure);
            rj["operator"] = map_json(Psum);
            ordered_json extra;
            extra["result"] = rj;
            return out.finish(rep, extra);
        }
        if (c_ext->parsed()) {
            CLI::App *sub = c_ext->get_subcommands().front();
            std::string verb = sub->get_name();
            if (verb == "check-cocycle") {
                if (!b.cocycle)
                    throw BundleError("the bundle has no cocycle block");
                return out.finish(check_cocycle(*b.cocycle));
            }
            if (verb == "build") {
                if (!b.cocycle)
                    throw BundleError("the bundle has no cocycle block");
                Extension E = build_extension(*b.cocycle);
                Report rep = check_skew(E.total.alg);
                rep.merge(check_jacobi(E.total.alg));
                rep.merge(check_averaging(E.total.alg, E.total.P));
                rep.merge(check_extension(E));
                rep.subject = "built extension";
                if (!out_path.empty()) {
                    Bundle nb;
                    nb.algebra = b.algebra;
                    nb.fiber = b.fiber;
                    nb.extension = E;
                    std::ofstream f(out_path);
                    f << save_bundle(nb);
                }
                return out.finish(rep);
            }
            if (verb == "extract") {
                if (!b.extension)
                    throw BundleError("the bundle has no extension block");
                NonAbCocycle c = extract_cocycle(*b.extension);
                Report rep = check_cocycle(c);
                rep.subject = "extracted cocycle";
                ordered_json rj;
                rj["chi"] = table_json(c.chi);
                rj["rho"] = table_json(c.rho);
                rj["Phi"] = map_json(c.Phi);
                ordered_json extra;
                extra["result"] = rj;
                return out.finish(rep, extra);
            }
            // equiv
            if (!b.cocycle || !b.cocycle2)
                throw BundleError("equiv needs cocycle and cocycle2 blocks");
            Report rep = check_equivalence(*b.cocycle, *b.cocycle2,
                                           named_map(b, tau_name, "--tau"));
            return out.finish(rep);
        }
        if (c_wells->parsed()) {
            if (!b.extension)
                throw BundleError("the bundle has no extension block");
            AutPair ap{named_map(b, alpha_name, "--alpha"),
                       named_map(b, beta_name, "--beta")};
            ConformalMap tau = ConformalMap::zero(b.extension->fiber.rank(),
                                                  b.extension->base.rank());
            if (!tau_name.empty())
                tau = named_map(b, tau_name, "--tau");
            return out.finish(wells_verify(ap, *b.extension, tau));
        }
        if (c_solve->parsed()) {
            if (!b.cocycle || !b.cocycle2)
                throw BundleError("solve-tau needs cocycle and cocycle2 blocks");
            auto tau = tau_solve_abelian(*b.cocycle, *b.cocycle2, cap);
            Report rep;
            rep.subject = "tau solver";
            ordered_json extra;
            if (tau) {
                rep.pass("witness-found");
                extra["result"] = map_json(*tau);
            } else {
                rep.fail("witness-found", "", "", "",
                         "no witness within the degree cap");
            }
            return out.finish(rep, extra);
        }
        return 2;
    } catch (const BundleError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
