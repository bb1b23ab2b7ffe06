#pragma once

#include <optional>

#include "lca/cochain.hpp"
#include "lca/extensions.hpp"
#include "lca/homotopy2.hpp"

namespace lca {

struct BundleError : std::runtime_error {
    explicit BundleError(const std::string &msg) : std::runtime_error(msg) {}
};

// Representation block of a bundle: module basis and action, with optional
// names of the phi map and the algebra averaging operator in "maps".
struct BundleRep {
    std::vector<std::string> module_basis;
    MultiTable action;
    std::string phi_name;      // empty when absent
    std::string operator_name; // empty when absent
};

struct TwoTermBundle {
    TwoTermLInf T;
    HomotopyAvg P;
};

// In-memory form of a declarative bundle file (format 1).
struct Bundle {
    LieConformalAlgebra algebra;
    std::optional<AssocConformalAlgebra> assoc;
    std::optional<LieConformalAlgebra> fiber;
    std::map<std::string, ConformalMap> maps;
    std::optional<BundleRep> rep;
    std::map<std::string, Cochain> cochains;
    std::optional<TwoTermBundle> two_term;
    std::optional<CrossedModule> crossed;
    std::optional<NonAbCocycle> cocycle;
    std::optional<NonAbCocycle> cocycle2;
    std::optional<Extension> extension;
    std::optional<AutPair> aut_pair;

    const ConformalMap &map_named(const std::string &name) const;
};

Bundle load_bundle(const std::string &json_text);
Bundle load_bundle_file(const std::string &path);
std::string save_bundle(const Bundle &b);

} // namespace lca
