#pragma once

#include <string>
#include <vector>

namespace lca {

inline constexpr const char *TOOL_VERSION = "lca 1.0.0";

struct CheckItem {
    std::string check;
    bool pass = true;
    std::string tuple;    // violating tuple, empty when pass
    std::string lhs;      // left-hand value at the violation
    std::string rhs;      // right-hand value
    std::string residual; // lhs - rhs in canonical form
};

// Deterministic check report: items appear in documented check order, and
// violations within a check in lexicographic tuple order.
struct Report {
    std::string subject;
    std::vector<CheckItem> items;

    void pass(const std::string &check);
    void fail(const std::string &check, const std::string &tuple,
              const std::string &lhs, const std::string &rhs,
              const std::string &residual);
    void merge(const Report &other, const std::string &prefix = "");

    bool ok() const;
    std::string summary() const;
    std::string to_json_string() const;
};

} // namespace lca
