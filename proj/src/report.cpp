#include "lca/report.hpp"

#include <json.hpp>
#include <sstream>

namespace lca {

void Report::pass(const std::string &check) {
    items.push_back(CheckItem{check, true, "", "", "", ""});
}

void Report::fail(const std::string &check, const std::string &tuple,
                  const std::string &lhs, const std::string &rhs,
                  const std::string &residual) {
    items.push_back(CheckItem{check, false, tuple, lhs, rhs, residual});
}

void Report::merge(const Report &other, const std::string &prefix) {
    for (const auto &it : other.items) {
        CheckItem copy = it;
        if (!prefix.empty())
            copy.check = prefix + copy.check;
        items.push_back(copy);
    }
}

bool Report::ok() const {
    for (const auto &it : items)
        if (!it.pass)
            return false;
    return true;
}

std::string Report::summary() const {
    std::ostringstream os;
    for (const auto &it : items) {
        os << (it.pass ? "  ok   " : "  FAIL ") << it.check;
        if (!it.pass) {
            if (!it.tuple.empty())
                os << " at " << it.tuple;
            if (!it.residual.empty())
                os << "  residual: " << it.residual;
        }
        os << "\n";
    }
    os << (ok() ? "PASS" : "FAIL") << " " << subject << "\n";
    return os.str();
}

std::string Report::to_json_string() const {
    nlohmann::ordered_json j;
    j["tool"] = TOOL_VERSION;
    j["subject"] = subject;
    j["overall_pass"] = ok();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto &it : items) {
        nlohmann::ordered_json c;
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
    return j.dump(2) + "\n";
}

} // namespace lca
