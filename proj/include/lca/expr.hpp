#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lca/modelem.hpp"

namespace lca {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string &msg, size_t off)
        : std::runtime_error(msg + " at byte " + std::to_string(off)),
          offset(off) {}
};

// Result of expression parsing: a scalar part plus one polynomial per basis
// symbol. Module-element expressions have no scalar part; pure-scalar
// expressions have no basis parts.
struct ExprValue {
    Poly scalar;
    std::map<int, Poly> parts; // basis index -> coefficient

    bool scalar_only() const { return parts.empty(); }
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | 'd' | 'l'digit | IDENT | '(' expr ')' | '-' atom
//   rational := int ('/' uint)?
//   IDENT    := uppercase-initial identifier (basis symbol)
ExprValue parse_expr(const std::string &text,
                     const std::vector<std::string> &basis);

// Scalar polynomial: basis symbols are rejected.
Poly parse_scalar(const std::string &text);

// Module element over the given basis: every expanded monomial must carry
// exactly one basis symbol (a zero expression is allowed).
ModElem parse_modelem(const std::string &text,
                      const std::vector<std::string> &basis);

} // namespace lca
