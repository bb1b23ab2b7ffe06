#include "lca/expr.hpp"

#include <cctype>

namespace lca {

namespace {

class Parser {
  public:
    Parser(const std::string &text, const std::vector<std::string> &basis)
        : text_(text), basis_(basis) {}

    ExprValue run() {
        ExprValue v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    const std::string &text_;
    const std::vector<std::string> &basis_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(
                                          static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static ExprValue from_poly(const Poly &p) {
        ExprValue v;
        v.scalar = p;
        return v;
    }

    static ExprValue add(const ExprValue &a, const ExprValue &b) {
        ExprValue r = a;
        r.scalar += b.scalar;
        for (const auto &[k, p] : b.parts) {
            r.parts[k] += p;
            if (r.parts[k].is_zero())
                r.parts.erase(k);
        }
        return r;
    }

    ExprValue mul(const ExprValue &a, const ExprValue &b, size_t at) {
        if (!a.parts.empty() && !b.parts.empty())
            throw ParseError("product of basis symbols", at);
        const ExprValue &mod = a.parts.empty() ? b : a;
        const ExprValue &sca = a.parts.empty() ? a : b;
        ExprValue r;
        r.scalar = a.scalar * b.scalar;
        for (const auto &[k, p] : mod.parts) {
            Poly q = p * sca.scalar;
            if (!q.is_zero())
                r.parts[k] = q;
        }
        return r;
    }

    static ExprValue neg(const ExprValue &a) {
        ExprValue r;
        r.scalar = -a.scalar;
        for (const auto &[k, p] : a.parts)
            r.parts[k] = -p;
        return r;
    }

    ExprValue expr() {
        ExprValue v = term();
        while (true) {
            if (eat('+'))
                v = add(v, term());
            else if (eat('-'))
                v = add(v, neg(term()));
            else
                return v;
        }
    }

    ExprValue term() {
        size_t at = pos_;
        ExprValue v = factor();
        while (eat('*')) {
            ExprValue w = factor();
            v = mul(v, w, at);
        }
        return v;
    }

    ExprValue factor() {
        ExprValue v = atom();
        skip_ws();
        if (eat('^')) {
            size_t at = pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            long e = parse_uint();
            if (!v.parts.empty()) {
                if (e == 0)
                    return from_poly(Poly(1));
                if (e != 1)
                    throw ParseError("power of a basis symbol", at);
                return v;
            }
            return from_poly(v.scalar.pow(static_cast<int>(e)));
        }
        return v;
    }

    long parse_uint() {
        skip_ws();
        size_t at = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an unsigned integer", at);
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return std::stol(digits);
    }

    ExprValue atom() {
        skip_ws();
        size_t at = pos_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprValue v = expr();
            if (!eat(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == '-') {
            ++pos_;
            return neg(atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint();
            if (eat('/')) {
                long den = parse_uint();
                if (den == 0)
                    throw ParseError("zero denominator", at);
                return from_poly(Poly(Rat(num, den)));
            }
            return from_poly(Poly(Rat(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ident += text_[pos_++];
            if (ident == "d")
                return from_poly(Poly::d());
            if (ident.size() >= 2 && ident[0] == 'l' &&
                std::isdigit(static_cast<unsigned char>(ident[1]))) {
                if (ident.size() != 2 || ident[1] == '0')
                    throw ParseError("unknown lambda variable '" + ident + "'",
                                     at);
                return from_poly(Poly::l(ident[1] - '0'));
            }
            if (std::isupper(static_cast<unsigned char>(ident[0]))) {
                for (size_t k = 0; k < basis_.size(); ++k)
                    if (basis_[k] == ident) {
                        ExprValue v;
                        v.parts[static_cast<int>(k)] = Poly(1);
                        return v;
                    }
                throw ParseError("unknown basis symbol '" + ident + "'", at);
            }
            throw ParseError("unknown identifier '" + ident + "'", at);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
};

} // namespace

ExprValue parse_expr(const std::string &text,
                     const std::vector<std::string> &basis) {
    return Parser(text, basis).run();
}

Poly parse_scalar(const std::string &text) {
    ExprValue v = parse_expr(text, {});
    return v.scalar;
}

ModElem parse_modelem(const std::string &text,
                      const std::vector<std::string> &basis) {
    ExprValue v = parse_expr(text, basis);
    if (!v.scalar.is_zero())
        throw ParseError("module expression has a scalar term", 0);
    ModElem out(static_cast<int>(basis.size()));
    for (const auto &[k, p] : v.parts)
        out.coords[k] = p;
    return out;
}

} // namespace lca
