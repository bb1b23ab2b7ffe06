#include "lca/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lca {

std::string rat_to_string(const Rat &r) {
    Rat c(r);
    c.canonicalize();
    return c.get_str();
}

std::string var_name(int v) {
    if (v == VAR_D)
        return "d";
    return "l" + std::to_string(v);
}

Poly::Poly(const Rat &c) {
    Rat v(c);
    v.canonicalize();
    if (v != 0)
        terms_.emplace(Mono{}, v);
}

Poly::Poly(long c) {
    if (c != 0)
        terms_.emplace(Mono{}, Rat(c));
}

Poly Poly::variable(int v, int power) {
    if (v < 0 || v >= NVARS)
        throw std::invalid_argument("variable index out of range");
    Poly p;
    if (power == 0)
        return Poly(1);
    Mono m;
    m.exp[v] = static_cast<uint16_t>(power);
    p.terms_.emplace(m, Rat(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0;
}

Rat Poly::constant_value() const {
    if (terms_.empty())
        return Rat(0);
    if (!is_constant())
        throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Mono &m, const Rat &c) {
    Rat v(c);
    v.canonicalize();
    if (v == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, v);
    } else {
        it->second += v;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly &o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    Poly r;
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : o.terms_) {
            Mono m;
            for (int v = 0; v < NVARS; ++v)
                m.exp[v] = static_cast<uint16_t>(ma.exp[v] + mb.exp[v]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly &Poly::operator*=(const Poly &o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator*(const Rat &c) const {
    Poly r;
    Rat cc(c);
    cc.canonicalize();
    if (cc == 0)
        return r;
    for (const auto &[m, a] : terms_)
        r.terms_.emplace(m, a * cc);
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0)
        throw std::invalid_argument("negative exponent");
    Poly r(1);
    Poly base(*this);
    while (n > 0) {
        if (n & 1)
            r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Poly Poly::subst(const std::map<int, Poly> &bindings) const {
    Poly result;
    for (const auto &[m, c] : terms_) {
        Poly term(c);
        for (int v = 0; v < NVARS; ++v) {
            if (m.exp[v] == 0)
                continue;
            auto it = bindings.find(v);
            if (it == bindings.end())
                term *= Poly::variable(v, m.exp[v]);
            else
                term *= it->second.pow(m.exp[v]);
        }
        result += term;
    }
    return result;
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, static_cast<int>(m.exp[v]));
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

int Poly::max_lambda() const {
    int k = 0;
    for (const auto &[m, c] : terms_)
        for (int v = NVARS - 1; v >= 1; --v)
            if (m.exp[v] > 0) {
                k = std::max(k, v);
                break;
            }
    return k;
}

bool Poly::uses_var(int v) const {
    for (const auto &[m, c] : terms_)
        if (m.exp[v] > 0)
            return true;
    return false;
}

namespace {

std::string mono_to_string(const Mono &m) {
    std::string s;
    for (int v = 0; v < NVARS; ++v) {
        if (m.exp[v] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += var_name(v);
        if (m.exp[v] > 1)
            s += "^" + std::to_string(m.exp[v]);
    }
    return s;
}

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string ms = mono_to_string(m);
        if (ms.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << ms;
        } else {
            os << rat_to_string(a) << "*" << ms;
        }
    }
    return os.str();
}

} // namespace lca
