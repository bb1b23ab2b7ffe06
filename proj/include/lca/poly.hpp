#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lca {

using Rat = mpq_class;

std::string rat_to_string(const Rat &r);

// Variable universe: d (index 0) and l1..l9 (indices 1..9).
constexpr int NVARS = 10;
constexpr int VAR_D = 0;
constexpr int var_l(int k) { return k; } // l1 -> 1, ..., l9 -> 9

std::string var_name(int v);

struct Mono {
    std::array<uint16_t, NVARS> exp{};

    int total_degree() const {
        int s = 0;
        for (int e : exp)
            s += e;
        return s;
    }
    bool operator==(const Mono &o) const { return exp == o.exp; }
};

// Graded lexicographic order with d < l1 < ... < l9, arranged so that map
// iteration yields the leading term first (degree descending, then d-major).
struct MonoGrlexGreater {
    bool operator()(const Mono &a, const Mono &b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da > db;
        for (int v = 0; v < NVARS; ++v)
            if (a.exp[v] != b.exp[v])
                return a.exp[v] > b.exp[v];
        return false;
    }
};

// Exact sparse polynomial in d, l1..l9 over the rationals. Zero coefficients
// are never stored, so equality is map equality.
class Poly {
  public:
    using Terms = std::map<Mono, Rat, MonoGrlexGreater>;

    Poly() = default;
    explicit Poly(const Rat &c);
    explicit Poly(long c);

    static Poly variable(int v, int power = 1);
    static Poly d() { return variable(VAR_D); }
    static Poly l(int k) { return variable(var_l(k)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()

    const Terms &terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly operator*(const Rat &c) const;
    bool operator==(const Poly &o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly pow(int n) const;

    // Simultaneous substitution of variables by polynomials. Variables not
    // present in the map are left untouched.
    Poly subst(const std::map<int, Poly> &bindings) const;

    int degree_in(int v) const;
    int total_degree() const;
    // Highest lX index occurring, 0 if none.
    int max_lambda() const;
    bool uses_var(int v) const;

    void add_term(const Mono &m, const Rat &c);

    std::string to_string() const;

  private:
    Terms terms_;
};

inline Poly operator*(const Rat &c, const Poly &p) { return p * c; }

} // namespace lca
