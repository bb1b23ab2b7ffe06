#pragma once

#include <vector>

#include "lca/poly.hpp"

namespace lca {

// Element of a free C[d]-module with lambda-polynomial coefficients.
struct ModElem {
    std::vector<Poly> coords;

    ModElem() = default;
    explicit ModElem(int rank) : coords(rank) {}

    static ModElem basis(int rank, int index);
    static ModElem zero(int rank) { return ModElem(rank); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    ModElem operator-() const;
    ModElem operator+(const ModElem &o) const;
    ModElem operator-(const ModElem &o) const;
    ModElem &operator+=(const ModElem &o);
    ModElem &operator-=(const ModElem &o);
    bool operator==(const ModElem &o) const { return coords == o.coords; }
    bool operator!=(const ModElem &o) const { return !(*this == o); }

    ModElem scaled(const Poly &p) const;
    ModElem subst(const std::map<int, Poly> &bindings) const;
    int max_lambda() const;

    std::string to_string() const;
};

// C[d]-linear map between free modules, stored as a matrix of polynomials in
// d only (the entries must not mention lambda variables).
struct ConformalMap {
    int rows = 0, cols = 0;
    std::vector<Poly> entries; // row-major

    ConformalMap() = default;
    ConformalMap(int r, int c) : rows(r), cols(c), entries(r * c) {}

    static ConformalMap identity(int n);
    static ConformalMap zero(int r, int c);
    static ConformalMap scalar(int n, const Rat &c);

    Poly &at(int i, int j) { return entries[i * cols + j]; }
    const Poly &at(int i, int j) const { return entries[i * cols + j]; }

    bool is_zero() const;
    bool d_only() const;
    bool operator==(const ConformalMap &o) const;

    ModElem apply(const ModElem &v) const;
    ConformalMap compose(const ConformalMap &o) const; // this after o
    ConformalMap operator+(const ConformalMap &o) const;
    ConformalMap operator-(const ConformalMap &o) const;
    ConformalMap operator-() const;

    // Determinant by cofactor expansion; intended for the small ranks used
    // throughout (<= 8).
    Poly determinant() const;
    // Inverse over C[d]; exists iff the determinant is a nonzero rational
    // constant. Returns false if not invertible.
    bool inverse(ConformalMap &out) const;

    // Block map [[A, B], [C, D]] with A: r0 x c0.
    static ConformalMap block(const ConformalMap &a, const ConformalMap &b,
                              const ConformalMap &c, const ConformalMap &d);
};

} // namespace lca
