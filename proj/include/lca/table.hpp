#pragma once

#include <functional>
#include <vector>

#include "lca/modelem.hpp"

namespace lca {

// Multilinear table over basis tuples: a value for each tuple (b1..bp) with
// b_k < dims[k]. Cochain and structure-constant storage. Stored values use d
// and l1..l_{p-1}; the lambda of the last slot is implicit (it equals
// -d - l1 - ... - l_{p-1} with d acting on the value).
struct MultiTable {
    std::vector<int> dims;
    int target_rank = 0;
    std::vector<ModElem> values; // row-major over dims

    MultiTable() = default;
    MultiTable(std::vector<int> dims_, int target_rank_);

    int arity() const { return static_cast<int>(dims.size()); }
    size_t size() const { return values.size(); }

    size_t index(const std::vector<int> &tuple) const;
    ModElem &at(const std::vector<int> &tuple);
    const ModElem &at(const std::vector<int> &tuple) const;

    bool is_zero() const;
    bool operator==(const MultiTable &o) const;
    MultiTable operator+(const MultiTable &o) const;
    MultiTable operator-(const MultiTable &o) const;
    MultiTable operator-() const;
    MultiTable scaled(const Rat &c) const;

    // Apply a C[d]-linear map to every value.
    MultiTable mapped(const ConformalMap &m) const;

    // Iterate all tuples in lexicographic order.
    void for_each_tuple(const std::function<void(const std::vector<int> &)> &fn) const;
};

// Argument to a table evaluation: a module element together with the
// lambda-slot polynomial of its position.
struct SlotArg {
    ModElem elem;
    Poly slot;
};

// Sesquilinear evaluation of a table on general arguments. For each basis
// tuple, the contribution is
//   prod_k coeff_k(d -> -slot_k)  *  value(b1..bp)(l_j -> slot_j, j < p),
// which realizes the extension rules: first-type slots substitute d by
// -lambda in argument coefficients, the stored value's own d is the d acting
// on the result, and stored l_j becomes the j-th slot polynomial.
ModElem eval_table(const MultiTable &table, const std::vector<SlotArg> &args);

// Canonical slot polynomials for a p-argument evaluation: l1..l_{p-1} and
// -d - l1 - ... - l_{p-1} for the last slot.
std::vector<Poly> canonical_slots(int p);

} // namespace lca
