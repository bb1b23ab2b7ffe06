#include "lca/table.hpp"

#include <stdexcept>

namespace lca {

MultiTable::MultiTable(std::vector<int> dims_, int target_rank_)
    : dims(std::move(dims_)), target_rank(target_rank_) {
    size_t n = 1;
    for (int d : dims)
        n *= static_cast<size_t>(d);
    values.assign(n, ModElem(target_rank));
}

size_t MultiTable::index(const std::vector<int> &tuple) const {
    if (tuple.size() != dims.size())
        throw std::invalid_argument("tuple arity mismatch");
    size_t idx = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (tuple[k] < 0 || tuple[k] >= dims[k])
            throw std::out_of_range("basis index out of range");
        idx = idx * dims[k] + tuple[k];
    }
    return idx;
}

ModElem &MultiTable::at(const std::vector<int> &tuple) { return values[index(tuple)]; }
const ModElem &MultiTable::at(const std::vector<int> &tuple) const {
    return values[index(tuple)];
}

bool MultiTable::is_zero() const {
    for (const auto &v : values)
        if (!v.is_zero())
            return false;
    return true;
}

bool MultiTable::operator==(const MultiTable &o) const {
    return dims == o.dims && target_rank == o.target_rank && values == o.values;
}

MultiTable MultiTable::operator+(const MultiTable &o) const {
    if (dims != o.dims || target_rank != o.target_rank)
        throw std::invalid_argument("table shape mismatch");
    MultiTable r(*this);
    for (size_t i = 0; i < values.size(); ++i)
        r.values[i] += o.values[i];
    return r;
}

MultiTable MultiTable::operator-(const MultiTable &o) const {
    if (dims != o.dims || target_rank != o.target_rank)
        throw std::invalid_argument("table shape mismatch");
    MultiTable r(*this);
    for (size_t i = 0; i < values.size(); ++i)
        r.values[i] -= o.values[i];
    return r;
}

MultiTable MultiTable::operator-() const {
    MultiTable r(*this);
    for (auto &v : r.values)
        v = -v;
    return r;
}

MultiTable MultiTable::scaled(const Rat &c) const {
    MultiTable r(*this);
    Poly p{c};
    for (auto &v : r.values)
        v = v.scaled(p);
    return r;
}

MultiTable MultiTable::mapped(const ConformalMap &m) const {
    MultiTable r(dims, m.rows);
    for (size_t i = 0; i < values.size(); ++i)
        r.values[i] = m.apply(values[i]);
    return r;
}

void MultiTable::for_each_tuple(
    const std::function<void(const std::vector<int> &)> &fn) const {
    std::vector<int> tuple(dims.size(), 0);
    size_t n = values.size();
    for (size_t i = 0; i < n; ++i) {
        fn(tuple);
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            if (++tuple[k] < dims[k])
                break;
            tuple[k] = 0;
        }
    }
}

ModElem eval_table(const MultiTable &table, const std::vector<SlotArg> &args) {
    int p = table.arity();
    if (static_cast<int>(args.size()) != p)
        throw std::invalid_argument("argument count mismatch in eval_table");
    for (int k = 0; k < p; ++k)
        if (args[k].elem.rank() != table.dims[k])
            throw std::invalid_argument("argument rank mismatch in eval_table");

    // Stored lambda substitutions, shared by all tuples.
    std::map<int, Poly> value_sub;
    for (int j = 0; j + 1 < p; ++j)
        value_sub.emplace(var_l(j + 1), args[j].slot);

    // Coefficient substitutions d -> -slot_k.
    std::vector<std::map<int, Poly>> coeff_sub(p);
    for (int k = 0; k < p; ++k)
        coeff_sub[k].emplace(VAR_D, -args[k].slot);

    ModElem result(table.target_rank);
    std::vector<int> tuple(p, 0);
    std::function<void(int, const Poly &)> rec = [&](int k, const Poly &coeff) {
        if (coeff.is_zero())
            return;
        if (k == p) {
            const ModElem &base = table.at(tuple);
            if (base.is_zero())
                return;
            ModElem sub = base.subst(value_sub);
            result += sub.scaled(coeff);
            return;
        }
        for (int b = 0; b < table.dims[k]; ++b) {
            const Poly &c = args[k].elem.coords[b];
            if (c.is_zero())
                continue;
            tuple[k] = b;
            rec(k + 1, coeff * c.subst(coeff_sub[k]));
        }
    };
    rec(0, Poly(1));
    return result;
}

std::vector<Poly> canonical_slots(int p) {
    std::vector<Poly> slots;
    Poly last = -Poly::d();
    for (int k = 1; k < p; ++k) {
        slots.push_back(Poly::l(k));
        last -= Poly::l(k);
    }
    slots.push_back(last);
    return slots;
}

} // namespace lca
