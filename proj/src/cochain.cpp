#include "lca/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lca {

Cochain Cochain::make(int degree, int alg_rank, int module_rank) {
    Cochain f;
    f.degree = degree;
    f.alg_rank = alg_rank;
    f.module_rank = module_rank;
    f.values = MultiTable(std::vector<int>(degree, alg_rank), module_rank);
    return f;
}

Cochain Cochain::operator+(const Cochain &o) const {
    Cochain r(*this);
    r.values = values + o.values;
    return r;
}

Cochain Cochain::operator-(const Cochain &o) const {
    Cochain r(*this);
    r.values = values - o.values;
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r(*this);
    r.values = -values;
    return r;
}

CochainContext CochainContext::adjoint(const LieConformalAlgebra &A,
                                       const ConformalMap &P,
                                       const ConformalMap &phi) {
    CochainContext ctx;
    ctx.alg = A;
    ctx.action = A.structure;
    ctx.module_rank = A.rank();
    ctx.P = P;
    ctx.phi = phi;
    return ctx;
}

CochainContext CochainContext::adjoint(const LieConformalAlgebra &A) {
    return adjoint(A, ConformalMap::identity(A.rank()),
                   ConformalMap::identity(A.rank()));
}

CochainContext CochainContext::with_rep(const ConformalRep &R,
                                        const ConformalMap &P,
                                        const ConformalMap &phi) {
    CochainContext ctx;
    ctx.alg = R.algebra;
    ctx.action = R.action;
    ctx.module_rank = R.module_rank();
    ctx.P = P;
    ctx.phi = phi;
    return ctx;
}

ModElem CochainContext::act(const ModElem &x, const Poly &slot,
                            const ModElem &v) const {
    return eval_table(action, {{x, slot}, {v, -Poly::d() - slot}});
}

ModElem eval_cochain(const Cochain &f, const std::vector<SlotArg> &args) {
    return eval_table(f.values, args);
}

int perm_sign(const std::vector<int> &perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

Cochain cochain_permuted(const Cochain &f, const std::vector<int> &perm) {
    int p = f.degree;
    if (static_cast<int>(perm.size()) != p)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Poly> slots = canonical_slots(p);
    Cochain out = Cochain::make(p, f.alg_rank, f.module_rank);
    int sign = perm_sign(perm);
    out.values.for_each_tuple([&](const std::vector<int> &tuple) {
        std::vector<SlotArg> args;
        args.reserve(p);
        for (int k = 0; k < p; ++k)
            args.push_back(
                {ModElem::basis(f.alg_rank, tuple[perm[k]]), slots[perm[k]]});
        ModElem v = eval_cochain(f, args);
        out.values.at(tuple) = (sign > 0) ? v : -v;
    });
    return out;
}

namespace {

std::string index_tuple_name(const std::vector<int> &t) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < t.size(); ++k) {
        if (k)
            os << ",";
        os << t[k];
    }
    os << ")";
    return os.str();
}

} // namespace

Report check_cochain(const Cochain &f, const std::string &subject) {
    Report rep;
    rep.subject = subject;
    if (f.degree > 4) {
        rep.fail("cochain-skew", "", "", "", "degree > 4 unsupported");
        return rep;
    }
    std::string bound = var_bound_error(f);
    if (!bound.empty()) {
        rep.fail("cochain-vars", "", "", "", bound);
        return rep;
    }
    rep.pass("cochain-vars");
    int p = f.degree;
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    bool all = true;
    do {
        Cochain g = cochain_permuted(f, perm);
        if (!(g.values == f.values)) {
            // locate first differing tuple for the report
            f.values.for_each_tuple([&](const std::vector<int> &tuple) {
                const ModElem &a = f.values.at(tuple);
                const ModElem &b = g.values.at(tuple);
                if (a != b) {
                    all = false;
                    std::ostringstream os;
                    os << index_tuple_name(tuple) << " perm "
                       << index_tuple_name(perm);
                    rep.fail("cochain-skew", os.str(), a.to_string(),
                             b.to_string(), (a - b).to_string());
                }
            });
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (all)
        rep.pass("cochain-skew");
    return rep;
}

std::pair<Cochain, Report> skew_symmetrize(const Cochain &raw) {
    int p = raw.degree;
    if (p > 4)
        throw std::invalid_argument("skew_symmetrize supports degree <= 4");
    Cochain acc = Cochain::make(p, raw.alg_rank, raw.module_rank);
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        acc.values = acc.values + cochain_permuted(raw, perm).values;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc.values = acc.values.scaled(Rat(1, count));
    Report rep = check_cochain(acc, "skew_symmetrize");
    return {acc, rep};
}

std::string var_bound_error(const Cochain &f) {
    // A degree-p cochain may use only d and l1..l_{p-1}.
    std::string err;
    f.values.for_each_tuple([&](const std::vector<int> &tuple) {
        if (!err.empty())
            return;
        int ml = f.values.at(tuple).max_lambda();
        if (ml > f.degree - 1) {
            std::ostringstream os;
            os << "value at " << index_tuple_name(tuple) << " uses l"
               << ml << " but degree " << f.degree << " allows l1..l"
               << f.degree - 1;
            err = os.str();
        }
    });
    return err;
}

} // namespace lca
