#include "lca/cohomology.hpp"

#include <stdexcept>

namespace lca {

namespace {

// Shared form of delta and delta_AO: `avg` routes x through P in the rho
// terms and the inserted bracket.
Cochain differential(const CochainContext &ctx, const Cochain &f, bool avg) {
    int p = f.degree;
    int n = ctx.alg.rank();
    if (f.alg_rank != n || f.module_rank != ctx.module_rank)
        throw std::invalid_argument("cochain does not match context");
    if (p + 1 > 9)
        throw std::invalid_argument("degree out of supported range");
    Cochain out = Cochain::make(p + 1, n, ctx.module_rank);
    std::vector<Poly> slots = canonical_slots(p + 1);
    out.values.for_each_tuple([&](const std::vector<int> &t) {
        ModElem total(ctx.module_rank);
        // rho terms
        for (int i = 0; i <= p; ++i) {
            std::vector<SlotArg> args;
            args.reserve(p);
            for (int k = 0; k <= p; ++k)
                if (k != i)
                    args.push_back({ModElem::basis(n, t[k]), slots[k]});
            ModElem inner = eval_cochain(f, args);
            ModElem x = ModElem::basis(n, t[i]);
            if (avg)
                x = ctx.P.apply(x);
            ModElem term = ctx.act(x, slots[i], inner);
            if (i % 2 == 0)
                total += term;
            else
                total -= term;
        }
        // bracket-insertion terms
        for (int i = 0; i <= p; ++i) {
            for (int j = i + 1; j <= p; ++j) {
                ModElem x = ModElem::basis(n, t[i]);
                if (avg)
                    x = ctx.P.apply(x);
                ModElem w = bracket_eval(ctx.alg, x, slots[i],
                                         ModElem::basis(n, t[j]),
                                         -Poly::d() - slots[i]);
                std::vector<SlotArg> args;
                args.reserve(p);
                args.push_back({w, slots[i] + slots[j]});
                for (int k = 0; k <= p; ++k)
                    if (k != i && k != j)
                        args.push_back({ModElem::basis(n, t[k]), slots[k]});
                ModElem term = eval_cochain(f, args);
                if ((i + j) % 2 == 0) // 1-based (i+1)+(j+1) has same parity
                    total += term;
                else
                    total -= term;
            }
        }
        out.values.at(t) = total;
    });
    return out;
}

} // namespace

Cochain delta(const CochainContext &ctx, const Cochain &f) {
    return differential(ctx, f, false);
}

Cochain delta_AO(const CochainContext &ctx, const Cochain &f) {
    return differential(ctx, f, true);
}

Cochain xi(const CochainContext &ctx, const Cochain &f) {
    int p = f.degree;
    int n = ctx.alg.rank();
    Cochain out = Cochain::make(p, n, ctx.module_rank);
    std::vector<Poly> slots = canonical_slots(p);
    out.values.for_each_tuple([&](const std::vector<int> &t) {
        std::vector<SlotArg> all_p;
        for (int k = 0; k < p; ++k)
            all_p.push_back({ctx.P.apply(ModElem::basis(n, t[k])), slots[k]});
        ModElem v = eval_cochain(f, all_p);
        out.values.at(t) = v - ctx.phi.apply(v);
    });
    return out;
}

CochainPair d_AL(const CochainContext &ctx, const CochainPair &pair) {
    if (pair.f.degree < 2 || pair.g.degree != pair.f.degree - 1)
        throw std::invalid_argument(
            "d_AL needs degrees (p, p-1) with p >= 2; the p = 1 corner is not "
            "defined by the complex");
    CochainPair out;
    out.f = delta(ctx, pair.f);
    out.g = -xi(ctx, pair.f) - delta_AO(ctx, pair.g);
    return out;
}

namespace {

// (q, p-1)-shuffles of {0..p+q-2}: increasing on the first q and on the rest.
void for_each_shuffle(int total, int q,
                      const std::function<void(const std::vector<int> &, int)> &fn) {
    std::vector<int> sel(q);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == q) {
            std::vector<int> perm(sel);
            std::vector<bool> used(total, false);
            for (int s : sel)
                used[s] = true;
            for (int i = 0; i < total; ++i)
                if (!used[i])
                    perm.push_back(i);
            fn(perm, perm_sign(perm));
            return;
        }
        for (int i = start; i <= total - (q - k); ++i) {
            sel[k] = i;
            rec(i + 1, k + 1);
        }
    };
    if (q == 0) {
        std::vector<int> perm(total);
        for (int i = 0; i < total; ++i)
            perm[i] = i;
        fn(perm, 1);
        return;
    }
    rec(0, 0);
}

} // namespace

Cochain circle(const Cochain &f, const Cochain &g) {
    int p = f.degree, q = g.degree;
    int r = p + q - 1;
    if (f.alg_rank != g.alg_rank || f.module_rank != f.alg_rank ||
        g.module_rank != g.alg_rank)
        throw std::invalid_argument("circle product needs adjoint coefficients");
    if (r > 9)
        throw std::invalid_argument("circle product degree overflow");
    int n = f.alg_rank;
    Cochain out = Cochain::make(r, n, n);
    std::vector<Poly> slots = canonical_slots(r);
    out.values.for_each_tuple([&](const std::vector<int> &t) {
        ModElem total(n);
        for_each_shuffle(r, q, [&](const std::vector<int> &perm, int sign) {
            std::vector<SlotArg> gargs;
            Poly gsum;
            for (int k = 0; k < q; ++k) {
                gargs.push_back({ModElem::basis(n, t[perm[k]]), slots[perm[k]]});
                gsum += slots[perm[k]];
            }
            ModElem gval = eval_cochain(g, gargs);
            std::vector<SlotArg> fargs;
            fargs.push_back({gval, gsum});
            for (int k = q; k < r; ++k)
                fargs.push_back({ModElem::basis(n, t[perm[k]]), slots[perm[k]]});
            ModElem term = eval_cochain(f, fargs);
            if (sign > 0)
                total += term;
            else
                total -= term;
        });
        out.values.at(t) = total;
    });
    return out;
}

Cochain nr_bracket(const Cochain &f, const Cochain &g) {
    Cochain fg = circle(f, g);
    Cochain gf = circle(g, f);
    int e = (f.degree - 1) * (g.degree - 1);
    return (e % 2 == 0) ? fg - gf : fg + gf;
}

Report mc_check(const Cochain &eta) {
    Report rep;
    rep.subject = "maurer-cartan";
    if (eta.degree != 2)
        throw std::invalid_argument("Maurer-Cartan elements have degree 2");
    Cochain c = nr_bracket(eta, eta);
    bool all = true;
    c.values.for_each_tuple([&](const std::vector<int> &t) {
        const ModElem &v = c.values.at(t);
        if (!v.is_zero()) {
            all = false;
            std::string tup = "(";
            for (size_t k = 0; k < t.size(); ++k)
                tup += (k ? "," : "") + std::to_string(t[k]);
            tup += ")";
            rep.fail("maurer-cartan", tup, v.to_string(), "0", v.to_string());
        }
    });
    if (all)
        rep.pass("maurer-cartan");
    return rep;
}

Cochain d_eta(const Cochain &eta, const Cochain &g) {
    return nr_bracket(eta, g);
}

} // namespace lca
