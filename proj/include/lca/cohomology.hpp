#pragma once

#include "lca/cochain.hpp"

namespace lca {

// Coboundary of the Lie conformal algebra complex. Input degree p gives
// degree p+1; the lambda of the extra slot is -d - l1 - ... - l_p with d
// acting on the value.
Cochain delta(const CochainContext &ctx, const Cochain &f);

// Coboundary of the averaging-operator complex: rho composed with P and the
// induced bracket [P(x) lambda y].
Cochain delta_AO(const CochainContext &ctx, const Cochain &f);

// Chain map xi f(x1..xp) = f(Px1..Pxp) - phi(f(Px1, x2..xp)).
Cochain xi(const CochainContext &ctx, const Cochain &f);

// d_AL(f, g) = (delta f, -xi f - delta_AO g); f must have degree >= 2 and g
// degree = deg f - 1. The complex is not defined at p = 1, so such pairs
// are rejected.
CochainPair d_AL(const CochainContext &ctx, const CochainPair &pair);

// Circle product on cochains with adjoint coefficients; degree p + q - 1.
Cochain circle(const Cochain &f, const Cochain &g);

// [f,g]_NR = f o g - (-1)^{(p-1)(q-1)} g o f.
Cochain nr_bracket(const Cochain &f, const Cochain &g);

// Maurer-Cartan check: [eta,eta]_NR = 0 for a degree-2 cochain.
Report mc_check(const Cochain &eta);

// d_eta = [eta, -]_NR.
Cochain d_eta(const Cochain &eta, const Cochain &g);

} // namespace lca
