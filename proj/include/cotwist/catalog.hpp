#pragma once

#include "cotwist/crossed.hpp"
#include "cotwist/hopf.hpp"
#include "cotwist/module_coalgebra.hpp"
#include "cotwist/serialize.hpp"

namespace cotwist {

/// Group algebra kC_n: basis 1, g, g2, ...; Delta g = g (x) g, S(g) = g^-1.
HopfAlgebra group_algebra_cyclic(int n, FieldSpec field);

/// Dual of kC_2: basis e0, e1 with e_a e_b = delta_ab e_a,
/// Delta e_a = sum_b e_b (x) e_{a-b}.
HopfAlgebra dual_group_c2(FieldSpec field);

/// Sweedler's four-dimensional Hopf algebra: 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx; Delta x = x (x) 1 + g (x) x; S(g) = g, S(x) = -gx.
/// Rejects characteristic 2.
HopfAlgebra sweedler_h4(FieldSpec field);

/// H = k (one-dimensional Hopf algebra).
HopfAlgebra trivial_hopf(FieldSpec field);

/// C = H with the right regular action.
ModuleCoalgebra regular_module(const HopfAlgebra& h);

/// C = k with c . h = eps(h) c.
ModuleCoalgebra trivial_module(const HopfAlgebra& h);

/// The sign 2-cocycle on the dual of C2 with C = k and trivial coaction:
/// alpha(1) = sum_{a,b} (-1)^{ab} e_a (x) e_b.
HarrisonCocycle harrison_c2_sign(FieldSpec field);

/// The one-parameter family containing it: component at e1 (x) e1 equals t,
/// all others 1. A Harrison cocycle for every t; convolution invertible iff
/// t != 0. t = -1 recovers harrison_c2_sign.
HarrisonCocycle harrison_c2_scaled(FieldSpec field, const Scalar& t);

/// Grading coaction on C = dual_group_c2 over H = kC2: rho(e_a) = g^a (x) e_a,
/// with trivial cocycle. A Harrison cocycle with a nontrivial weak coaction.
HarrisonCocycle graded_c2(FieldSpec field);

/// Built-in structure documents by name:
///   group:C2  group:C4  dualgroup:C2  sweedler:H4      (Hopf algebras)
///   regular:<hopf>  trivial:<hopf>                     (module coalgebras)
///   harrison:C2-sign                                   (Harrison cocycle)
/// Throws UnknownName; sweedler:H4 additionally rejects characteristic 2.
Bundle builtin(const std::string& name, FieldSpec field);
const std::vector<std::string>& builtin_names();

}  // namespace cotwist
