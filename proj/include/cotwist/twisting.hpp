#pragma once

#include <optional>

#include "cotwist/module_coalgebra.hpp"

namespace cotwist {

enum class Flag { Unknown, Pass, Fail };

/// Candidate twisting tau: C -> H (x) C of a right H-module coalgebra.
/// Check flags are tri-state and filled lazily by check_right_twisting (a
/// value is written at most once; results do not depend on evaluation order).
struct RightTwist {
  ModuleCoalgebra mc;
  LinMap map;  // C -> H (x) C
  mutable Flag normality = Flag::Unknown;  // Eq. counit conditions
  mutable Flag eq6 = Flag::Unknown;
  mutable Flag eq7 = Flag::Unknown;
  std::optional<LinMap> inverse;  // *-inverse map, Eq. 12 verified when present
};

/// Candidate left-hand twisting lambda: C -> C (x) H.
struct LeftTwist {
  ModuleCoalgebra mc;
  LinMap map;  // C -> C (x) H
  mutable Flag normality = Flag::Unknown;
  mutable Flag eq8 = Flag::Unknown;
  mutable Flag eq9 = Flag::Unknown;
  std::optional<LinMap> inverse;
};

RightTwist make_right_twist(ModuleCoalgebra mc, LinMap tau);
LeftTwist make_left_twist(ModuleCoalgebra mc, LinMap lambda);

/// sigma(c) = 1 (x) c, the unit of (Hom(C, H (x) C), *).
RightTwist sigma_twist(const ModuleCoalgebra& mc);
/// sigma'(c) = c (x) 1, the unit of (Hom(C, C (x) H), x).
LeftTwist sigma_prime(const ModuleCoalgebra& mc);

/// tau * lambda = (m_H (x) id) ∘ (id (x) lambda) ∘ tau.
RightTwist star_product(const RightTwist& t1, const RightTwist& t2);

/// tau x lambda = T ∘ (T∘lambda * T∘tau).
LeftTwist times_product(const LeftTwist& l1, const LeftTwist& l2);

/// The endomorphism realization f_tau(h (x) c) = h tau(c); the algebra
/// isomorphism onto H-linear endomorphisms of H (x) C (opposite composition).
LinMap endo_of_right(const RightTwist& t);
/// g_gamma(c (x) h) = c_0 (x) h c_1; satisfies g_{tau x lambda} = g_tau ∘ g_lambda.
LinMap endo_of_left(const LeftTwist& l);

/// Checks the normality conditions, the two twisting equations, and the
/// antipode form of the module-compatibility equation, asserting that the
/// latter two agree as pass/fail outcomes. Fills the flags.
CheckReport check_right_twisting(const RightTwist& t);
CheckReport check_left_twisting(const LeftTwist& l);

bool is_twisting(const RightTwist& t);
bool is_twisting(const LeftTwist& l);

/// C^tau: same space and action, comultiplication Delta_tau(c) =
/// c_1 . c_{2,-1} (x) c_{2,0}. Throws NotATwisting unless every flag passes;
/// force = true returns the (possibly non-coassociative) candidate anyway.
ModuleCoalgebra twist_coalgebra(const RightTwist& t, bool force = false);
LinMap delta_tau(const RightTwist& t);

/// lambda-twist: Delta(c) = c_{1,0} (x) c_2 . c_{1,1}.
ModuleCoalgebra twist_coalgebra_left(const LeftTwist& l, bool force = false);
LinMap delta_left(const LeftTwist& l);

/// M^tau with rho^tau(m) = m_0 . m_{1,-1} (x) m_{1,0}; result verified in
/// M_H^{C^tau} unless force.
RelHopfModule twist_comodule(const RelHopfModule& m, const RightTwist& t,
                             bool force = false);
/// Left variant: rho(m) = m_{-1,0} (x) m_0 . m_{-1,1}.
LeftRelHopfModule twist_comodule_left(const LeftRelHopfModule& m, const LeftTwist& l,
                                      bool force = false);

/// *-inverse via a linear solve in the endomorphism realization. Both Eq. 12
/// identities are asserted on the result; the returned twist carries the
/// original map as its inverse.
std::optional<RightTwist> invert_twisting(const RightTwist& t);
std::optional<LeftTwist> invert_twisting(const LeftTwist& l);

/// Attaches the *-inverse (throws NotInvertible).
RightTwist with_inverse(const RightTwist& t);
LeftTwist with_inverse(const LeftTwist& l);

/// The bijection U(T(C)) -> U(L(C)) and its inverse. Requires the argument's
/// inverse to be attached (InverseMissing otherwise); output comes with its
/// own verified inverse attached.
LeftTwist transpose_rtl(const RightTwist& t);   // l(tau)
RightTwist transpose_ltr(const LeftTwist& g);   // r(gamma)

}  // namespace cotwist
