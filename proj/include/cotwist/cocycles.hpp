#pragma once

#include "cotwist/crossed.hpp"

namespace cotwist {

/// Twisted 2-cocycle alpha: C -> H (x) H on an H-module coalgebra (the S/Sbar
/// conjugated variant). Flags fill lazily, first writer wins.
struct TwistedCocycle {
  ModuleCoalgebra mc;
  LinMap alpha;
  mutable Flag eq_a = Flag::Unknown;
  mutable Flag eq_b = Flag::Unknown;
  mutable Flag eq_c = Flag::Unknown;
};

/// Rejects Hopf data without a bijective antipode (the S/Sbar conjugation in
/// the module-compatibility equation needs it); that is already enforced by
/// HopfAlgebra construction, so this just shape-checks.
TwistedCocycle make_twisted_cocycle(ModuleCoalgebra mc, LinMap alpha);
CheckReport check_twisted_cocycle(const TwistedCocycle& tc);
bool is_twisted_cocycle(const TwistedCocycle& tc);

/// tau_alpha(c) = alpha_1(c_1) (x) c_2 . alpha_2(c_1); verified to pass the
/// twisting equations (this is the instance-wise content of the statement).
RightTwist twisting_from_twisted_cocycle(const TwistedCocycle& tc);

/// Harrison 2-cocycle for the trivial weak coaction on an H-module coalgebra.
struct TrivialHarrison {
  ModuleCoalgebra mc;
  LinMap alpha;
  mutable Flag eq_i = Flag::Unknown;
  mutable Flag eq_d = Flag::Unknown;
  mutable Flag eq_e = Flag::Unknown;
};

TrivialHarrison make_trivial_harrison(ModuleCoalgebra mc, LinMap alpha);
CheckReport check_trivial_harrison(const TrivialHarrison& th);
bool is_trivial_harrison(const TrivialHarrison& th);

/// Wraps as a full Harrison cocycle with rho(c) = 1 (x) c.
HarrisonCocycle to_harrison(const TrivialHarrison& th);

/// alpha^t(c (x) h) = S(h_1) alpha_1(c) h_2 (x) Sbar(h_4) alpha_2(c) h_3,
/// a twisted 2-cocycle on C (x) H; restricting back returns the input.
TwistedCocycle lift_to_twisted(const TrivialHarrison& th);

/// alpha(c) = alpha^t(c (x) 1); lifting back returns the input.
TrivialHarrison restrict_to_harrison(const TwistedCocycle& tc, const ModuleCoalgebra& c_mc);

}  // namespace cotwist
