#pragma once

#include <optional>

#include "cotwist/report.hpp"
#include "cotwist/wiring.hpp"

namespace cotwist {

struct Coalgebra {
  Space space;
  LinMap delta;   // C -> C (x) C
  LinMap counit;  // C -> k
};

struct Algebra {
  Space space;
  LinMap mult;  // A (x) A -> A
  LinMap unit;  // k -> A
};

struct HopfAlgebra {
  Space space;
  LinMap mult, unit, delta, counit;
  LinMap antipode;
  LinMap antipode_inv;  // composition inverse of S, computed at construction

  Coalgebra coalgebra() const { return {space, delta, counit}; }
  Algebra algebra() const { return {space, mult, unit}; }
};

/// Shape-checks the pieces and computes the antipode inverse (throws
/// SNotBijective). Axioms are NOT verified here; run check_hopf.
HopfAlgebra make_hopf(Space space, LinMap mult, LinMap unit, LinMap delta, LinMap counit,
                      LinMap antipode);

CheckReport check_coalgebra(const Coalgebra& c);
CheckReport check_algebra(const Algebra& a);
CheckReport check_hopf(const HopfAlgebra& h);

/// Composition inverse of the antipode, by matrix inversion.
LinMap antipode_inverse(const LinMap& antipode);

/// c -> c_1 (x) ... (x) c_{n+1} (leftmost-expansion bracketing).
LinMap iterated_comult(const Coalgebra& c, int n);

/// a_1 (x) ... (x) a_{n+1} -> a_1 ... a_{n+1} (left-associated product).
LinMap iterated_mult(const Algebra& a, int n);

/// An element of the convolution algebra Hom(C, A).
struct ConvElement {
  Coalgebra c;
  Algebra a;
  LinMap map;  // C -> A
};

ConvElement make_conv(Coalgebra c, Algebra a, LinMap map);
ConvElement conv_unit(const Coalgebra& c, const Algebra& a);  // u_A ∘ eps_C
ConvElement convolve(const ConvElement& f, const ConvElement& g);

/// Solves f * g = u eps in the convolution algebra, then asserts g * f = u eps
/// as well (one-sided inverses need not be two-sided a priori; it is checked,
/// not assumed). Returns nothing when no solution exists.
std::optional<ConvElement> convolution_inverse(const ConvElement& f);

}  // namespace cotwist
