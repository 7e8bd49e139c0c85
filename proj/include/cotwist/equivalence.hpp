#pragma once

#include "cotwist/crossed.hpp"

namespace cotwist {

/// Candidate equivalence datum between two twistings of one module coalgebra:
/// v: C -> H subject to the counit, H-linearity and intertwining equations.
/// When v is convolution invertible its inverse is attached and tau ~ lambda.
struct EquivWitness {
  ModuleCoalgebra mc;
  RightTwist tau;
  RightTwist lambda;
  LinMap v;  // C -> H
  mutable Flag counit = Flag::Unknown;
  mutable Flag linearity = Flag::Unknown;
  mutable Flag eq22 = Flag::Unknown;
  std::optional<LinMap> inverse;  // convolution inverse of v, when it exists
};

/// Shape checks + eager convolution-inversion attempt (inverse left empty when
/// v is not in Reg(C, H)).
EquivWitness make_witness(const RightTwist& tau, const RightTwist& lambda, LinMap v);

/// The trivial witness v = u eps for tau ~ tau.
EquivWitness reflexive_witness(const RightTwist& tau);

/// Checks the three witness identities; when v is invertible additionally
/// checks the closed form of lambda implied by them (the solved-for variant of
/// the intertwining equation).
CheckReport check_witness(const EquivWitness& w);
bool is_witness(const EquivWitness& w);

/// psi(c) = c_1 . v(c_2), verified as a left B-colinear right H-linear
/// coalgebra map C^tau -> C^lambda inducing the identity on B (bijective with
/// inverse c_1 . w(c_2) when v is invertible).
LinMap psi_from_witness(const EquivWitness& w);

/// Morphism checks for a candidate psi between two twisted structures.
CheckReport check_psi_morphism(const RightTwist& tau, const RightTwist& lambda,
                               const LinMap& psi);

/// Symmetry: the witness for lambda ~ tau carried by the convolution inverse.
EquivWitness invert_witness(const EquivWitness& w);

/// Transitivity: from tau ~ lambda (via v) and lambda ~ gamma (via u) to
/// tau ~ gamma via u * v.
EquivWitness compose_witness(const EquivWitness& first, const EquivWitness& second);

/// Inverse transfer: given tau ~ lambda with invertible v and the *-inverse of
/// tau, produces the *-inverse mu of lambda (both unit identities asserted).
RightTwist transfer_inverse(const EquivWitness& w, const RightTwist& tau_inv);

/// Bridge to crossed-coproduct isomorphisms on C (x) H: from u in Reg(C, H)
/// intertwining (target | source) data to the witness v(c (x) h) =
/// S(h_1) u^-1(c) h_2 between the corresponding twistings, and back via
/// u(c) = v^-1(c (x) 1). The two constructions are mutually inverse.
EquivWitness witness_from_crossed_iso(const ConvElement& u, const CrossedCoproduct& source,
                                      const CrossedCoproduct& target);
ConvElement crossed_iso_from_witness(const EquivWitness& w, const Coalgebra& c,
                                     const HopfAlgebra& h);

}  // namespace cotwist
