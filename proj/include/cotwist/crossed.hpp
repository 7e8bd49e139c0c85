#pragma once

#include "cotwist/twisting.hpp"

namespace cotwist {

/// A weak coaction rho: C -> H (x) C (counital and Delta-compatible, no
/// coassociativity required).
struct WeakCoaction {
  Coalgebra c;
  HopfAlgebra h;
  LinMap rho;
};

WeakCoaction make_weak_coaction(Coalgebra c, HopfAlgebra h, LinMap rho);
WeakCoaction trivial_coaction(const Coalgebra& c, const HopfAlgebra& h);
CheckReport check_weak_coaction(const WeakCoaction& w);

/// alpha: C -> H (x) H on top of a weak coaction, subject to the counit,
/// cocycle and twisted-comodule conditions.
struct HarrisonCocycle {
  WeakCoaction coaction;
  LinMap alpha;
};

HarrisonCocycle make_harrison(WeakCoaction w, LinMap alpha);
CheckReport check_harrison(const HarrisonCocycle& hc);

/// C (x) H as a right H-module coalgebra: tensor-product coalgebra, action
/// induced by multiplication on the right tensorand.
ModuleCoalgebra tensor_module_coalgebra(const Coalgebra& c, const HopfAlgebra& h);

/// The crossed coproduct C |x_alpha H: underlying space C (x) H with
/// Delta_alpha, eps_alpha, and the id (x) m action.
struct CrossedCoproduct {
  ModuleCoalgebra mc;
  WeakCoaction coaction;
  LinMap alpha;
};

/// Requires check_harrison to pass (NotACocycle otherwise; force bypasses).
/// Coassociativity of the result is asserted independently.
CrossedCoproduct build_crossed(const HarrisonCocycle& hc, bool force = false);

LinMap delta_alpha(const HarrisonCocycle& hc);

/// Lemma 1.4 isomorphism phi(c (x)' h) = c_1 (x) u(c_2) h between crossed
/// coproducts whose data are related through u by the intertwining equations.
/// u must be convolution invertible (NotInvertible) and the two data sets must
/// satisfy those equations (WitnessInvalid). The result is verified to be a
/// left C-colinear, right H-linear coalgebra isomorphism.
LinMap crossed_iso_from_u(const ConvElement& u, const CrossedCoproduct& source,
                          const CrossedCoproduct& target);

/// Converse extraction: u(c) = (eps (x) id) phi(c (x) 1), re-verified through
/// crossed_iso_from_u.
ConvElement crossed_iso_witness(const LinMap& phi, const CrossedCoproduct& source,
                                const CrossedCoproduct& target);

/// The (rho', alpha') obtained from target's data through u by the Lemma 1.4
/// intertwining equations; the returned cocycle is verified.
HarrisonCocycle transport_crossed_data(const CrossedCoproduct& target,
                                       const ConvElement& u);

/// Report-producing variant of the Lemma 1.4 precondition checks
/// (convolution invertibility of u plus the two intertwining equations).
CheckReport check_crossed_iso_data(const ConvElement& u, const CrossedCoproduct& source,
                                   const CrossedCoproduct& target);

/// Morphism checks for a candidate map between two crossed coproducts
/// (coalgebra map, left C-colinear, right H-linear, bijective).
CheckReport check_crossed_morphism(const LinMap& phi, const CrossedCoproduct& source,
                                   const CrossedCoproduct& target);

/// The twisting of C (x) H corresponding to (rho, alpha).
RightTwist twisting_from_crossed(const HarrisonCocycle& hc);

/// Inverse direction: reads the weak coaction and cocycle off a twisting of
/// C (x) H; outputs pass their checkers and reproduce t.
HarrisonCocycle crossed_from_twisting(const RightTwist& t, const Coalgebra& c,
                                      const HopfAlgebra& h);

}  // namespace cotwist
