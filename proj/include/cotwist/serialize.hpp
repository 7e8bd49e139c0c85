#pragma once

#include "cotwist/cocycles.hpp"
#include "cotwist/equivalence.hpp"

namespace cotwist {

/// In-memory form of a structure-constant document: a field, named spaces,
/// and named role-tagged maps with explicit dense matrices. The JSON format
/// round-trips bit-exactly; see docs/fileformats.md.
struct NamedMap {
  std::string name;
  std::string role;  // delta/eps/mult/unit/antipode/action/coaction/twisting/
                     // cocycle/witness, or "" for auxiliary maps
  std::vector<std::string> domain;    // space names; empty list or "k" = ground field
  std::vector<std::string> codomain;
  LinMap map;
};

struct Bundle {
  FieldSpec field;
  std::vector<Space> spaces;
  std::vector<NamedMap> maps;
  std::vector<std::string> provenance;

  const Space& space(const std::string& name) const;       // throws MalformedDoc
  bool has_map(const std::string& name) const;
  const LinMap& map(const std::string& name) const;        // throws MalformedDoc
  Bundle& add_space(const Space& s);
  Bundle& add_map(std::string name, std::string role, std::vector<std::string> dom,
                  std::vector<std::string> cod, LinMap m);
};

Bundle bundle_from_json(const std::string& text);  // throws MalformedDoc
std::string bundle_to_json(const Bundle& b);

// -- emitters ---------------------------------------------------------------

Bundle bundle_from_hopf(const HopfAlgebra& h, const std::string& provenance);
Bundle bundle_from_modcoalg(const ModuleCoalgebra& mc, const std::string& provenance);
Bundle bundle_from_right_twist(const RightTwist& t, const std::string& provenance);
Bundle bundle_from_left_twist(const LeftTwist& l, const std::string& provenance);
Bundle bundle_from_harrison(const HarrisonCocycle& hc, const std::string& provenance);
Bundle bundle_from_trivial_harrison(const TrivialHarrison& th, const std::string& provenance);
Bundle bundle_from_twisted_cocycle(const TwistedCocycle& tc, const std::string& provenance);
Bundle bundle_from_witness(const EquivWitness& w, const std::string& provenance);
Bundle bundle_from_conv(const ConvElement& u, const HopfAlgebra& h,
                        const std::string& provenance);

// -- typed assembly ----------------------------------------------------------

HopfAlgebra hopf_from_bundle(const Bundle& b);
Coalgebra coalgebra_from_bundle(const Bundle& b);          // the C.* maps
ModuleCoalgebra modcoalg_from_bundle(const Bundle& b);
RightTwist right_twist_from_bundle(const Bundle& b);       // map "tau" (+ "tau_inv")
LeftTwist left_twist_from_bundle(const Bundle& b);         // map "lambda" (+ inverse)
WeakCoaction weak_coaction_from_bundle(const Bundle& b);   // map "rho"
HarrisonCocycle harrison_from_bundle(const Bundle& b);     // "rho" + "alpha"
TrivialHarrison trivial_harrison_from_bundle(const Bundle& b);
TwistedCocycle twisted_cocycle_from_bundle(const Bundle& b);
EquivWitness witness_from_bundle(const Bundle& b);         // "tau", "lambda_tw", "v"
ConvElement conv_from_bundle(const Bundle& b, const std::string& name);

}  // namespace cotwist
