#pragma once

#include "cotwist/hopf.hpp"

namespace cotwist {

/// A right H-module coalgebra: Delta and eps are maps of H-modules.
struct ModuleCoalgebra {
  Coalgebra c;
  HopfAlgebra h;
  LinMap action;  // C (x) H -> C

  const Space& space() const { return c.space; }
};

ModuleCoalgebra make_module_coalgebra(Coalgebra c, HopfAlgebra h, LinMap action);
bool same_module_coalgebra(const ModuleCoalgebra& x, const ModuleCoalgebra& y);

CheckReport check_module_coalgebra(const ModuleCoalgebra& mc);

/// Object of M_H^C: right H-module, right C-comodule, coaction H-linear.
struct RelHopfModule {
  Space space;
  LinMap action;    // M (x) H -> M
  LinMap coaction;  // M -> M (x) C
};

CheckReport check_rel_hopf_module(const ModuleCoalgebra& mc, const RelHopfModule& m);

/// Mirror notion with a left C-coaction (used by left-hand twistings).
struct LeftRelHopfModule {
  Space space;
  LinMap action;    // M (x) H -> M
  LinMap coaction;  // M -> C (x) M
};

CheckReport check_left_rel_hopf_module(const ModuleCoalgebra& mc, const LeftRelHopfModule& m);

/// B = C / CH+ with its induced coalgebra structure. incl is the section
/// spanned by the non-pivot coordinates of the deterministic RREF of the
/// spanning set {e_i . f_j - eps(f_j) e_i}; pi ∘ incl = id_B.
struct QuotientBase {
  Coalgebra b;
  LinMap pi;    // C -> B, surjective coalgebra map
  LinMap incl;  // B -> C, section of pi
};

QuotientBase quotient_base(const ModuleCoalgebra& mc);  // throws CoidealFailure

/// W = C box_B C as a subspace of C (x) C, with the canonical RREF kernel
/// basis; proj reads the free coordinates, so proj ∘ incl = id_W.
struct CotensorSquare {
  Space w;
  LinMap incl;  // W -> C (x) C
  LinMap proj;  // C (x) C -> W
};

CotensorSquare cotensor_square(const ModuleCoalgebra& mc, const QuotientBase& q);

}  // namespace cotwist
