#include "cotwist/catalog.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

HopfAlgebra group_algebra_cyclic(int n, FieldSpec field) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i)
    basis.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  Space H = make_space("kC" + std::to_string(n), std::move(basis), field);

  LinMap mult(H, tensor_space(H, H));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult.set((i + j) % n, i * n + j, Scalar(1));
  LinMap unit(H, unit_space(field));
  unit.set(0, 0, Scalar(1));
  LinMap delta(tensor_space(H, H), H);
  for (int i = 0; i < n; ++i) delta.set(i * n + i, i, Scalar(1));
  LinMap counit(unit_space(field), H);
  for (int i = 0; i < n; ++i) counit.set(0, i, Scalar(1));
  LinMap antipode(H, H);
  for (int i = 0; i < n; ++i) antipode.set((n - i) % n, i, Scalar(1));
  return make_hopf(H, mult, unit, delta, counit, antipode);
}

HopfAlgebra dual_group_c2(FieldSpec field) {
  Space H = make_space("kC2*", {"e0", "e1"}, field);
  LinMap mult(H, tensor_space(H, H));
  mult.set(0, 0, Scalar(1));  // e0 e0 = e0
  mult.set(1, 3, Scalar(1));  // e1 e1 = e1
  LinMap unit(H, unit_space(field));
  unit.set(0, 0, Scalar(1));
  unit.set(1, 0, Scalar(1));  // 1 = e0 + e1
  LinMap delta(tensor_space(H, H), H);
  delta.set(0, 0, Scalar(1));  // Delta e0 = e0 (x) e0 + e1 (x) e1
  delta.set(3, 0, Scalar(1));
  delta.set(1, 1, Scalar(1));  // Delta e1 = e0 (x) e1 + e1 (x) e0
  delta.set(2, 1, Scalar(1));
  LinMap counit(unit_space(field), H);
  counit.set(0, 0, Scalar(1));
  LinMap antipode = LinMap::identity(H);
  return make_hopf(H, mult, unit, delta, counit, antipode);
}

HopfAlgebra sweedler_h4(FieldSpec field) {
  if (field.characteristic == 2)
    throw Error("sweedler:H4 degenerates in characteristic 2");
  Space H = make_space("H4", {"1", "g", "x", "gx"}, field);
  const Scalar one(1), neg(-1);

  LinMap mult(H, tensor_space(H, H));
  auto set_prod = [&](int i, int j, int k, const Scalar& coeff) {
    mult.set(k, i * 4 + j, coeff);
  };
  for (int j = 0; j < 4; ++j) set_prod(0, j, j, one);  // 1 y = y
  set_prod(1, 0, 1, one);                              // g 1 = g
  set_prod(1, 1, 0, one);                              // g g = 1
  set_prod(1, 2, 3, one);                              // g x = gx
  set_prod(1, 3, 2, one);                              // g gx = x
  set_prod(2, 0, 2, one);                              // x 1 = x
  set_prod(2, 1, 3, neg);                              // x g = -gx
  set_prod(3, 0, 3, one);                              // gx 1 = gx
  set_prod(3, 1, 2, neg);                              // gx g = -x
  // x x = x gx = gx x = gx gx = 0

  LinMap unit(H, unit_space(field));
  unit.set(0, 0, one);

  LinMap delta(tensor_space(H, H), H);
  delta.set(0 * 4 + 0, 0, one);  // 1 (x) 1
  delta.set(1 * 4 + 1, 1, one);  // g (x) g
  delta.set(2 * 4 + 0, 2, one);  // Delta x = x (x) 1 + g (x) x
  delta.set(1 * 4 + 2, 2, one);
  delta.set(3 * 4 + 1, 3, one);  // Delta gx = gx (x) g + 1 (x) gx
  delta.set(0 * 4 + 3, 3, one);

  LinMap counit(unit_space(field), H);
  counit.set(0, 0, one);
  counit.set(0, 1, one);

  LinMap antipode(H, H);
  antipode.set(0, 0, one);
  antipode.set(1, 1, one);
  antipode.set(3, 2, neg);  // S(x) = -gx
  antipode.set(2, 3, one);  // S(gx) = x
  return make_hopf(H, mult, unit, delta, counit, antipode);
}

HopfAlgebra trivial_hopf(FieldSpec field) {
  Space k = unit_space(field);
  LinMap id = LinMap::identity(k);
  return make_hopf(k, id, id, id, id, id);
}

ModuleCoalgebra regular_module(const HopfAlgebra& h) {
  return make_module_coalgebra(h.coalgebra(), h, h.mult);
}

ModuleCoalgebra trivial_module(const HopfAlgebra& h) {
  Space k = unit_space(h.space.field);
  Coalgebra c{k, LinMap::identity(k), LinMap::identity(k)};
  return make_module_coalgebra(c, h, h.counit);
}

namespace {

LinMap trivial_alpha(const Coalgebra& c, const HopfAlgebra& h) {
  return compose(kronecker(h.unit, h.unit), c.counit);
}

}  // namespace

HarrisonCocycle harrison_c2_scaled(FieldSpec field, const Scalar& t) {
  HopfAlgebra h = dual_group_c2(field);
  ModuleCoalgebra c = trivial_module(h);
  LinMap alpha(tensor_space(h.space, h.space), c.c.space);
  alpha.set(0, 0, Scalar(1));  // e0 (x) e0
  alpha.set(1, 0, Scalar(1));  // e0 (x) e1
  alpha.set(2, 0, Scalar(1));  // e1 (x) e0
  alpha.set(3, 0, t);          // e1 (x) e1
  return make_harrison(trivial_coaction(c.c, h), std::move(alpha));
}

HarrisonCocycle harrison_c2_sign(FieldSpec field) {
  return harrison_c2_scaled(field, Scalar(-1));
}

HarrisonCocycle graded_c2(FieldSpec field) {
  HopfAlgebra h = group_algebra_cyclic(2, field);
  Coalgebra c = dual_group_c2(field).coalgebra();
  c.space.name = "C2-graded";
  // Relabel so the coalgebra C is distinguishable from H in documents.
  LinMap rho(tensor_space(h.space, c.space), c.space);
  rho.set(0 * 2 + 0, 0, Scalar(1));  // rho(e0) = 1 (x) e0
  rho.set(1 * 2 + 1, 1, Scalar(1));  // rho(e1) = g (x) e1
  return make_harrison(make_weak_coaction(c, h, std::move(rho)), trivial_alpha(c, h));
}

namespace {

std::optional<HopfAlgebra> try_hopf_by_name(const std::string& name, FieldSpec field) {
  if (name == "group:C2") return group_algebra_cyclic(2, field);
  if (name == "group:C4") return group_algebra_cyclic(4, field);
  if (name == "dualgroup:C2") return dual_group_c2(field);
  if (name == "sweedler:H4") return sweedler_h4(field);
  return std::nullopt;
}

}  // namespace

Bundle builtin(const std::string& name, FieldSpec field) {
  std::string prov = "builtin: " + name + " over " + field.str();
  if (auto h = try_hopf_by_name(name, field)) return bundle_from_hopf(*h, prov);

  auto strip = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (auto rest = strip("regular:")) {
    if (auto h = try_hopf_by_name(*rest, field))
      return bundle_from_modcoalg(regular_module(*h), prov);
    throw UnknownName("unknown Hopf algebra \"" + *rest + "\"");
  }
  if (auto rest = strip("trivial:")) {
    if (auto h = try_hopf_by_name(*rest, field))
      return bundle_from_modcoalg(trivial_module(*h), prov);
    throw UnknownName("unknown Hopf algebra \"" + *rest + "\"");
  }
  if (name == "harrison:C2-sign") {
    HarrisonCocycle hc = harrison_c2_sign(field);
    Bundle b = bundle_from_harrison(hc, prov);
    // Also carry the (trivial) module-coalgebra action on C = k so the same
    // document feeds the Z2_Harr checkers and the lift.
    b.add_map("C.act", "action", {"C", "H"}, {"C"},
              trivial_module(hc.coaction.h).action);
    return b;
  }
  throw UnknownName("unknown builtin \"" + name + "\"");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "group:C2",          "group:C4",          "dualgroup:C2",
      "sweedler:H4",       "regular:group:C2",  "regular:group:C4",
      "regular:dualgroup:C2", "regular:sweedler:H4", "trivial:group:C2",
      "trivial:group:C4",  "trivial:dualgroup:C2", "trivial:sweedler:H4",
      "harrison:C2-sign"};
  return names;
}

}  // namespace cotwist
