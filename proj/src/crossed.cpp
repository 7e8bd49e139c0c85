#include "cotwist/crossed.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

bool same_coalg(const Coalgebra& x, const Coalgebra& y) {
  return x.space.same(y.space) && x.delta == y.delta && x.counit == y.counit;
}

bool same_hopf(const HopfAlgebra& x, const HopfAlgebra& y) {
  return x.space.same(y.space) && x.mult == y.mult && x.unit == y.unit &&
         x.delta == y.delta && x.counit == y.counit && x.antipode == y.antipode;
}

}  // namespace

WeakCoaction make_weak_coaction(Coalgebra c, HopfAlgebra h, LinMap rho) {
  if (!rho.domain().same(c.space) ||
      !rho.codomain().same(tensor_space(h.space, c.space)))
    throw ShapeMismatch("weak coaction must map C -> H (x) C");
  return WeakCoaction{std::move(c), std::move(h), std::move(rho)};
}

WeakCoaction trivial_coaction(const Coalgebra& c, const HopfAlgebra& h) {
  return make_weak_coaction(c, h, kronecker(h.unit, LinMap::identity(c.space)));
}

CheckReport check_weak_coaction(const WeakCoaction& w) {
  CheckReport rep;
  const Space& C = w.c.space;
  const Space& H = w.h.space;
  rep.add_equal("eq14-delta-compat",
                Pipe(C).then(w.rho, {H, C}).at(1, w.c.delta, {C, C}).done(),
                Pipe(C)
                    .then(w.c.delta, {C, C})
                    .at(0, w.rho, {H, C})
                    .at(2, w.rho, {H, C})
                    .perm({0, 2, 1, 3})
                    .fuse(0, 2, w.h.mult, {H})
                    .done());
  rep.add_equal("eq15-counit", Pipe(C).then(w.rho, {H, C}).at(1, w.c.counit).done(),
                compose(w.h.unit, w.c.counit));
  rep.add_equal("eq16-unit", Pipe(C).then(w.rho, {H, C}).at(0, w.h.counit).done(),
                LinMap::identity(C));
  return rep;
}

HarrisonCocycle make_harrison(WeakCoaction w, LinMap alpha) {
  if (!alpha.domain().same(w.c.space) ||
      !alpha.codomain().same(tensor_space(w.h.space, w.h.space)))
    throw ShapeMismatch("cocycle must map C -> H (x) H");
  return HarrisonCocycle{std::move(w), std::move(alpha)};
}

CheckReport check_harrison(const HarrisonCocycle& hc) {
  CheckReport rep;
  const Space& C = hc.coaction.c.space;
  const Space& H = hc.coaction.h.space;
  const Coalgebra& c = hc.coaction.c;
  const HopfAlgebra& h = hc.coaction.h;
  const LinMap& rho = hc.coaction.rho;
  const LinMap& alpha = hc.alpha;
  LinMap u_eps = compose(h.unit, c.counit);

  {
    auto w1 = first_difference(Pipe(C).then(alpha, {H, H}).at(0, h.counit).done(), u_eps);
    auto w2 = first_difference(Pipe(C).then(alpha, {H, H}).at(1, h.counit).done(), u_eps);
    if (w1)
      rep.add_fail("eq-I-counit", std::move(w1));
    else if (w2)
      rep.add_fail("eq-I-counit", std::move(w2));
    else
      rep.add_pass("eq-I-counit");
  }

  rep.add_equal("eq-II-cocycle",
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, rho, {H, C})
                    .at(1, alpha, {H, H})
                    .at(3, alpha, {H, H})
                    .at(4, h.delta, {H, H})
                    .perm({0, 3, 1, 4, 2, 5})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .fuse(2, 2, h.mult, {H})
                    .done(),
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, alpha, {H, H})
                    .at(2, alpha, {H, H})
                    .at(2, h.delta, {H, H})
                    .perm({0, 2, 1, 3, 4})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .done());

  rep.add_equal("eq-III-twisted-comodule",
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, rho, {H, C})
                    .at(1, rho, {H, C})
                    .at(3, alpha, {H, H})
                    .perm({0, 3, 1, 4, 2})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .done(),
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, alpha, {H, H})
                    .at(2, rho, {H, C})
                    .at(2, h.delta, {H, H})
                    .perm({0, 2, 1, 3, 4})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .done());
  return rep;
}

ModuleCoalgebra tensor_module_coalgebra(const Coalgebra& c, const HopfAlgebra& h) {
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);
  LinMap delta = Pipe(ch, {C, H})
                     .at(0, c.delta, {C, C})
                     .at(2, h.delta, {H, H})
                     .perm({0, 2, 1, 3})
                     .done();
  LinMap eps = kronecker(c.counit, h.counit);
  LinMap act = kronecker(LinMap::identity(C), h.mult);
  return make_module_coalgebra(Coalgebra{ch, std::move(delta), std::move(eps)}, h,
                               std::move(act));
}

LinMap delta_alpha(const HarrisonCocycle& hc) {
  const Coalgebra& c = hc.coaction.c;
  const HopfAlgebra& h = hc.coaction.h;
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);
  return Pipe(ch, {C, H})
      .at(0, iterated_comult(c, 2), {C, C, C})
      .at(1, hc.coaction.rho, {H, C})
      .at(3, hc.alpha, {H, H})
      .at(5, h.delta, {H, H})
      .perm({0, 1, 3, 5, 2, 4, 6})
      .fuse(1, 3, iterated_mult(h.algebra(), 2), {H})
      .fuse(3, 2, h.mult, {H})
      .done();
}

CrossedCoproduct build_crossed(const HarrisonCocycle& hc, bool force) {
  if (!force && !check_harrison(hc).ok())
    throw NotACocycle("Harrison cocycle conditions fail");
  const Coalgebra& c = hc.coaction.c;
  const HopfAlgebra& h = hc.coaction.h;
  Space ch = tensor_space(c.space, h.space);
  Coalgebra crossed{ch, delta_alpha(hc), kronecker(c.counit, h.counit)};
  ModuleCoalgebra mc = make_module_coalgebra(
      crossed, h, kronecker(LinMap::identity(c.space), h.mult));
  if (!force) {
    if (!check_coalgebra(mc.c).ok())
      throw InvariantViolation("crossed coproduct is not coassociative/counital");
    if (!check_module_coalgebra(mc).ok())
      throw InvariantViolation("crossed coproduct is not an H-module coalgebra");
  }
  return CrossedCoproduct{std::move(mc), hc.coaction, hc.alpha};
}

namespace {

// rho' and alpha' induced from (rho, alpha) through u.
LinMap rho_through_u(const WeakCoaction& w, const LinMap& alpha, const ConvElement& u,
                     const ConvElement& u_inv) {
  (void)alpha;
  const Space& C = w.c.space;
  const Space& H = w.h.space;
  return Pipe(C)
      .then(iterated_comult(w.c, 2), {C, C, C})
      .at(0, u_inv.map)
      .at(1, w.rho, {H, C})
      .at(3, u.map)
      .perm({0, 1, 3, 2})
      .fuse(0, 3, iterated_mult(w.h.algebra(), 2), {H})
      .done();
}

LinMap alpha_through_u(const WeakCoaction& w, const LinMap& alpha, const ConvElement& u,
                       const ConvElement& u_inv) {
  const Space& C = w.c.space;
  const Space& H = w.h.space;
  return Pipe(C)
      .then(iterated_comult(w.c, 3), {C, C, C, C})
      .at(0, u_inv.map)
      .at(1, w.rho, {H, C})
      .at(2, u_inv.map)
      .at(3, alpha, {H, H})
      .at(5, u.map)
      .at(5, w.h.delta, {H, H})
      .perm({0, 1, 3, 5, 2, 4, 6})
      .fuse(0, 4, iterated_mult(w.h.algebra(), 3), {H})
      .fuse(1, 3, iterated_mult(w.h.algebra(), 2), {H})
      .done();
}

}  // namespace

CheckReport check_crossed_morphism(const LinMap& phi, const CrossedCoproduct& source,
                                   const CrossedCoproduct& target) {
  CheckReport rep;
  const Coalgebra& c = source.coaction.c;
  const HopfAlgebra& h = source.coaction.h;
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);
  Space chh = tensor_all({C, H, H}, C.field);

  rep.add_equal("coalgebra-map-delta",
                compose(target.mc.c.delta, phi),
                compose(kronecker(phi, phi), source.mc.c.delta));
  rep.add_equal("coalgebra-map-eps", compose(target.mc.c.counit, phi),
                source.mc.c.counit);
  rep.add_equal("left-C-colinear",
                Pipe(ch, {C, H}).then(phi, {C, H}).at(0, c.delta, {C, C}).done(),
                Pipe(ch, {C, H}).at(0, c.delta, {C, C}).fuse(1, 2, phi, {C, H}).done());
  rep.add_equal("right-H-linear",
                Pipe(chh, {C, H, H}).fuse(0, 2, phi, {C, H}).fuse(1, 2, h.mult, {H}).done(),
                Pipe(chh, {C, H, H}).fuse(1, 2, h.mult, {H}).fuse(0, 2, phi, {C, H}).done());
  if (rank(phi) == phi.cols())
    rep.add_pass("bijective");
  else
    rep.add_fail("bijective");
  return rep;
}

HarrisonCocycle transport_crossed_data(const CrossedCoproduct& target,
                                       const ConvElement& u) {
  const Coalgebra& c = target.coaction.c;
  const HopfAlgebra& h = target.coaction.h;
  if (!same_coalg(u.c, c) || !u.a.space.same(h.space) || !(u.a.mult == h.mult))
    throw SpaceMismatch("u must be an element of Hom(C, H)");
  auto u_inv = convolution_inverse(u);
  if (!u_inv) throw NotInvertible("u is not convolution invertible");
  HarrisonCocycle out = make_harrison(
      make_weak_coaction(c, h, rho_through_u(target.coaction, target.alpha, u, *u_inv)),
      alpha_through_u(target.coaction, target.alpha, u, *u_inv));
  if (!check_weak_coaction(out.coaction).ok() || !check_harrison(out).ok())
    throw InvariantViolation("transported crossed data fail their checkers");
  return out;
}

CheckReport check_crossed_iso_data(const ConvElement& u, const CrossedCoproduct& source,
                                   const CrossedCoproduct& target) {
  CheckReport rep;
  auto u_inv = convolution_inverse(u);
  if (u_inv)
    rep.add_pass("u-convolution-invertible");
  else {
    rep.add_fail("u-convolution-invertible");
    return rep;
  }
  rep.add_equal("eq18-coaction-intertwined", source.coaction.rho,
                rho_through_u(target.coaction, target.alpha, u, *u_inv));
  rep.add_equal("eq19-cocycle-intertwined", source.alpha,
                alpha_through_u(target.coaction, target.alpha, u, *u_inv));
  return rep;
}

LinMap crossed_iso_from_u(const ConvElement& u, const CrossedCoproduct& source,
                          const CrossedCoproduct& target) {
  const Coalgebra& c = target.coaction.c;
  const HopfAlgebra& h = target.coaction.h;
  if (!same_coalg(c, source.coaction.c) || !same_hopf(h, source.coaction.h))
    throw SpaceMismatch("crossed coproducts live over different (C, H) data");
  if (!same_coalg(u.c, c) || !u.a.space.same(h.space) || !(u.a.mult == h.mult))
    throw SpaceMismatch("u must be an element of Hom(C, H)");

  auto u_inv = convolution_inverse(u);
  if (!u_inv) throw NotInvertible("u is not convolution invertible");

  if (!(source.coaction.rho == rho_through_u(target.coaction, target.alpha, u, *u_inv)))
    throw WitnessInvalid("u does not intertwine the weak coactions (Eq. 18)");
  if (!(source.alpha == alpha_through_u(target.coaction, target.alpha, u, *u_inv)))
    throw WitnessInvalid("u does not intertwine the cocycles (Eq. 19)");

  const Space& C = c.space;
  const Space& H = h.space;
  LinMap phi = Pipe(tensor_space(C, H), {C, H})
                   .at(0, c.delta, {C, C})
                   .at(1, u.map)
                   .fuse(1, 2, h.mult, {H})
                   .done();
  CheckReport rep = check_crossed_morphism(phi, source, target);
  if (!rep.ok())
    throw InvariantViolation("phi from a valid u fails the Lemma 1.4 morphism checks:\n" +
                             rep.text());
  return phi;
}

ConvElement crossed_iso_witness(const LinMap& phi, const CrossedCoproduct& source,
                                const CrossedCoproduct& target) {
  CheckReport rep = check_crossed_morphism(phi, source, target);
  if (!rep.ok())
    throw WitnessInvalid(
        "phi is not a left C-colinear right H-linear coalgebra isomorphism:\n" +
        rep.text());
  const Coalgebra& c = target.coaction.c;
  const HopfAlgebra& h = target.coaction.h;
  LinMap u_map = Pipe(c.space)
                     .then(kronecker(LinMap::identity(c.space), h.unit), {c.space, h.space})
                     .fuse(0, 2, phi, {c.space, h.space})
                     .at(0, c.counit)
                     .done();
  ConvElement u = make_conv(c, h.algebra(), std::move(u_map));
  LinMap rebuilt = crossed_iso_from_u(u, source, target);
  if (!(rebuilt == phi))
    throw InvariantViolation("extracted u does not rebuild phi");
  return u;
}

RightTwist twisting_from_crossed(const HarrisonCocycle& hc) {
  if (!check_harrison(hc).ok())
    throw NotACocycle("Harrison cocycle conditions fail");
  const Coalgebra& c = hc.coaction.c;
  const HopfAlgebra& h = hc.coaction.h;
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);
  LinMap tau = Pipe(ch, {C, H})
                   .at(0, c.delta, {C, C})
                   .at(2, iterated_comult(h.coalgebra(), 2), {H, H, H})
                   .at(0, hc.coaction.rho, {H, C})
                   .at(2, hc.alpha, {H, H})
                   .perm({4, 0, 2, 5, 1, 3, 6})
                   .at(0, h.antipode)
                   .fuse(0, 4, iterated_mult(h.algebra(), 3), {H})
                   .fuse(2, 2, h.mult, {H})
                   .done();
  RightTwist t = make_right_twist(tensor_module_coalgebra(c, h), std::move(tau));
  if (!is_twisting(t))
    throw InvariantViolation("twisting read off a Harrison cocycle fails the "
                             "twisting equations");
  return t;
}

HarrisonCocycle crossed_from_twisting(const RightTwist& t, const Coalgebra& c,
                                      const HopfAlgebra& h) {
  if (!same_module_coalgebra(t.mc, tensor_module_coalgebra(c, h)))
    throw SpaceMismatch("twisting does not live on C (x) H with the id (x) m action");
  if (!is_twisting(t)) throw NotATwisting("candidate fails the twisting equations");
  const Space& C = c.space;
  const Space& H = h.space;
  LinMap at_one = compose(t.map, kronecker(LinMap::identity(C), h.unit));  // C -> H(x)C(x)H
  LinMap rho = Pipe(C)
                   .then(at_one, {H, C, H})
                   .at(2, h.counit)
                   .done();
  LinMap alpha = Pipe(C)
                     .then(at_one, {H, C, H})
                     .at(1, c.counit)
                     .done();
  HarrisonCocycle hc =
      make_harrison(make_weak_coaction(c, h, std::move(rho)), std::move(alpha));
  if (!check_weak_coaction(hc.coaction).ok())
    throw InvariantViolation("coaction read off a twisting fails Def. 1.3");
  if (!check_harrison(hc).ok())
    throw InvariantViolation("cocycle read off a twisting fails the Harrison conditions");
  if (!(twisting_from_crossed(hc).map == t.map))
    throw InvariantViolation("crossed data do not reproduce the twisting");
  return hc;
}

}  // namespace cotwist
