#include "cotwist/twisting.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

void require_context(const ModuleCoalgebra& a, const ModuleCoalgebra& b, const char* what) {
  if (!same_module_coalgebra(a, b))
    throw SpaceMismatch(std::string(what) + ": different module-coalgebra contexts");
}

bool all_pass(Flag a, Flag b, Flag c) {
  return a == Flag::Pass && b == Flag::Pass && c == Flag::Pass;
}

void write_once(Flag& f, bool pass) {
  if (f == Flag::Unknown) f = pass ? Flag::Pass : Flag::Fail;
}

}  // namespace

RightTwist make_right_twist(ModuleCoalgebra mc, LinMap tau) {
  if (!tau.domain().same(mc.c.space) ||
      !tau.codomain().same(tensor_space(mc.h.space, mc.c.space)))
    throw ShapeMismatch("right twisting candidate must map C -> H (x) C");
  return RightTwist{std::move(mc), std::move(tau)};
}

LeftTwist make_left_twist(ModuleCoalgebra mc, LinMap lambda) {
  if (!lambda.domain().same(mc.c.space) ||
      !lambda.codomain().same(tensor_space(mc.c.space, mc.h.space)))
    throw ShapeMismatch("left twisting candidate must map C -> C (x) H");
  return LeftTwist{std::move(mc), std::move(lambda)};
}

RightTwist sigma_twist(const ModuleCoalgebra& mc) {
  RightTwist t = make_right_twist(mc, kronecker(mc.h.unit, LinMap::identity(mc.c.space)));
  t.normality = t.eq6 = t.eq7 = Flag::Pass;
  t.inverse = t.map;
  return t;
}

LeftTwist sigma_prime(const ModuleCoalgebra& mc) {
  LeftTwist l = make_left_twist(mc, kronecker(LinMap::identity(mc.c.space), mc.h.unit));
  l.normality = l.eq8 = l.eq9 = Flag::Pass;
  l.inverse = l.map;
  return l;
}

RightTwist star_product(const RightTwist& t1, const RightTwist& t2) {
  require_context(t1.mc, t2.mc, "star_product");
  const Space& C = t1.mc.c.space;
  const Space& H = t1.mc.h.space;
  LinMap m = Pipe(C)
                 .then(t1.map, {H, C})
                 .at(1, t2.map, {H, C})
                 .fuse(0, 2, t1.mc.h.mult, {H})
                 .done();
  return make_right_twist(t1.mc, std::move(m));
}

LeftTwist times_product(const LeftTwist& l1, const LeftTwist& l2) {
  require_context(l1.mc, l2.mc, "times_product");
  const Space& C = l1.mc.c.space;
  const Space& H = l1.mc.h.space;
  LinMap t_ch = swap_map(C, H);
  LinMap t_hc = swap_map(H, C);
  LinMap a = compose(t_ch, l2.map);  // T ∘ lambda
  LinMap b = compose(t_ch, l1.map);  // T ∘ tau
  LinMap star = Pipe(C).then(a, {H, C}).at(1, b, {H, C}).fuse(0, 2, l1.mc.h.mult, {H}).done();
  return make_left_twist(l1.mc, compose(t_hc, star));
}

LinMap endo_of_right(const RightTwist& t) {
  const Space& C = t.mc.c.space;
  const Space& H = t.mc.h.space;
  return Pipe(tensor_space(H, C), {H, C})
      .at(1, t.map, {H, C})
      .fuse(0, 2, t.mc.h.mult, {H})
      .done();
}

LinMap endo_of_left(const LeftTwist& l) {
  const Space& C = l.mc.c.space;
  const Space& H = l.mc.h.space;
  return Pipe(tensor_space(C, H), {C, H})
      .at(0, l.map, {C, H})
      .perm({0, 2, 1})
      .fuse(1, 2, l.mc.h.mult, {H})
      .done();
}

LinMap delta_tau(const RightTwist& t) {
  const Space& C = t.mc.c.space;
  const Space& H = t.mc.h.space;
  return Pipe(C)
      .then(t.mc.c.delta, {C, C})
      .at(1, t.map, {H, C})
      .fuse(0, 2, t.mc.action, {C})
      .done();
}

LinMap delta_left(const LeftTwist& l) {
  const Space& C = l.mc.c.space;
  const Space& H = l.mc.h.space;
  return Pipe(C)
      .then(l.mc.c.delta, {C, C})
      .at(0, l.map, {C, H})
      .perm({0, 2, 1})
      .fuse(1, 2, l.mc.action, {C})
      .done();
}

CheckReport check_right_twisting(const RightTwist& t) {
  CheckReport rep;
  const ModuleCoalgebra& mc = t.mc;
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  Space ch = tensor_space(C, H);
  LinMap u_eps = compose(mc.h.unit, mc.c.counit);  // C -> H

  rep.add_equal("normality-counit",
                Pipe(C).then(t.map, {H, C}).at(1, mc.c.counit).done(), u_eps);
  rep.add_equal("normality-unit",
                Pipe(C).then(t.map, {H, C}).at(0, mc.h.counit).done(),
                LinMap::identity(C));

  LinMap eq6_lhs = Pipe(ch, {C, H})
                       .at(0, t.map, {H, C})
                       .at(2, mc.h.delta, {H, H})
                       .perm({0, 2, 1, 3})
                       .fuse(0, 2, mc.h.mult, {H})
                       .fuse(1, 2, mc.action, {C})
                       .done();
  LinMap eq6_rhs = Pipe(ch, {C, H})
                       .at(1, mc.h.delta, {H, H})
                       .perm({1, 0, 2})
                       .fuse(1, 2, mc.action, {C})
                       .at(1, t.map, {H, C})
                       .fuse(0, 2, mc.h.mult, {H})
                       .done();
  rep.add_equal("eq6", eq6_lhs, eq6_rhs);

  LinMap dt = delta_tau(t);
  rep.add_equal("eq7",
                Pipe(C).then(t.map, {H, C}).at(1, dt, {C, C}).done(),
                Pipe(C)
                    .then(mc.c.delta, {C, C})
                    .at(0, t.map, {H, C})
                    .at(2, t.map, {H, C})
                    .at(2, mc.h.delta, {H, H})
                    .perm({0, 2, 1, 3, 4})
                    .fuse(0, 2, mc.h.mult, {H})
                    .fuse(1, 2, mc.action, {C})
                    .done());

  LinMap eq10_lhs = Pipe(ch, {C, H})
                        .at(0, t.map, {H, C})
                        .at(2, iterated_comult(mc.h.coalgebra(), 2), {H, H, H})
                        .perm({2, 0, 3, 1, 4})
                        .at(0, mc.h.antipode)
                        .fuse(0, 3, iterated_mult(mc.h.algebra(), 2), {H})
                        .fuse(1, 2, mc.action, {C})
                        .done();
  LinMap eq10_rhs =
      Pipe(ch, {C, H}).fuse(0, 2, mc.action, {C}).then(t.map, {H, C}).done();
  rep.add_equal("eq10", eq10_lhs, eq10_rhs);

  if (rep.passed("eq6") != rep.passed("eq10"))
    throw InvariantViolation("Eq. 6 and Eq. 10 disagree as pass/fail outcomes");

  write_once(t.normality, rep.passed("normality-counit") && rep.passed("normality-unit"));
  write_once(t.eq6, rep.passed("eq6"));
  write_once(t.eq7, rep.passed("eq7"));
  return rep;
}

CheckReport check_left_twisting(const LeftTwist& l) {
  CheckReport rep;
  const ModuleCoalgebra& mc = l.mc;
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  Space ch = tensor_space(C, H);
  LinMap u_eps = compose(mc.h.unit, mc.c.counit);

  rep.add_equal("normality-unit", Pipe(C).then(l.map, {C, H}).at(1, mc.h.counit).done(),
                LinMap::identity(C));
  rep.add_equal("normality-counit",
                Pipe(C).then(l.map, {C, H}).at(0, mc.c.counit).done(), u_eps);

  LinMap eq8_lhs = Pipe(ch, {C, H})
                       .at(0, l.map, {C, H})
                       .at(2, mc.h.delta, {H, H})
                       .perm({0, 2, 1, 3})
                       .fuse(0, 2, mc.action, {C})
                       .fuse(1, 2, mc.h.mult, {H})
                       .done();
  LinMap eq8_rhs = Pipe(ch, {C, H})
                       .at(1, mc.h.delta, {H, H})
                       .fuse(0, 2, mc.action, {C})
                       .at(0, l.map, {C, H})
                       .perm({0, 2, 1})
                       .fuse(1, 2, mc.h.mult, {H})
                       .done();
  rep.add_equal("eq8", eq8_lhs, eq8_rhs);

  LinMap dl = delta_left(l);
  rep.add_equal("eq9",
                Pipe(C).then(l.map, {C, H}).at(0, dl, {C, C}).done(),
                Pipe(C)
                    .then(mc.c.delta, {C, C})
                    .at(0, l.map, {C, H})
                    .at(2, l.map, {C, H})
                    .at(1, mc.h.delta, {H, H})
                    .perm({0, 3, 1, 4, 2})
                    .fuse(1, 2, mc.action, {C})
                    .fuse(2, 2, mc.h.mult, {H})
                    .done());

  LinMap eq11_lhs = Pipe(ch, {C, H})
                        .at(0, l.map, {C, H})
                        .at(2, iterated_comult(mc.h.coalgebra(), 2), {H, H, H})
                        .perm({0, 2, 4, 1, 3})
                        .fuse(0, 2, mc.action, {C})
                        .at(1, mc.h.antipode_inv)
                        .fuse(1, 3, iterated_mult(mc.h.algebra(), 2), {H})
                        .done();
  LinMap eq11_rhs =
      Pipe(ch, {C, H}).fuse(0, 2, mc.action, {C}).then(l.map, {C, H}).done();
  rep.add_equal("eq11", eq11_lhs, eq11_rhs);

  if (rep.passed("eq8") != rep.passed("eq11"))
    throw InvariantViolation("Eq. 8 and Eq. 11 disagree as pass/fail outcomes");

  write_once(l.normality, rep.passed("normality-unit") && rep.passed("normality-counit"));
  write_once(l.eq8, rep.passed("eq8"));
  write_once(l.eq9, rep.passed("eq9"));
  return rep;
}

bool is_twisting(const RightTwist& t) {
  if (t.normality == Flag::Unknown || t.eq6 == Flag::Unknown || t.eq7 == Flag::Unknown)
    check_right_twisting(t);
  return all_pass(t.normality, t.eq6, t.eq7);
}

bool is_twisting(const LeftTwist& l) {
  if (l.normality == Flag::Unknown || l.eq8 == Flag::Unknown || l.eq9 == Flag::Unknown)
    check_left_twisting(l);
  return all_pass(l.normality, l.eq8, l.eq9);
}

ModuleCoalgebra twist_coalgebra(const RightTwist& t, bool force) {
  if (!force && !is_twisting(t))
    throw NotATwisting("candidate fails the right-twisting equations");
  return ModuleCoalgebra{Coalgebra{t.mc.c.space, delta_tau(t), t.mc.c.counit}, t.mc.h,
                         t.mc.action};
}

ModuleCoalgebra twist_coalgebra_left(const LeftTwist& l, bool force) {
  if (!force && !is_twisting(l))
    throw NotATwisting("candidate fails the left-twisting equations");
  return ModuleCoalgebra{Coalgebra{l.mc.c.space, delta_left(l), l.mc.c.counit}, l.mc.h,
                         l.mc.action};
}

RelHopfModule twist_comodule(const RelHopfModule& m, const RightTwist& t, bool force) {
  if (!force && !is_twisting(t))
    throw NotATwisting("candidate fails the right-twisting equations");
  const Space& M = m.space;
  const Space& C = t.mc.c.space;
  const Space& H = t.mc.h.space;
  LinMap rho = Pipe(M)
                   .then(m.coaction, {M, C})
                   .at(1, t.map, {H, C})
                   .fuse(0, 2, m.action, {M})
                   .done();
  RelHopfModule out{M, m.action, std::move(rho)};
  if (!force) {
    CheckReport rep = check_rel_hopf_module(twist_coalgebra(t), out);
    if (!rep.ok())
      throw InvariantViolation("twisted comodule fails the M_H^C axioms over C^tau");
  }
  return out;
}

LeftRelHopfModule twist_comodule_left(const LeftRelHopfModule& m, const LeftTwist& l,
                                      bool force) {
  if (!force && !is_twisting(l))
    throw NotATwisting("candidate fails the left-twisting equations");
  const Space& M = m.space;
  const Space& C = l.mc.c.space;
  const Space& H = l.mc.h.space;
  LinMap rho = Pipe(M)
                   .then(m.coaction, {C, M})
                   .at(0, l.map, {C, H})
                   .perm({0, 2, 1})
                   .fuse(1, 2, m.action, {M})
                   .done();
  LeftRelHopfModule out{M, m.action, std::move(rho)};
  if (!force) {
    CheckReport rep = check_left_rel_hopf_module(twist_coalgebra_left(l), out);
    if (!rep.ok())
      throw InvariantViolation("twisted left comodule fails its axioms over the twist");
  }
  return out;
}

std::optional<RightTwist> invert_twisting(const RightTwist& t) {
  auto x = inverse(endo_of_right(t));
  if (!x) return std::nullopt;
  LinMap lam = compose(*x, kronecker(t.mc.h.unit, LinMap::identity(t.mc.c.space)));
  RightTwist inv = make_right_twist(t.mc, std::move(lam));
  inv.inverse = t.map;
  RightTwist sigma = sigma_twist(t.mc);
  if (!(star_product(t, inv).map == sigma.map) || !(star_product(inv, t).map == sigma.map))
    throw InvariantViolation("endomorphism inverse violates Eq. 12");
  return inv;
}

std::optional<LeftTwist> invert_twisting(const LeftTwist& l) {
  auto x = inverse(endo_of_left(l));
  if (!x) return std::nullopt;
  LinMap mu = compose(*x, kronecker(LinMap::identity(l.mc.c.space), l.mc.h.unit));
  LeftTwist inv = make_left_twist(l.mc, std::move(mu));
  inv.inverse = l.map;
  LeftTwist sp = sigma_prime(l.mc);
  if (!(times_product(l, inv).map == sp.map) || !(times_product(inv, l).map == sp.map))
    throw InvariantViolation("endomorphism inverse violates the x-product unit law");
  return inv;
}

RightTwist with_inverse(const RightTwist& t) {
  if (t.inverse) return t;
  auto inv = invert_twisting(t);
  if (!inv) throw NotInvertible("twisting has no *-inverse");
  RightTwist out = t;
  out.inverse = inv->map;
  return out;
}

LeftTwist with_inverse(const LeftTwist& l) {
  if (l.inverse) return l;
  auto inv = invert_twisting(l);
  if (!inv) throw NotInvertible("left twisting has no x-inverse");
  LeftTwist out = l;
  out.inverse = inv->map;
  return out;
}

namespace {

LinMap transpose_rtl_map(const ModuleCoalgebra& mc, const LinMap& tau, const LinMap& lam) {
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  return Pipe(C)
      .then(tau, {H, C})
      .at(1, lam, {H, C})
      .at(0, mc.h.antipode_inv)
      .at(0, mc.h.delta, {H, H})
      .at(2, mc.h.antipode_inv)
      .perm({3, 2, 0, 1})
      .fuse(1, 2, mc.h.mult, {H})
      .fuse(0, 2, mc.action, {C})
      .done();
}

LinMap transpose_rtl_inverse_map(const ModuleCoalgebra& mc, const LinMap& tau,
                                 const LinMap& lam) {
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  return Pipe(C)
      .then(tau, {H, C})
      .at(1, lam, {H, C})
      .at(0, mc.h.antipode_inv)
      .at(0, iterated_comult(mc.h.coalgebra(), 2), {H, H, H})
      .at(3, mc.h.antipode_inv)
      .at(3, mc.h.delta, {H, H})
      .at(2, mc.h.antipode_inv)
      .perm({5, 3, 0, 2, 4, 1})
      .fuse(1, 2, mc.h.mult, {H})
      .fuse(0, 2, mc.action, {C})
      .fuse(1, 3, iterated_mult(mc.h.algebra(), 2), {H})
      .done();
}

LinMap transpose_ltr_map(const ModuleCoalgebra& mc, const LinMap& gam, const LinMap& mu) {
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  return Pipe(C)
      .then(gam, {C, H})
      .at(0, mu, {C, H})
      .at(1, mc.h.antipode)
      .at(2, mc.h.antipode)
      .at(2, mc.h.delta, {H, H})
      .perm({2, 0, 1, 3})
      .fuse(2, 2, mc.h.mult, {H})
      .fuse(1, 2, mc.action, {C})
      .done();
}

LinMap transpose_ltr_inverse_map(const ModuleCoalgebra& mc, const LinMap& gam,
                                 const LinMap& mu) {
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  return Pipe(C)
      .then(gam, {C, H})
      .at(0, mu, {C, H})
      .at(1, mc.h.antipode)
      .at(1, mc.h.delta, {H, H})
      .at(3, mc.h.antipode)
      .at(3, iterated_comult(mc.h.coalgebra(), 2), {H, H, H})
      .perm({3, 1, 4, 0, 2, 5})
      .at(0, mc.h.antipode)
      .fuse(0, 3, iterated_mult(mc.h.algebra(), 2), {H})
      .fuse(2, 2, mc.h.mult, {H})
      .fuse(1, 2, mc.action, {C})
      .done();
}

}  // namespace

LeftTwist transpose_rtl(const RightTwist& t) {
  if (!t.inverse) throw InverseMissing("transpose requires the *-inverse attached");
  if (!is_twisting(t)) throw NotATwisting("transpose requires a verified twisting");
  LeftTwist out = make_left_twist(t.mc, transpose_rtl_map(t.mc, t.map, *t.inverse));
  out.inverse = transpose_rtl_inverse_map(t.mc, t.map, *t.inverse);
  if (!is_twisting(out))
    throw InvariantViolation("l(tau) fails the left-twisting equations");
  LeftTwist inv = make_left_twist(t.mc, *out.inverse);
  LeftTwist sp = sigma_prime(t.mc);
  if (!(times_product(out, inv).map == sp.map) || !(times_product(inv, out).map == sp.map))
    throw InvariantViolation("l(tau)' is not the x-inverse of l(tau)");
  return out;
}

RightTwist transpose_ltr(const LeftTwist& g) {
  if (!g.inverse) throw InverseMissing("transpose requires the x-inverse attached");
  if (!is_twisting(g)) throw NotATwisting("transpose requires a verified left twisting");
  RightTwist out = make_right_twist(g.mc, transpose_ltr_map(g.mc, g.map, *g.inverse));
  out.inverse = transpose_ltr_inverse_map(g.mc, g.map, *g.inverse);
  if (!is_twisting(out))
    throw InvariantViolation("r(gamma) fails the right-twisting equations");
  RightTwist inv = make_right_twist(g.mc, *out.inverse);
  RightTwist s = sigma_twist(g.mc);
  if (!(star_product(out, inv).map == s.map) || !(star_product(inv, out).map == s.map))
    throw InvariantViolation("r(gamma)' is not the *-inverse of r(gamma)");
  return out;
}

}  // namespace cotwist
