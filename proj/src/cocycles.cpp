#include "cotwist/cocycles.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

void write_once(Flag& f, bool pass) {
  if (f == Flag::Unknown) f = pass ? Flag::Pass : Flag::Fail;
}

void check_alpha_shape(const ModuleCoalgebra& mc, const LinMap& alpha) {
  if (!alpha.domain().same(mc.c.space) ||
      !alpha.codomain().same(tensor_space(mc.h.space, mc.h.space)))
    throw ShapeMismatch("cocycle must map C -> H (x) H");
}

void add_counit_pair(CheckReport& rep, const std::string& name, const LinMap& alpha,
                     const HopfAlgebra& h, const Coalgebra& c) {
  const Space& C = c.space;
  LinMap u_eps = compose(h.unit, c.counit);
  auto w1 = first_difference(Pipe(C).then(alpha, {h.space, h.space}).at(0, h.counit).done(),
                             u_eps);
  auto w2 = first_difference(Pipe(C).then(alpha, {h.space, h.space}).at(1, h.counit).done(),
                             u_eps);
  if (w1)
    rep.add_fail(name, std::move(w1));
  else if (w2)
    rep.add_fail(name, std::move(w2));
  else
    rep.add_pass(name);
}

// S(h_1) a_1 h_2 (x) Sbar(h_4) a_2 h_3 applied to alpha (x) Delta^3; shared by
// the Def. 2.1 module-compatibility check and the Z2_Harr lift.
LinMap conjugate_alpha(const Coalgebra& c, const HopfAlgebra& h, const LinMap& alpha) {
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);
  return Pipe(ch, {C, H})
      .at(0, alpha, {H, H})
      .at(2, iterated_comult(h.coalgebra(), 3), {H, H, H, H})
      .perm({2, 0, 3, 5, 1, 4})
      .at(0, h.antipode)
      .at(3, h.antipode_inv)
      .fuse(0, 3, iterated_mult(h.algebra(), 2), {H})
      .fuse(1, 3, iterated_mult(h.algebra(), 2), {H})
      .done();
}

LinMap restrict_alpha(const Coalgebra& c, const HopfAlgebra& h, const LinMap& alpha_t) {
  return compose(alpha_t, kronecker(LinMap::identity(c.space), h.unit));
}

}  // namespace

TwistedCocycle make_twisted_cocycle(ModuleCoalgebra mc, LinMap alpha) {
  check_alpha_shape(mc, alpha);
  return TwistedCocycle{std::move(mc), std::move(alpha)};
}

CheckReport check_twisted_cocycle(const TwistedCocycle& tc) {
  CheckReport rep;
  const ModuleCoalgebra& mc = tc.mc;
  const Coalgebra& c = mc.c;
  const HopfAlgebra& h = mc.h;
  const Space& C = c.space;
  const Space& H = h.space;
  Space ch = tensor_space(C, H);

  add_counit_pair(rep, "eq-a-counit", tc.alpha, h, c);

  rep.add_equal("eq-b-module-compat",
                Pipe(ch, {C, H}).fuse(0, 2, mc.action, {C}).then(tc.alpha, {H, H}).done(),
                conjugate_alpha(c, h, tc.alpha));

  rep.add_equal("eq-c-cocycle",
                Pipe(C)
                    .then(iterated_comult(c, 2), {C, C, C})
                    .at(0, tc.alpha, {H, H})
                    .at(3, tc.alpha, {H, H})
                    .at(3, h.delta, {H, H})
                    .perm({0, 3, 2, 1, 4, 5})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(2, 2, h.mult, {H})
                    .fuse(1, 2, mc.action, {C})
                    .done(),
                Pipe(C)
                    .then(iterated_comult(c, 2), {C, C, C})
                    .at(0, tc.alpha, {H, H})
                    .at(1, h.delta, {H, H})
                    .at(4, tc.alpha, {H, H})
                    .perm({0, 3, 4, 1, 5, 2})
                    .fuse(2, 2, h.mult, {H})
                    .fuse(1, 2, mc.action, {C})
                    .fuse(2, 2, h.mult, {H})
                    .done());

  write_once(tc.eq_a, rep.passed("eq-a-counit"));
  write_once(tc.eq_b, rep.passed("eq-b-module-compat"));
  write_once(tc.eq_c, rep.passed("eq-c-cocycle"));
  return rep;
}

bool is_twisted_cocycle(const TwistedCocycle& tc) {
  if (tc.eq_a == Flag::Unknown || tc.eq_b == Flag::Unknown || tc.eq_c == Flag::Unknown)
    check_twisted_cocycle(tc);
  return tc.eq_a == Flag::Pass && tc.eq_b == Flag::Pass && tc.eq_c == Flag::Pass;
}

RightTwist twisting_from_twisted_cocycle(const TwistedCocycle& tc) {
  if (!is_twisted_cocycle(tc))
    throw NotACocycle("candidate fails the twisted 2-cocycle conditions");
  const Space& C = tc.mc.c.space;
  const Space& H = tc.mc.h.space;
  LinMap tau = Pipe(C)
                   .then(tc.mc.c.delta, {C, C})
                   .at(0, tc.alpha, {H, H})
                   .perm({0, 2, 1})
                   .fuse(1, 2, tc.mc.action, {C})
                   .done();
  RightTwist t = make_right_twist(tc.mc, std::move(tau));
  if (!is_twisting(t))
    throw InvariantViolation("tau_alpha fails the twisting equations");
  return t;
}

TrivialHarrison make_trivial_harrison(ModuleCoalgebra mc, LinMap alpha) {
  check_alpha_shape(mc, alpha);
  return TrivialHarrison{std::move(mc), std::move(alpha)};
}

CheckReport check_trivial_harrison(const TrivialHarrison& th) {
  CheckReport rep;
  const Coalgebra& c = th.mc.c;
  const HopfAlgebra& h = th.mc.h;
  const Space& C = c.space;
  const Space& H = h.space;

  add_counit_pair(rep, "eq-I-counit", th.alpha, h, c);

  rep.add_equal("eq-d-cocycle",
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, th.alpha, {H, H})
                    .at(2, th.alpha, {H, H})
                    .at(3, h.delta, {H, H})
                    .perm({2, 0, 3, 1, 4})
                    .fuse(1, 2, h.mult, {H})
                    .fuse(2, 2, h.mult, {H})
                    .done(),
                Pipe(C)
                    .then(c.delta, {C, C})
                    .at(0, th.alpha, {H, H})
                    .at(2, th.alpha, {H, H})
                    .at(2, h.delta, {H, H})
                    .perm({0, 2, 1, 3, 4})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .done());

  rep.add_equal("eq-e-symmetry",
                Pipe(C).then(c.delta, {C, C}).perm({1, 0}).at(0, th.alpha, {H, H}).done(),
                Pipe(C).then(c.delta, {C, C}).at(0, th.alpha, {H, H}).done());

  write_once(th.eq_i, rep.passed("eq-I-counit"));
  write_once(th.eq_d, rep.passed("eq-d-cocycle"));
  write_once(th.eq_e, rep.passed("eq-e-symmetry"));
  return rep;
}

bool is_trivial_harrison(const TrivialHarrison& th) {
  if (th.eq_i == Flag::Unknown || th.eq_d == Flag::Unknown || th.eq_e == Flag::Unknown)
    check_trivial_harrison(th);
  return th.eq_i == Flag::Pass && th.eq_d == Flag::Pass && th.eq_e == Flag::Pass;
}

HarrisonCocycle to_harrison(const TrivialHarrison& th) {
  return make_harrison(trivial_coaction(th.mc.c, th.mc.h), th.alpha);
}

TwistedCocycle lift_to_twisted(const TrivialHarrison& th) {
  if (!is_trivial_harrison(th))
    throw NotACocycle("candidate is not in Z2_Harr(H, C)");
  const Coalgebra& c = th.mc.c;
  const HopfAlgebra& h = th.mc.h;
  TwistedCocycle tc = make_twisted_cocycle(tensor_module_coalgebra(c, h),
                                           conjugate_alpha(c, h, th.alpha));
  if (!is_twisted_cocycle(tc))
    throw InvariantViolation("lift of a Harrison cocycle fails Def. 2.1");
  if (!(restrict_alpha(c, h, tc.alpha) == th.alpha))
    throw InvariantViolation("restrict(lift) is not the identity");
  return tc;
}

TrivialHarrison restrict_to_harrison(const TwistedCocycle& tc, const ModuleCoalgebra& c_mc) {
  if (!same_module_coalgebra(tc.mc, tensor_module_coalgebra(c_mc.c, c_mc.h)))
    throw SpaceMismatch("twisted cocycle does not live on C (x) H over the given C");
  if (!is_twisted_cocycle(tc))
    throw NotACocycle("candidate fails the twisted 2-cocycle conditions");
  TrivialHarrison th = make_trivial_harrison(
      c_mc, restrict_alpha(c_mc.c, c_mc.h, tc.alpha));
  if (!is_trivial_harrison(th))
    throw InvariantViolation("restriction of a twisted cocycle fails Z2_Harr");
  if (!(conjugate_alpha(c_mc.c, c_mc.h, th.alpha) == tc.alpha))
    throw InvariantViolation("lift(restrict) is not the identity");
  return th;
}

}  // namespace cotwist
