#include <doctest.h>

#include "cotwist/catalog.hpp"
#include "cotwist/equivalence.hpp"
#include "cotwist/errors.hpp"
#include "support.hpp"

using namespace cotwist;
using namespace cotwist::test;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF5 = FieldSpec::prime(5);

/// u = e0 + b e1 as an element of Hom(k, H) for H the dual of C2.
ConvElement scalar_u(const CrossedCoproduct& crossed, long b) {
  const auto& c = crossed.coaction.c;
  const auto& h = crossed.coaction.h;
  LinMap m(h.space, c.space);
  m.set(0, 0, Scalar(1));
  m.set(1, 0, Scalar(b));
  return make_conv(c, h.algebra(), m);
}

/// The equivalent pair (tau_R, lambda') with its bridge witness, over Q:
/// alpha_{-1} transports to alpha_{-1/b^2} through u = e0 + b e1.
struct BridgeData {
  CrossedCoproduct target;  // sign cocycle, twisting tau_R
  CrossedCoproduct source;  // transported cocycle, twisting lambda
  ConvElement u;
  EquivWitness w;
};

BridgeData bridge(FieldSpec field, long b, const Scalar& t_source) {
  BridgeData d{build_crossed(harrison_c2_sign(field)),
               build_crossed(harrison_c2_scaled(field, t_source)),
               scalar_u(build_crossed(harrison_c2_sign(field)), b),
               // filled below
               reflexive_witness(sigma_twist(build_crossed(harrison_c2_sign(field)).mc))};
  d.w = witness_from_crossed_iso(d.u, d.source, d.target);
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("equivalence");

TEST_CASE("reflexive witness passes for every catalog twisting") {
  for (const auto& field : {kQ, kF5}) {
    for (auto h : {group_algebra_cyclic(2, field), dual_group_c2(field),
                   sweedler_h4(field)}) {
      auto sigma = sigma_twist(regular_module(h));
      auto w = reflexive_witness(sigma);
      CHECK(check_witness(w).ok());
      CHECK(w.inverse.has_value());
      CHECK(psi_from_witness(w) == LinMap::identity(h.space));
    }
    auto tau = twisting_from_crossed(harrison_c2_sign(field));
    auto w = reflexive_witness(tau);
    CHECK(check_witness(w).ok());
    CHECK(psi_from_witness(w) == LinMap::identity(tau.mc.c.space));
  }
}

TEST_CASE("a witness violating H-linearity fails with a witness column") {
  auto mc = regular_module(sweedler_h4(kQ));
  auto sigma = sigma_twist(mc);
  LinMap v = compose(mc.h.unit, mc.c.counit);
  v.set(1, 2, Scalar(1));  // v(x) += g
  auto w = make_witness(sigma, sigma, v);
  auto rep = check_witness(w);
  CHECK_FALSE(rep.passed("eq21-linearity"));
  const auto* e = rep.find("eq21-linearity");
  REQUIRE(e != nullptr);
  CHECK(e->witness.has_value());
  CHECK_THROWS_AS(psi_from_witness(w), WitnessInvalid);
}

TEST_CASE("bridge witness relates tau_R to its transported partner over Q") {
  auto d = bridge(kQ, 2, Scalar(-1, 4));
  CHECK(check_witness(d.w).ok());
  CHECK(d.w.inverse.has_value());

  auto psi = psi_from_witness(d.w);
  CHECK(rank(psi) == psi.cols());
  CHECK(check_psi_morphism(d.w.tau, d.w.lambda, psi).ok());
}

TEST_CASE("bridge witness over F5 relates tau_R to sigma") {
  auto d = bridge(kF5, 2, Scalar(1));
  CHECK(check_witness(d.w).ok());
  // The partner cocycle is trivial, so lambda is sigma itself.
  CHECK(d.w.lambda.map == sigma_twist(d.w.lambda.mc).map);
}

TEST_CASE("witness symmetry and transitivity") {
  auto d1 = bridge(kQ, 2, Scalar(-1, 4));

  // Symmetry: the convolution inverse witnesses lambda ~ tau.
  auto back = invert_witness(d1.w);
  CHECK(check_witness(back).ok());
  CHECK(back.tau.map == d1.w.lambda.map);
  CHECK(back.lambda.map == d1.w.tau.map);

  // compose(w, invert(w)) carries v * v^-1 = u eps: the reflexive witness.
  auto round = compose_witness(d1.w, back);
  CHECK(round.v == reflexive_witness(d1.w.tau).v);

  // Transitivity along a second transport: alpha_{-1/4} -> alpha_{-1/36}.
  auto target2 = d1.source;
  auto source2 = build_crossed(harrison_c2_scaled(kQ, Scalar(-1, 36)));
  auto u2 = scalar_u(target2, 3);
  auto w2 = witness_from_crossed_iso(u2, source2, target2);
  CHECK(check_witness(w2).ok());
  auto chained = compose_witness(d1.w, w2);
  CHECK(check_witness(chained).ok());
  CHECK(chained.tau.map == d1.w.tau.map);
  CHECK(chained.lambda.map == w2.lambda.map);
}

TEST_CASE("composing witnesses with mismatched middles is rejected") {
  auto d = bridge(kQ, 2, Scalar(-1, 4));
  auto refl = reflexive_witness(d.w.tau);
  CHECK_THROWS_AS(compose_witness(d.w, refl), SpaceMismatch);
}

TEST_CASE("Thm 2.5: transferred inverse equals the directly solved one") {
  for (const auto& field : {kQ, kF5}) {
    Scalar t_source = field.is_rational() ? Scalar(-1, 4) : Scalar(1);
    auto d = bridge(field, 2, t_source);
    auto tau_inv = invert_twisting(d.w.tau);
    REQUIRE(tau_inv.has_value());

    auto mu = transfer_inverse(d.w, *tau_inv);
    auto sigma = sigma_twist(d.w.mc);
    CHECK(star_product(mu, d.w.lambda).map == sigma.map);
    CHECK(star_product(d.w.lambda, mu).map == sigma.map);

    auto direct = invert_twisting(d.w.lambda);
    REQUIRE(direct.has_value());
    CHECK(mu.map == direct->map);
  }
}

TEST_CASE("transfer with sigma and the trivial witness returns sigma") {
  auto mc = regular_module(sweedler_h4(kQ));
  auto sigma = sigma_twist(mc);
  auto w = reflexive_witness(sigma);
  auto mu = transfer_inverse(w, sigma);
  CHECK(mu.map == sigma.map);
}

TEST_CASE("transfer rejects a non-invertible witness") {
  auto mc = regular_module(sweedler_h4(kQ));
  auto sigma = sigma_twist(mc);
  // v(c) = eps(c) 1 + (x-coefficient of c) gx is not convolution invertible?
  // Use instead a v that fails invertibility outright: v = 0 on grouplikes.
  LinMap v(mc.h.space, mc.c.space);
  auto w = make_witness(sigma, sigma, v);
  CHECK_FALSE(w.inverse.has_value());
  CHECK_THROWS_AS(transfer_inverse(w, sigma), Error);
}

TEST_CASE("trivial u gives the trivial witness between equal data") {
  auto crossed = build_crossed(harrison_c2_sign(kQ));
  auto u = conv_unit(crossed.coaction.c, crossed.coaction.h.algebra());
  auto w = witness_from_crossed_iso(u, crossed, crossed);
  CHECK(w.v == reflexive_witness(w.tau).v);
}

TEST_CASE("the two bridge constructions are mutually inverse") {
  auto d = bridge(kQ, 2, Scalar(-1, 4));
  auto u_back = crossed_iso_from_witness(d.w, d.target.coaction.c, d.target.coaction.h);
  CHECK(u_back.map == d.u.map);
}

TEST_CASE("Lemma 1.4 phi agrees with psi transported along the identification") {
  // (C (x) H)^tau = C |x_alpha H identifies the crossed coproducts with the
  // twisted structures; under it, phi from Lemma 1.4 and psi from the bridge
  // witness must be the same matrix.
  auto d = bridge(kQ, 2, Scalar(-1, 4));
  auto phi = crossed_iso_from_u(d.u, d.source, d.target);
  auto psi = psi_from_witness(d.w);
  // phi: source -> target maps C^lambda -> C^tau; psi goes C^tau -> C^lambda.
  auto psi_inv = inverse(psi);
  REQUIRE(psi_inv.has_value());
  CHECK(phi == *psi_inv);
}

TEST_SUITE_END();
