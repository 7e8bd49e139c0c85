#include <doctest.h>

#include "cotwist/catalog.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/errors.hpp"
#include "cotwist/galois.hpp"
#include "support.hpp"

using namespace cotwist;
using namespace cotwist::test;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF5 = FieldSpec::prime(5);
}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("write-then-read of every builtin is bit-exact") {
  for (const auto& field : {kQ, kF5})
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      auto b = builtin(name, field);
      std::string once = bundle_to_json(b);
      auto back = bundle_from_json(once);
      CHECK(bundle_to_json(back) == once);
    }
}

TEST_CASE("twisting documents round trip with their inverses") {
  auto t = with_inverse(twisting_from_crossed(harrison_c2_sign(kQ)));
  auto b = bundle_from_right_twist(t, "test");
  auto back = right_twist_from_bundle(bundle_from_json(bundle_to_json(b)));
  CHECK(back.map == t.map);
  REQUIRE(back.inverse.has_value());
  CHECK(*back.inverse == *t.inverse);
  CHECK(is_twisting(back));
}

TEST_CASE("builtin hopf bundles assemble and verify") {
  for (const auto& field : {kQ, kF5})
    for (const auto& name :
         {"group:C2", "group:C4", "dualgroup:C2", "sweedler:H4"}) {
      auto h = hopf_from_bundle(builtin(name, field));
      CHECK(check_hopf(h).ok());
    }
}

TEST_CASE("builtin harrison:C2-sign feeds both checkers") {
  for (const auto& field : {kQ, kF5}) {
    auto b = builtin("harrison:C2-sign", field);
    CHECK(check_harrison(harrison_from_bundle(b)).ok());
    CHECK(check_trivial_harrison(trivial_harrison_from_bundle(b)).ok());
  }
}

TEST_CASE("builtin regular:group:C2 is a Galois module coalgebra") {
  auto mc = modcoalg_from_bundle(builtin("regular:group:C2", kQ));
  CHECK(check_module_coalgebra(mc).ok());
  CHECK(std::holds_alternative<GaloisCertificate>(check_galois(mc)));
}

TEST_CASE("unknown names and char-2 sweedler are rejected") {
  CHECK_THROWS_AS(builtin("nonesuch", kQ), UnknownName);
  CHECK_THROWS_AS(builtin("regular:nonesuch", kQ), UnknownName);
  CHECK_THROWS_AS(builtin("sweedler:H4", FieldSpec::prime(2)), Error);
}

TEST_CASE("scalar grammar: integers, fractions, residues") {
  CHECK(parse_scalar(kQ, "3") == Scalar(3));
  CHECK(parse_scalar(kQ, "-1/2") == Scalar(-1, 2));
  CHECK(parse_scalar(kQ, " 2/4 ") == Scalar(1, 2));
  CHECK(parse_scalar(kF5, "4 mod 5") == Scalar(4));
  CHECK(parse_scalar(kF5, "-1") == Scalar(4));
  CHECK(parse_scalar(kF5, "1/2") == Scalar(3));
  CHECK_THROWS_AS(parse_scalar(kF5, "4 mod 7"), Error);
  CHECK_THROWS_AS(parse_scalar(kQ, "4 mod 5"), Error);
  CHECK_THROWS_AS(parse_scalar(kQ, "1/0"), Error);
  CHECK_THROWS_AS(parse_scalar(kQ, "x"), Error);
  CHECK_THROWS_AS(parse_scalar(kF5, "1/5"), Error);
}

TEST_CASE("malformed documents are rejected with MalformedDoc") {
  CHECK_THROWS_AS(bundle_from_json("not json"), MalformedDoc);
  CHECK_THROWS_AS(bundle_from_json("{}"), MalformedDoc);
  auto b = builtin("group:C2", kQ);
  std::string text = bundle_to_json(b);
  // Break a matrix dimension.
  auto pos = text.find("\"matrix\"");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, 8, "\"matrixx\"");
  CHECK_THROWS_AS(bundle_from_json(broken), MalformedDoc);
}

TEST_CASE("witness bundles round trip") {
  auto target = build_crossed(harrison_c2_sign(kQ));
  auto source = build_crossed(harrison_c2_scaled(kQ, Scalar(-1, 4)));
  LinMap u_map(target.coaction.h.space, target.coaction.c.space);
  u_map.set(0, 0, Scalar(1));
  u_map.set(1, 0, Scalar(2));
  auto u = make_conv(target.coaction.c, target.coaction.h.algebra(), u_map);
  auto w = witness_from_crossed_iso(u, source, target);
  auto back = witness_from_bundle(
      bundle_from_json(bundle_to_json(bundle_from_witness(w, "test"))));
  CHECK(back.v == w.v);
  CHECK(back.tau.map == w.tau.map);
  CHECK(back.lambda.map == w.lambda.map);
  CHECK(is_witness(back));
}

TEST_SUITE_END();
