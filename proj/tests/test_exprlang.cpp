#include <doctest.h>

#include "cotwist/catalog.hpp"
#include "cotwist/exprlang.hpp"
#include "cotwist/errors.hpp"
#include "support.hpp"

using namespace cotwist;
using namespace cotwist::test;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Env h4_env() {
  Env env;
  auto h = sweedler_h4(kQ);
  auto mc = regular_module(h);
  env.bind("H.mult", h.mult);
  env.bind("H.unit", h.unit);
  env.bind("H.delta", h.delta);
  env.bind("H.eps", h.counit);
  env.bind("H.S", h.antipode);
  env.bind("H.Sbar", h.antipode_inv);
  env.bind("C.delta", mc.c.delta);
  env.bind("C.eps", mc.c.counit);
  env.bind("C.act", mc.action);
  env.bind("unit[H]", h.unit);
  env.bind_space("H", h.space);
  env.bind_space("C", mc.c.space);
  env.bind_space("k", unit_space(kQ));
  env.finalize();
  return env;
}

Expr gen(const std::string& n) {
  Expr e;
  e.kind = Expr::Kind::Gen;
  e.name = n;
  return e;
}

Expr random_ast(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    static const char* names[] = {"a", "b_1", "id[C]", "swap[C,H]", "x1", "o2"};
    return gen(names[rng() % 6]);
  }
  Expr e;
  e.kind = rng() % 2 ? Expr::Kind::Tensor : Expr::Kind::Compose;
  int n = 2 + static_cast<int>(rng() % 2);
  for (int i = 0; i < n; ++i) e.children.push_back(random_ast(rng, depth - 1));
  return e;
}

bool same_ast(const Expr& x, const Expr& y) {
  if (x.kind != y.kind || x.name != y.name || x.children.size() != y.children.size())
    return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!same_ast(x.children[i], y.children[i])) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("exprlang");

TEST_CASE("parses the Delta_tau expression into a three-term composition") {
  auto e = parse_expr("(H.mult x id[C]) o (id[H] x tau) o C.delta");
  REQUIRE(e.kind == Expr::Kind::Compose);
  REQUIRE(e.children.size() == 3);
  CHECK(e.children[0].kind == Expr::Kind::Tensor);
  CHECK(e.children[1].kind == Expr::Kind::Tensor);
  CHECK(e.children[2].kind == Expr::Kind::Gen);
  CHECK(e.children[2].name == "C.delta");
}

TEST_CASE("a bare generator parses to a Gen node") {
  auto e = parse_expr("id[C]");
  CHECK(e.kind == Expr::Kind::Gen);
  CHECK(e.name == "id[C]");
}

TEST_CASE("precedence: tensor binds tighter, parens group compositions") {
  auto e = parse_expr("a x (b o c)");
  REQUIRE(e.kind == Expr::Kind::Tensor);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].name == "a");
  CHECK(e.children[1].kind == Expr::Kind::Compose);
}

TEST_CASE("names may contain x and o as substrings") {
  auto e = parse_expr("xerxes o omega");
  REQUIRE(e.kind == Expr::Kind::Compose);
  CHECK(e.children[0].name == "xerxes");
  CHECK(e.children[1].name == "omega");
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse_expr("a x ) b");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.offset == 4);
  }
  CHECK_THROWS_AS(parse_expr("(a o b"), ParseError);
  CHECK_THROWS_AS(parse_expr("a b"), ParseError);
}

TEST_CASE("pretty-print round trips the AST") {
  std::mt19937_64 rng(271);
  for (int trial = 0; trial < 50; ++trial) {
    Expr e = random_ast(rng, 3);
    Expr reparsed = parse_expr(pretty(e));
    Expr again = parse_expr(pretty(reparsed));
    CHECK(same_ast(reparsed, again));
  }
}

TEST_CASE("elaboration is a homomorphism into (compose, kronecker)") {
  auto env = h4_env();
  auto eH = gen("id[H]");
  auto dM = gen("H.delta");
  Expr tens;
  tens.kind = Expr::Kind::Tensor;
  tens.children = {dM, eH};
  CHECK(elaborate(tens, env) ==
        kronecker(env.lookup("H.delta"), env.lookup("id[H]")));
  Expr comp;
  comp.kind = Expr::Kind::Compose;
  comp.children = {gen("H.S"), gen("H.Sbar")};
  CHECK(elaborate(comp, env) ==
        compose(env.lookup("H.S"), env.lookup("H.Sbar")));
}

TEST_CASE("identities elaborate to identities") {
  auto env = h4_env();
  CHECK(elaborate("id[C] o id[C]", env) == env.lookup("id[C]"));
}

TEST_CASE("S o Sbar = id for H4 via the language") {
  auto env = h4_env();
  auto rep = check_equation("H.S o H.Sbar", "id[H]", env);
  CHECK(rep.ok());
}

TEST_CASE("the Delta_tau expression equals twist_coalgebra's output") {
  auto env = h4_env();
  auto mc = regular_module(sweedler_h4(kQ));
  auto sigma = sigma_twist(mc);
  env.bind("tau", sigma.map);
  CHECK(elaborate("(H.mult x id[C]) o (id[H] x tau) o C.delta", env) ==
        delta_tau(sigma));
}

TEST_CASE("unknown generators and mismatched composites raise errors") {
  auto env = h4_env();
  CHECK_THROWS_AS(elaborate("nonesuch", env), UnknownGenerator);
  CHECK_THROWS_AS(elaborate("H.mult o H.mult", env), SpaceMismatch);
}

TEST_CASE("check_equation: coassociativity of kC2 passes, corrupted Delta fails") {
  Env env;
  auto h = group_algebra_cyclic(2, kQ);
  env.bind("C.delta", h.delta);
  env.bind_space("C", h.space);
  env.finalize();
  auto rep = check_equation("(C.delta x id[C]) o C.delta",
                            "(id[C] x C.delta) o C.delta", env);
  CHECK(rep.ok());

  LinMap bad = h.delta;
  bad.set(0, 1, Scalar(1));  // Delta(g) += 1 (x) 1
  Env bad_env;
  bad_env.bind("C.delta", bad);
  bad_env.bind_space("C", h.space);
  bad_env.finalize();
  auto bad_rep = check_equation("(C.delta x id[C]) o C.delta",
                                "(id[C] x C.delta) o C.delta", bad_env);
  CHECK_FALSE(bad_rep.ok());
  REQUIRE(bad_rep.entries().size() == 1);
  CHECK(bad_rep.entries()[0].witness.has_value());
}

TEST_CASE("equation files: comments, blanks, and per-line reports") {
  auto env = h4_env();
  std::string file =
      "# coassociativity of Delta\n"
      "(C.delta x id[C]) o C.delta == (id[C] x C.delta) o C.delta\n"
      "\n"
      "H.S o H.Sbar == id[H]  # composition inverse\n";
  auto rep = check_equation_file(file, env);
  CHECK(rep.ok());
  CHECK(rep.entries().size() == 2);
  CHECK_THROWS_AS(parse_equation_file("lhs = rhs\n"), ParseError);
}

TEST_CASE("eq6 and eq10 both hold for tau_R, stated in the language") {
  // The twisting lives on C = k (x) H over the dual of C2; C and H share
  // coordinates, so the bindings below give the language both names.
  for (const auto& field : {kQ, FieldSpec::prime(5)}) {
    auto t = twisting_from_crossed(harrison_c2_sign(field));
    const auto& mc = t.mc;
    Env env;
    env.bind("H.mult", mc.h.mult);
    env.bind("H.delta", mc.h.delta);
    env.bind("H.S", mc.h.antipode);
    env.bind("C.delta", mc.c.delta);
    env.bind("C.act", mc.action);
    env.bind("tau", t.map);
    env.bind("H.delta3", iterated_comult(mc.h.coalgebra(), 2));
    env.bind("H.mult3", iterated_mult(mc.h.algebra(), 2));
    env.bind_space("H", mc.h.space);
    env.bind_space("C", mc.c.space);
    env.finalize();

    auto eq6 = check_equation(
        "(H.mult x C.act) o (id[H] x swap[C,H] x id[H]) o (tau x H.delta)",
        "(H.mult x id[C]) o (id[H] x tau) o (id[H] x C.act) o (swap[C,H] x id[H]) o "
        "(id[C] x H.delta)",
        env);
    CHECK(eq6.ok());

    auto eq10 = check_equation(
        "(H.mult3 x C.act) o (H.S x id[H] x id[H] x id[C] x id[H]) o "
        "(id[H] x id[H] x swap[C,H] x id[H]) o (swap[H,H] x id[C] x id[H] x id[H]) o "
        "(id[H] x swap[C,H] x id[H] x id[H]) o (tau x id[H] x id[H] x id[H]) o "
        "(id[C] x H.delta3)",
        "tau o C.act", env);
    CHECK(eq10.ok());
  }
}

TEST_SUITE_END();
