#include "cotwist/hopf.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

void require_shape(const LinMap& m, const Space& cod, const Space& dom, const char* what) {
  if (!m.domain().same(dom) || !m.codomain().same(cod))
    throw ShapeMismatch(std::string(what) + ": unexpected domain/codomain");
}

bool same_coalgebra(const Coalgebra& x, const Coalgebra& y) {
  return x.space.same(y.space) && x.delta == y.delta && x.counit == y.counit;
}

bool same_algebra(const Algebra& x, const Algebra& y) {
  return x.space.same(y.space) && x.mult == y.mult && x.unit == y.unit;
}

}  // namespace

HopfAlgebra make_hopf(Space space, LinMap mult, LinMap unit, LinMap delta, LinMap counit,
                      LinMap antipode) {
  Space k = unit_space(space.field);
  Space hh = tensor_space(space, space);
  require_shape(mult, space, hh, "mult");
  require_shape(unit, space, k, "unit");
  require_shape(delta, hh, space, "delta");
  require_shape(counit, k, space, "counit");
  require_shape(antipode, space, space, "antipode");
  LinMap sbar = antipode_inverse(antipode);
  return HopfAlgebra{std::move(space),  std::move(mult),   std::move(unit),
                     std::move(delta),  std::move(counit), std::move(antipode),
                     std::move(sbar)};
}

LinMap antipode_inverse(const LinMap& antipode) {
  auto inv = inverse(antipode);
  if (!inv) throw SNotBijective("antipode is not bijective");
  return *inv;
}

CheckReport check_coalgebra(const Coalgebra& c) {
  CheckReport rep;
  const Space& C = c.space;
  rep.add_equal("coassociativity",
                Pipe(C).then(c.delta, {C, C}).at(0, c.delta, {C, C}).done(),
                Pipe(C).then(c.delta, {C, C}).at(1, c.delta, {C, C}).done());
  rep.add_equal("counit-left", Pipe(C).then(c.delta, {C, C}).at(0, c.counit).done(),
                LinMap::identity(C));
  rep.add_equal("counit-right", Pipe(C).then(c.delta, {C, C}).at(1, c.counit).done(),
                LinMap::identity(C));
  return rep;
}

CheckReport check_algebra(const Algebra& a) {
  CheckReport rep;
  const Space& A = a.space;
  Space aaa = tensor_all({A, A, A}, A.field);
  rep.add_equal(
      "associativity",
      Pipe(aaa, {A, A, A}).fuse(0, 2, a.mult, {A}).fuse(0, 2, a.mult, {A}).done(),
      Pipe(aaa, {A, A, A}).fuse(1, 2, a.mult, {A}).fuse(0, 2, a.mult, {A}).done());
  // k (x) A = A, so u (x) id already has domain A.
  rep.add_equal("unit-left", compose(a.mult, kronecker(a.unit, LinMap::identity(A))),
                LinMap::identity(A));
  rep.add_equal("unit-right", compose(a.mult, kronecker(LinMap::identity(A), a.unit)),
                LinMap::identity(A));
  return rep;
}

CheckReport check_hopf(const HopfAlgebra& h) {
  CheckReport rep;
  rep.merge("algebra", check_algebra(h.algebra()));
  rep.merge("coalgebra", check_coalgebra(h.coalgebra()));

  const Space& H = h.space;
  Space hh = tensor_space(H, H);
  rep.add_equal("delta-multiplicative",
                Pipe(hh, {H, H}).fuse(0, 2, h.mult, {H}).then(h.delta, {H, H}).done(),
                Pipe(hh, {H, H})
                    .at(0, h.delta, {H, H})
                    .at(2, h.delta, {H, H})
                    .perm({0, 2, 1, 3})
                    .fuse(0, 2, h.mult, {H})
                    .fuse(1, 2, h.mult, {H})
                    .done());
  rep.add_equal("delta-unit", compose(h.delta, h.unit), kronecker(h.unit, h.unit));
  rep.add_equal("eps-multiplicative", compose(h.counit, h.mult),
                kronecker(h.counit, h.counit));
  rep.add_equal("eps-unit", compose(h.counit, h.unit),
                LinMap::identity(unit_space(H.field)));

  LinMap u_eps = compose(h.unit, h.counit);
  rep.add_equal("antipode-left",
                Pipe(H).then(h.delta, {H, H}).at(0, h.antipode).fuse(0, 2, h.mult, {H}).done(),
                u_eps);
  rep.add_equal("antipode-right",
                Pipe(H).then(h.delta, {H, H}).at(1, h.antipode).fuse(0, 2, h.mult, {H}).done(),
                u_eps);

  if (rank(h.antipode) == H.dim())
    rep.add_pass("antipode-bijective");
  else
    rep.add_fail("antipode-bijective");
  rep.add_equal("antipode-inverse-left", compose(h.antipode_inv, h.antipode),
                LinMap::identity(H));
  rep.add_equal("antipode-inverse-right", compose(h.antipode, h.antipode_inv),
                LinMap::identity(H));
  return rep;
}

LinMap iterated_comult(const Coalgebra& c, int n) {
  if (n < 0) throw Error("iterated_comult: n must be >= 0");
  const Space& C = c.space;
  Pipe p(C);
  for (int i = 0; i < n; ++i) p.at(0, c.delta, {C, C});
  return p.done();
}

LinMap iterated_mult(const Algebra& a, int n) {
  if (n < 0) throw Error("iterated_mult: n must be >= 0");
  const Space& A = a.space;
  std::vector<Space> factors(static_cast<std::size_t>(n) + 1, A);
  Pipe p(tensor_all(factors, A.field), factors);
  for (int i = 0; i < n; ++i) p.fuse(0, 2, a.mult, {A});
  return p.done();
}

ConvElement make_conv(Coalgebra c, Algebra a, LinMap map) {
  require_shape(map, a.space, c.space, "convolution element");
  return ConvElement{std::move(c), std::move(a), std::move(map)};
}

ConvElement conv_unit(const Coalgebra& c, const Algebra& a) {
  return make_conv(c, a, compose(a.unit, c.counit));
}

ConvElement convolve(const ConvElement& f, const ConvElement& g) {
  if (!same_coalgebra(f.c, g.c) || !same_algebra(f.a, g.a))
    throw SpaceMismatch("convolve: elements live in different convolution algebras");
  const Space& C = f.c.space;
  LinMap m = Pipe(C)
                 .then(f.c.delta, {C, C})
                 .at(0, f.map)
                 .at(1, g.map)
                 .fuse(0, 2, f.a.mult, {f.a.space})
                 .done();
  return ConvElement{f.c, f.a, std::move(m)};
}

std::optional<ConvElement> convolution_inverse(const ConvElement& f) {
  const Space& C = f.c.space;
  const Space& A = f.a.space;
  const FieldSpec& k = C.field;
  const int dc = C.dim(), da = A.dim();
  const int n = da * dc;

  // Left-multiplication operator of f on Hom(C, A), columns indexed by the
  // flattened (row-major) matrix units of Hom(C, A).
  Space hom = indexed_space("Hom", n, k);
  LinMap op(hom, hom);
  for (int r = 0; r < da; ++r)
    for (int j = 0; j < dc; ++j) {
      LinMap e(A, C);
      e.set(r, j, Scalar(1));
      ConvElement conv = convolve(f, ConvElement{f.c, f.a, std::move(e)});
      for (int rr = 0; rr < da; ++rr)
        for (int jj = 0; jj < dc; ++jj)
          op.set(rr * dc + jj, r * dc + j, conv.map.at(rr, jj));
    }

  ConvElement unit = conv_unit(f.c, f.a);
  LinMap rhs(hom, unit_space(k));
  for (int r = 0; r < da; ++r)
    for (int j = 0; j < dc; ++j) rhs.set(r * dc + j, 0, unit.map.at(r, j));

  auto sol = linear_solve(op, rhs);
  if (!sol) return std::nullopt;
  LinMap g(A, C);
  for (int r = 0; r < da; ++r)
    for (int j = 0; j < dc; ++j) g.set(r, j, sol->x.at(r * dc + j, 0));
  ConvElement ginv{f.c, f.a, std::move(g)};
  if (!(convolve(ginv, f).map == unit.map))
    return std::nullopt;  // right inverse that is not a left inverse
  return ginv;
}

}  // namespace cotwist
