#include "cotwist/module_coalgebra.hpp"

#include "cotwist/errors.hpp"

namespace cotwist {

ModuleCoalgebra make_module_coalgebra(Coalgebra c, HopfAlgebra h, LinMap action) {
  if (!action.domain().same(tensor_space(c.space, h.space)) ||
      !action.codomain().same(c.space))
    throw ShapeMismatch("module coalgebra action must map C (x) H -> C");
  return ModuleCoalgebra{std::move(c), std::move(h), std::move(action)};
}

bool same_module_coalgebra(const ModuleCoalgebra& x, const ModuleCoalgebra& y) {
  return x.c.space.same(y.c.space) && x.c.delta == y.c.delta && x.c.counit == y.c.counit &&
         x.h.space.same(y.h.space) && x.h.mult == y.h.mult && x.h.delta == y.h.delta &&
         x.h.antipode == y.h.antipode && x.action == y.action;
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& mc) {
  CheckReport rep;
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  Space ch = tensor_space(C, H);
  Space chh = tensor_all({C, H, H}, C.field);

  rep.add_equal("delta-action",
                Pipe(ch, {C, H}).fuse(0, 2, mc.action, {C}).then(mc.c.delta, {C, C}).done(),
                Pipe(ch, {C, H})
                    .at(0, mc.c.delta, {C, C})
                    .at(2, mc.h.delta, {H, H})
                    .perm({0, 2, 1, 3})
                    .fuse(0, 2, mc.action, {C})
                    .fuse(1, 2, mc.action, {C})
                    .done());
  rep.add_equal("eps-action", compose(mc.c.counit, mc.action),
                kronecker(mc.c.counit, mc.h.counit));
  rep.add_equal(
      "action-assoc",
      Pipe(chh, {C, H, H}).fuse(0, 2, mc.action, {C}).fuse(0, 2, mc.action, {C}).done(),
      Pipe(chh, {C, H, H}).fuse(1, 2, mc.h.mult, {H}).fuse(0, 2, mc.action, {C}).done());
  rep.add_equal("action-unit",
                compose(mc.action, kronecker(LinMap::identity(C), mc.h.unit)),
                LinMap::identity(C));
  return rep;
}

CheckReport check_rel_hopf_module(const ModuleCoalgebra& mc, const RelHopfModule& m) {
  CheckReport rep;
  const Space& M = m.space;
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  Space mh = tensor_space(M, H);
  Space mhh = tensor_all({M, H, H}, M.field);

  rep.add_equal("coaction-coassoc",
                Pipe(M).then(m.coaction, {M, C}).at(1, mc.c.delta, {C, C}).done(),
                Pipe(M).then(m.coaction, {M, C}).at(0, m.coaction, {M, C}).done());
  rep.add_equal("coaction-counit",
                Pipe(M).then(m.coaction, {M, C}).at(1, mc.c.counit).done(),
                LinMap::identity(M));
  rep.add_equal(
      "action-assoc",
      Pipe(mhh, {M, H, H}).fuse(0, 2, m.action, {M}).fuse(0, 2, m.action, {M}).done(),
      Pipe(mhh, {M, H, H}).fuse(1, 2, mc.h.mult, {H}).fuse(0, 2, m.action, {M}).done());
  rep.add_equal("action-unit",
                compose(m.action, kronecker(LinMap::identity(M), mc.h.unit)),
                LinMap::identity(M));
  rep.add_equal("compat",
                Pipe(mh, {M, H}).fuse(0, 2, m.action, {M}).then(m.coaction, {M, C}).done(),
                Pipe(mh, {M, H})
                    .at(0, m.coaction, {M, C})
                    .at(2, mc.h.delta, {H, H})
                    .perm({0, 2, 1, 3})
                    .fuse(0, 2, m.action, {M})
                    .fuse(1, 2, mc.action, {C})
                    .done());
  return rep;
}

CheckReport check_left_rel_hopf_module(const ModuleCoalgebra& mc, const LeftRelHopfModule& m) {
  CheckReport rep;
  const Space& M = m.space;
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  Space mh = tensor_space(M, H);
  Space mhh = tensor_all({M, H, H}, M.field);

  rep.add_equal("coaction-coassoc",
                Pipe(M).then(m.coaction, {C, M}).at(0, mc.c.delta, {C, C}).done(),
                Pipe(M).then(m.coaction, {C, M}).at(1, m.coaction, {C, M}).done());
  rep.add_equal("coaction-counit",
                Pipe(M).then(m.coaction, {C, M}).at(0, mc.c.counit).done(),
                LinMap::identity(M));
  rep.add_equal(
      "action-assoc",
      Pipe(mhh, {M, H, H}).fuse(0, 2, m.action, {M}).fuse(0, 2, m.action, {M}).done(),
      Pipe(mhh, {M, H, H}).fuse(1, 2, mc.h.mult, {H}).fuse(0, 2, m.action, {M}).done());
  rep.add_equal("action-unit",
                compose(m.action, kronecker(LinMap::identity(M), mc.h.unit)),
                LinMap::identity(M));
  rep.add_equal("compat",
                Pipe(mh, {M, H}).fuse(0, 2, m.action, {M}).then(m.coaction, {C, M}).done(),
                Pipe(mh, {M, H})
                    .at(0, m.coaction, {C, M})
                    .at(2, mc.h.delta, {H, H})
                    .perm({0, 2, 1, 3})
                    .fuse(0, 2, mc.action, {C})
                    .fuse(1, 2, m.action, {M})
                    .done());
  return rep;
}

QuotientBase quotient_base(const ModuleCoalgebra& mc) {
  const Space& C = mc.c.space;
  const Space& H = mc.h.space;
  const FieldSpec& k = C.field;

  // I = column space of act - id.(eps_H applied), spanned over all basis pairs.
  LinMap span = sub(mc.action, kronecker(LinMap::identity(C), mc.h.counit));
  Rref r = rref_of(transpose(span));

  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < C.dim(); ++c) {
      if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  std::vector<std::string> blabels;
  blabels.reserve(free_cols.size());
  for (int c : free_cols) blabels.push_back(C.basis[c]);
  Space B = make_space("B", std::move(blabels), k);

  LinMap incl(C, B);
  for (std::size_t t = 0; t < free_cols.size(); ++t)
    incl.set(free_cols[t], static_cast<int>(t), Scalar(1));

  LinMap pi_map(B, C);
  for (std::size_t t = 0; t < free_cols.size(); ++t)
    pi_map.set(static_cast<int>(t), free_cols[t], Scalar(1));
  for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
      const Scalar& coeff = r.rows[pr][free_cols[t]];
      if (!fis_zero(coeff))
        pi_map.set(static_cast<int>(t), r.pivot_cols[pr], fneg(k, coeff));
    }

  LinMap pipi_delta = Pipe(C).then(mc.c.delta, {C, C}).at(0, pi_map).at(1, pi_map).done();

  // Coideal check on the canonical basis of I.
  if (!r.pivot_cols.empty()) {
    Space ispace = indexed_space("I", static_cast<int>(r.pivot_cols.size()), k);
    LinMap ibasis(C, ispace);
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
      for (int c = 0; c < C.dim(); ++c)
        if (!fis_zero(r.rows[t][c])) ibasis.set(c, static_cast<int>(t), r.rows[t][c]);
    if (!is_zero(compose(pipi_delta, ibasis)))
      throw CoidealFailure("span{c.h - eps(h) c} is not a coideal: Delta(I) exceeds "
                           "I (x) C + C (x) I");
    if (!is_zero(compose(mc.c.counit, ibasis)))
      throw CoidealFailure("span{c.h - eps(h) c} is not a coideal: eps(I) != 0");
  }

  Coalgebra b{B, compose(pipi_delta, incl), compose(mc.c.counit, incl)};
  QuotientBase q{std::move(b), std::move(pi_map), std::move(incl)};

  if (!(compose(q.b.delta, q.pi) == pipi_delta))
    throw InvariantViolation("pi is not a coalgebra map (Delta)");
  if (!(compose(q.b.counit, q.pi) == mc.c.counit))
    throw InvariantViolation("pi is not a coalgebra map (eps)");
  return q;
}

CotensorSquare cotensor_square(const ModuleCoalgebra& mc, const QuotientBase& q) {
  const Space& C = mc.c.space;
  Space cc = tensor_space(C, C);
  LinMap first =
      Pipe(cc, {C, C}).at(0, mc.c.delta, {C, C}).at(1, q.pi).done();
  LinMap second =
      Pipe(cc, {C, C}).at(1, mc.c.delta, {C, C}).at(1, q.pi).done();
  KernelBasis kb = kernel_basis(sub(first, second), "C□C");
  return CotensorSquare{kb.incl.domain(), kb.incl, kb.proj};
}

}  // namespace cotwist
