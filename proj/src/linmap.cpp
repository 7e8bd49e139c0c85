#include "cotwist/linmap.hpp"

#include <algorithm>

#include "cotwist/errors.hpp"

namespace cotwist {

LinMap::LinMap(Space codomain, Space domain)
    : dom_(std::move(domain)), cod_(std::move(codomain)), cols_(dom_.dim()) {
  if (!(dom_.field == cod_.field))
    throw FieldMismatch("map between spaces over different fields");
  a_.assign(static_cast<std::size_t>(rows()) * cols(), Scalar(0));
}

LinMap LinMap::identity(const Space& s) {
  LinMap m(s, s);
  for (int i = 0; i < s.dim(); ++i) m.set(i, i, Scalar(1));
  return m;
}

LinMap LinMap::from_entries(Space codomain, Space domain, std::vector<Scalar> entries) {
  LinMap m(std::move(codomain), std::move(domain));
  if (entries.size() != static_cast<std::size_t>(m.rows()) * m.cols())
    throw ShapeMismatch("entry count does not match matrix shape");
  for (auto& e : entries) e = fnorm(m.field(), e);
  m.a_ = std::move(entries);
  return m;
}

void LinMap::set(int r, int c, Scalar v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] = fnorm(field(), std::move(v));
}

bool LinMap::operator==(const LinMap& o) const {
  if (!dom_.same(o.dom_) || !cod_.same(o.cod_)) return false;
  return a_ == o.a_;
}

LinMap LinMap::with_spaces(Space codomain, Space domain) const {
  if (codomain.dim() != rows() || domain.dim() != cols())
    throw ShapeMismatch("relabeling must preserve dimensions");
  LinMap m(std::move(codomain), std::move(domain));
  m.a_ = a_;
  return m;
}

std::vector<Scalar> LinMap::column(int c) const {
  std::vector<Scalar> v;
  v.reserve(rows());
  for (int r = 0; r < rows(); ++r) v.push_back(at(r, c));
  return v;
}

std::vector<std::string> LinMap::column_strs(int c) const {
  std::vector<std::string> v;
  v.reserve(rows());
  for (int r = 0; r < rows(); ++r) v.push_back(scalar_str(at(r, c)));
  return v;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (!f.domain().same(g.codomain()))
    throw SpaceMismatch("compose: domain of outer map != codomain of inner map (" +
                        f.domain().name + " vs " + g.codomain().name + ")");
  const FieldSpec& k = f.field();
  LinMap out(f.codomain(), g.domain());
  // out(i,j) = sum_m f(i,m) g(m,j); iterate over nonzeros of g.
  for (int j = 0; j < g.cols(); ++j)
    for (int m = 0; m < g.rows(); ++m) {
      const Scalar& gm = g.at(m, j);
      if (fis_zero(gm)) continue;
      for (int i = 0; i < f.rows(); ++i) {
        const Scalar& fi = f.at(i, m);
        if (fis_zero(fi)) continue;
        out.set(i, j, fadd(k, out.at(i, j), fmul(k, fi, gm)));
      }
    }
  return out;
}

LinMap compose_chain(const std::vector<LinMap>& fs) {
  if (fs.empty()) throw Error("compose_chain: empty chain");
  LinMap acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

LinMap kronecker(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("kronecker over different fields");
  const FieldSpec& k = f.field();
  LinMap out(tensor_space(f.codomain(), g.codomain()), tensor_space(f.domain(), g.domain()));
  for (int jf = 0; jf < f.cols(); ++jf)
    for (int if_ = 0; if_ < f.rows(); ++if_) {
      const Scalar& fv = f.at(if_, jf);
      if (fis_zero(fv)) continue;
      for (int jg = 0; jg < g.cols(); ++jg)
        for (int ig = 0; ig < g.rows(); ++ig) {
          const Scalar& gv = g.at(ig, jg);
          if (fis_zero(gv)) continue;
          out.set(if_ * g.rows() + ig, jf * g.cols() + jg, fmul(k, fv, gv));
        }
    }
  return out;
}

LinMap kronecker_chain(const std::vector<LinMap>& fs) {
  if (fs.empty()) throw Error("kronecker_chain: empty list");
  LinMap acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = kronecker(acc, fs[i]);
  return acc;
}

LinMap swap_map(const Space& a, const Space& b) {
  if (!(a.field == b.field)) throw FieldMismatch("swap over different fields");
  LinMap out(tensor_space(b, a), tensor_space(a, b));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      out.set(j * a.dim() + i, i * b.dim() + j, Scalar(1));
  return out;
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (!f.domain().same(g.domain()) || !f.codomain().same(g.codomain()))
    throw SpaceMismatch("add: shapes differ");
  LinMap out(f.codomain(), f.domain());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      out.set(i, j, fadd(f.field(), f.at(i, j), g.at(i, j)));
  return out;
}

LinMap sub(const LinMap& f, const LinMap& g) {
  if (!f.domain().same(g.domain()) || !f.codomain().same(g.codomain()))
    throw SpaceMismatch("sub: shapes differ");
  LinMap out(f.codomain(), f.domain());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      out.set(i, j, fsub(f.field(), f.at(i, j), g.at(i, j)));
  return out;
}

LinMap scale(const Scalar& s, const LinMap& f) {
  LinMap out(f.codomain(), f.domain());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) out.set(i, j, fmul(f.field(), s, f.at(i, j)));
  return out;
}

bool is_zero(const LinMap& f) {
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (!fis_zero(f.at(i, j))) return false;
  return true;
}

LinMap transpose(const LinMap& f) {
  LinMap out(f.domain(), f.codomain());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (!fis_zero(f.at(i, j))) out.set(j, i, f.at(i, j));
  return out;
}

namespace {

// In-place reduced row echelon form with deterministic pivoting: for each
// column left to right, take the first row (top down, among unused) with a
// nonzero entry. Operates on the first `ncols_main` columns; trailing columns
// (an augmented part) are carried along.
struct EchelonState {
  std::vector<std::vector<Scalar>> rows;
  std::vector<int> pivot_cols;
};

EchelonState echelon(std::vector<std::vector<Scalar>> rows, int ncols_main,
                     const FieldSpec& k) {
  EchelonState st;
  st.rows = std::move(rows);
  const int nrows = static_cast<int>(st.rows.size());
  int next_row = 0;
  for (int col = 0; col < ncols_main && next_row < nrows; ++col) {
    int piv = -1;
    for (int r = next_row; r < nrows; ++r)
      if (!fis_zero(st.rows[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(st.rows[next_row], st.rows[piv]);
    auto& prow = st.rows[next_row];
    Scalar inv = finv(k, prow[col]);
    for (auto& x : prow) x = fmul(k, inv, x);
    for (int r = 0; r < nrows; ++r) {
      if (r == next_row) continue;
      const Scalar factor = st.rows[r][col];
      if (fis_zero(factor)) continue;
      for (std::size_t c = 0; c < prow.size(); ++c)
        st.rows[r][c] = fsub(k, st.rows[r][c], fmul(k, factor, prow[c]));
    }
    st.pivot_cols.push_back(col);
    ++next_row;
  }
  return st;
}

std::vector<std::vector<Scalar>> matrix_rows(const LinMap& m) {
  std::vector<std::vector<Scalar>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
  }
  return rows;
}

}  // namespace

int rank(const LinMap& m) {
  auto st = echelon(matrix_rows(m), m.cols(), m.field());
  return static_cast<int>(st.pivot_cols.size());
}

Rref rref_of(const LinMap& m) {
  auto st = echelon(matrix_rows(m), m.cols(), m.field());
  Rref out;
  out.pivot_cols = st.pivot_cols;
  out.rows.assign(st.rows.begin(), st.rows.begin() + st.pivot_cols.size());
  return out;
}

std::optional<Solution> linear_solve(const LinMap& m, const LinMap& rhs) {
  if (!m.codomain().same(rhs.codomain()))
    throw SpaceMismatch("linear_solve: incompatible codomains");
  const FieldSpec& k = m.field();
  const int n = m.cols();
  const int q = rhs.cols();
  // Augment [m | rhs] and eliminate on the m-part.
  std::vector<std::vector<Scalar>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].reserve(n + q);
    for (int j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));
    for (int j = 0; j < q; ++j) rows[i].push_back(rhs.at(i, j));
  }
  auto st = echelon(std::move(rows), n, k);
  const int r = static_cast<int>(st.pivot_cols.size());
  // Consistency: rows below the pivot rows must have zero augmented part.
  for (std::size_t i = r; i < st.rows.size(); ++i)
    for (int j = 0; j < q; ++j)
      if (!fis_zero(st.rows[i][n + j])) return std::nullopt;

  LinMap x(m.domain(), rhs.domain());
  for (int pr = 0; pr < r; ++pr)
    for (int j = 0; j < q; ++j) x.set(st.pivot_cols[pr], j, st.rows[pr][n + j]);
  return Solution{std::move(x), n - r};
}

std::optional<LinMap> inverse(const LinMap& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto sol = linear_solve(m, LinMap::identity(m.codomain()));
  if (!sol || sol->kernel_dim != 0) return std::nullopt;
  return sol->x;
}

KernelBasis kernel_basis(const LinMap& m, const std::string& name) {
  const FieldSpec& k = m.field();
  auto st = rref_of(m);
  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (pi < st.pivot_cols.size() && st.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(free_cols.size());
  for (int c : free_cols) labels.push_back(m.domain().basis[c]);
  Space w = make_space(name, std::move(labels), k);

  LinMap incl(m.domain(), w);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    incl.set(free_cols[t], static_cast<int>(t), Scalar(1));
    for (std::size_t pr = 0; pr < st.pivot_cols.size(); ++pr) {
      const Scalar& coeff = st.rows[pr][free_cols[t]];
      if (!fis_zero(coeff))
        incl.set(st.pivot_cols[pr], static_cast<int>(t), fneg(k, coeff));
    }
  }
  LinMap proj(w, m.domain());
  for (std::size_t t = 0; t < free_cols.size(); ++t)
    proj.set(static_cast<int>(t), free_cols[t], Scalar(1));
  return KernelBasis{std::move(incl), std::move(proj), std::move(free_cols)};
}

}  // namespace cotwist
