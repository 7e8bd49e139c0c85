#pragma once

#include <optional>
#include <vector>

#include "cotwist/space.hpp"

namespace cotwist {

/// A linear map between labeled tensor spaces, stored as a dense matrix over
/// the shared exact field. Entry (i,j) is the coefficient of the i-th codomain
/// basis vector in the image of the j-th domain basis vector. Immutable in
/// spirit: every operation returns a fresh value.
class LinMap {
 public:
  LinMap(Space codomain, Space domain);  // zero map

  static LinMap identity(const Space& s);
  static LinMap from_entries(Space codomain, Space domain, std::vector<Scalar> entries);

  const Space& domain() const { return dom_; }
  const Space& codomain() const { return cod_; }
  const FieldSpec& field() const { return dom_.field; }
  int rows() const { return cod_.dim(); }
  int cols() const { return dom_.dim(); }

  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Scalar v);

  bool operator==(const LinMap& o) const;

  /// Same matrix, relabeled spaces (shape must agree). Used where a canonical
  /// identification is bit-exact on coordinates.
  LinMap with_spaces(Space codomain, Space domain) const;

  std::vector<Scalar> column(int c) const;
  std::vector<std::string> column_strs(int c) const;

 private:
  Space dom_, cod_;
  int cols_;
  std::vector<Scalar> a_;
};

/// f after g (g applied first). Requires domain(f) structurally equal to
/// codomain(g).
LinMap compose(const LinMap& f, const LinMap& g);
LinMap compose_chain(const std::vector<LinMap>& fs);  // fs[0] ∘ fs[1] ∘ ...

/// Kronecker product consistent with tensor_space ordering.
LinMap kronecker(const LinMap& f, const LinMap& g);
LinMap kronecker_chain(const std::vector<LinMap>& fs);

LinMap swap_map(const Space& a, const Space& b);

LinMap add(const LinMap& f, const LinMap& g);
LinMap sub(const LinMap& f, const LinMap& g);
LinMap scale(const Scalar& s, const LinMap& f);

bool is_zero(const LinMap& f);

/// Matrix transpose; domain and codomain trade places (labels kept).
LinMap transpose(const LinMap& f);

int rank(const LinMap& m);

struct Solution {
  LinMap x;        // one solution of m*x = rhs (free coordinates set to 0)
  int kernel_dim;  // dim ker m
};

/// Exact Gaussian elimination; deterministic pivoting (first nonzero in column
/// order, scanning rows top-down). Returns nothing when rhs is outside the
/// column space.
std::optional<Solution> linear_solve(const LinMap& m, const LinMap& rhs);

/// Inverse of a square bijective map (nullopt otherwise).
std::optional<LinMap> inverse(const LinMap& m);

struct Rref {
  std::vector<std::vector<Scalar>> rows;  // nonzero rows only, canonical RREF
  std::vector<int> pivot_cols;            // ascending
};
Rref rref_of(const LinMap& m);

struct KernelBasis {
  LinMap incl;                // W -> domain(m); columns = canonical kernel basis
  LinMap proj;                // domain(m) -> W; reads free coordinates, proj∘incl = id
  std::vector<int> free_cols; // ascending
};

/// Canonical kernel basis from the RREF: one basis vector per free column,
/// with 1 at its own free coordinate and 0 at the others.
KernelBasis kernel_basis(const LinMap& m, const std::string& name);

}  // namespace cotwist
