#pragma once

#include <string>
#include <vector>

#include "cotwist/field.hpp"

namespace cotwist {

/// A finite-dimensional vector space with an ordered, labeled basis.
///
/// Identity is structural: two spaces are the same iff they carry the same
/// field and the same basis-label sequence. The name is display-only.
/// The ground field k is the one-dimensional space whose single basis label is
/// the empty string; tensoring with it is the identity on labels, so k (x) V
/// and V are the same space and no explicit unitors are ever needed.
struct Space {
  std::string name;
  std::vector<std::string> basis;
  FieldSpec field;

  int dim() const { return static_cast<int>(basis.size()); }
  bool same(const Space& o) const { return field == o.field && basis == o.basis; }
};

/// Validates label distinctness ("" allowed only in a one-dimensional space).
Space make_space(std::string name, std::vector<std::string> basis, FieldSpec field);

Space unit_space(FieldSpec field);
bool is_unit_space(const Space& s);

/// Row-major tensor product: the label of a_i (x) b_j is "a_i<diamond>b_j" and the
/// left factor index varies slowest. Throws FieldMismatch.
Space tensor_space(const Space& a, const Space& b);
Space tensor_all(const std::vector<Space>& factors, FieldSpec field);

std::string tensor_label(const std::string& a, const std::string& b);

/// Anonymous n-dimensional space with labels "name:0".."name:n-1" (scratch
/// coordinates for solver plumbing).
Space indexed_space(const std::string& name, int n, FieldSpec field);

}  // namespace cotwist
