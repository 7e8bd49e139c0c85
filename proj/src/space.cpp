#include "cotwist/space.hpp"

#include <set>

#include "cotwist/errors.hpp"

namespace cotwist {

Space make_space(std::string name, std::vector<std::string> basis, FieldSpec field) {
  std::set<std::string> seen;
  for (const auto& l : basis) {
    if (l.empty() && basis.size() != 1)
      throw Error("empty basis label outside a one-dimensional space");
    if (!seen.insert(l).second)
      throw Error("duplicate basis label \"" + l + "\" in space " + name);
  }
  return Space{std::move(name), std::move(basis), field};
}

Space unit_space(FieldSpec field) { return Space{"k", {""}, field}; }

bool is_unit_space(const Space& s) { return s.basis.size() == 1 && s.basis[0].empty(); }

std::string tensor_label(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "⋄" + b;
}

Space tensor_space(const Space& a, const Space& b) {
  if (!(a.field == b.field))
    throw FieldMismatch("tensor of spaces over different fields: " + a.field.str() +
                        " vs " + b.field.str());
  if (is_unit_space(a)) return b;
  if (is_unit_space(b)) return a;
  Space t;
  t.field = a.field;
  t.name = a.name + "⊗" + b.name;
  t.basis.reserve(a.basis.size() * b.basis.size());
  for (const auto& la : a.basis)
    for (const auto& lb : b.basis) t.basis.push_back(tensor_label(la, lb));
  return t;
}

Space tensor_all(const std::vector<Space>& factors, FieldSpec field) {
  Space acc = unit_space(field);
  for (const auto& f : factors) acc = tensor_space(acc, f);
  return acc;
}

Space indexed_space(const std::string& name, int n, FieldSpec field) {
  std::vector<std::string> basis;
  basis.reserve(n);
  for (int i = 0; i < n; ++i) basis.push_back(name + ":" + std::to_string(i));
  return Space{name, std::move(basis), field};
}

}  // namespace cotwist
