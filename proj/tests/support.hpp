#pragma once

#include <random>
#include <vector>

#include "cotwist/linmap.hpp"

namespace cotwist::test {

inline Space qspace(const std::string& name, std::vector<std::string> basis) {
  return make_space(name, std::move(basis), FieldSpec::rationals());
}

inline Space fspace(const std::string& name, std::vector<std::string> basis, uint32_t p) {
  return make_space(name, std::move(basis), FieldSpec::prime(p));
}

inline std::vector<std::string> labels(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// Deterministic pseudo-random map. Over F_p entries are uniform residues;
/// over Q they are small integers or halves.
inline LinMap random_map(const Space& cod, const Space& dom, std::mt19937_64& rng) {
  LinMap m(cod, dom);
  const auto& k = dom.field;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (k.is_rational()) {
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 2);
        m.set(i, j, Scalar(num, den));
      } else {
        m.set(i, j, Scalar(static_cast<long>(rng() % k.characteristic)));
      }
    }
  return m;
}

/// Independent oracle: plain triple-loop matrix product.
inline LinMap naive_product(const LinMap& f, const LinMap& g) {
  LinMap out(f.codomain(), g.domain());
  const auto& k = f.field();
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      Scalar acc(0);
      for (int m = 0; m < f.cols(); ++m) acc = fadd(k, acc, fmul(k, f.at(i, m), g.at(m, j)));
      out.set(i, j, acc);
    }
  return out;
}

/// Independent oracle: Kronecker product by explicit index arithmetic.
inline LinMap naive_kronecker(const LinMap& f, const LinMap& g) {
  LinMap out(tensor_space(f.codomain(), g.codomain()),
             tensor_space(f.domain(), g.domain()));
  const auto& k = f.field();
  for (int i1 = 0; i1 < f.rows(); ++i1)
    for (int j1 = 0; j1 < f.cols(); ++j1)
      for (int i2 = 0; i2 < g.rows(); ++i2)
        for (int j2 = 0; j2 < g.cols(); ++j2)
          out.set(i1 * g.rows() + i2, j1 * g.cols() + j2,
                  fmul(k, f.at(i1, j1), g.at(i2, j2)));
  return out;
}

}  // namespace cotwist::test
