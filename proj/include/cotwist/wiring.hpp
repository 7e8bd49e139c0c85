#pragma once

#include <vector>

#include "cotwist/linmap.hpp"

namespace cotwist {

/// Incremental builder for composites of tensor-factor-local maps, the shape
/// every displayed Sweedler-notation identity reduces to. A Pipe tracks the
/// map built so far together with a factorization of its codomain; each step
/// rewrites one contiguous block of factors without ever materializing
/// id (x) f (x) id as a matrix, so intermediate storage stays at
/// rows(current) * dim(original domain).
///
///   Pipe(C).at(0, delta, {C, C}).at(1, tau, {H, C}).perm({1, 0, 2})...
class Pipe {
 public:
  explicit Pipe(const Space& domain);
  Pipe(const Space& domain, std::vector<Space> factors);  // domain = tensor of factors

  /// Replace factors [slot, slot+count) by applying f to them; f's codomain is
  /// refactored as out_factors (tensor of out_factors must equal f.codomain()).
  Pipe& fuse(int slot, int count, const LinMap& f, std::vector<Space> out_factors);

  /// Apply f to a single factor.
  Pipe& at(int slot, const LinMap& f, std::vector<Space> out_factors);
  Pipe& at(int slot, const LinMap& f);  // codomain kept as one factor

  /// Apply f across the whole current codomain.
  Pipe& then(const LinMap& f, std::vector<Space> out_factors);
  Pipe& then(const LinMap& f);

  /// Reorder factors: new slot i holds old factor order[i].
  Pipe& perm(const std::vector<int>& order);

  const std::vector<Space>& factors() const { return factors_; }
  LinMap done() const { return cur_; }

 private:
  std::vector<Space> factors_;
  LinMap cur_;
};

/// Permutation of tensor factors as an explicit LinMap (for small products).
LinMap permute_factors(const std::vector<Space>& factors, const std::vector<int>& order);

}  // namespace cotwist
