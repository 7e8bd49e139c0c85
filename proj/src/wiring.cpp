#include "cotwist/wiring.hpp"

#include <numeric>

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

std::vector<int> dims_of(const std::vector<Space>& factors) {
  std::vector<int> d;
  d.reserve(factors.size());
  for (const auto& f : factors) d.push_back(f.dim());
  return d;
}

long long product(const std::vector<int>& dims, std::size_t from, std::size_t to) {
  long long p = 1;
  for (std::size_t i = from; i < to; ++i) p *= dims[i];
  return p;
}

}  // namespace

Pipe::Pipe(const Space& domain) : factors_{domain}, cur_(LinMap::identity(domain)) {}

Pipe::Pipe(const Space& domain, std::vector<Space> factors)
    : factors_(std::move(factors)), cur_(LinMap::identity(domain)) {
  if (!tensor_all(factors_, domain.field).same(domain))
    throw SpaceMismatch("Pipe: factorization does not match the domain");
}

Pipe& Pipe::fuse(int slot, int count, const LinMap& f, std::vector<Space> out_factors) {
  const FieldSpec& k = cur_.field();
  if (slot < 0 || count < 0 || slot + count > static_cast<int>(factors_.size()))
    throw ShapeMismatch("Pipe::fuse: factor slice out of range");
  std::vector<Space> mid(factors_.begin() + slot, factors_.begin() + slot + count);
  if (!f.domain().same(tensor_all(mid, k)))
    throw SpaceMismatch("Pipe::fuse: map domain does not match selected factors");
  if (!f.codomain().same(tensor_all(out_factors, k)))
    throw SpaceMismatch("Pipe::fuse: out_factors do not match map codomain");

  auto dims = dims_of(factors_);
  const long long pre = product(dims, 0, slot);
  const long long midd = product(dims, slot, slot + count);
  const long long post = product(dims, slot + count, dims.size());
  const long long out_mid = f.rows();

  std::vector<Space> new_factors(factors_.begin(), factors_.begin() + slot);
  new_factors.insert(new_factors.end(), out_factors.begin(), out_factors.end());
  new_factors.insert(new_factors.end(), factors_.begin() + slot + count, factors_.end());

  LinMap next(tensor_all(new_factors, k), cur_.domain());
  const int ncols = cur_.cols();
  for (int o = 0; o < out_mid; ++o)
    for (int m = 0; m < midd; ++m) {
      const Scalar& fv = f.at(o, m);
      if (fis_zero(fv)) continue;
      for (long long p = 0; p < pre; ++p)
        for (long long q = 0; q < post; ++q) {
          const long long src_row = (p * midd + m) * post + q;
          const long long dst_row = (p * out_mid + o) * post + q;
          for (int j = 0; j < ncols; ++j) {
            const Scalar& cv = cur_.at(static_cast<int>(src_row), j);
            if (fis_zero(cv)) continue;
            next.set(static_cast<int>(dst_row), j,
                     fadd(k, next.at(static_cast<int>(dst_row), j), fmul(k, fv, cv)));
          }
        }
    }
  factors_ = std::move(new_factors);
  cur_ = std::move(next);
  return *this;
}

Pipe& Pipe::at(int slot, const LinMap& f, std::vector<Space> out_factors) {
  return fuse(slot, 1, f, std::move(out_factors));
}

Pipe& Pipe::at(int slot, const LinMap& f) { return fuse(slot, 1, f, {f.codomain()}); }

Pipe& Pipe::then(const LinMap& f, std::vector<Space> out_factors) {
  return fuse(0, static_cast<int>(factors_.size()), f, std::move(out_factors));
}

Pipe& Pipe::then(const LinMap& f) {
  return fuse(0, static_cast<int>(factors_.size()), f, {f.codomain()});
}

Pipe& Pipe::perm(const std::vector<int>& order) {
  if (order.size() != factors_.size())
    throw ShapeMismatch("Pipe::perm: order length mismatch");
  std::vector<bool> seen(order.size(), false);
  for (int o : order) {
    if (o < 0 || o >= static_cast<int>(order.size()) || seen[o])
      throw ShapeMismatch("Pipe::perm: not a permutation");
    seen[o] = true;
  }
  auto dims = dims_of(factors_);
  std::vector<Space> new_factors;
  new_factors.reserve(order.size());
  for (int o : order) new_factors.push_back(factors_[o]);

  // Strides of old factors, and of new positions.
  const std::size_t n = factors_.size();
  std::vector<long long> old_stride(n, 1);
  for (std::size_t i = n; i-- > 1;) old_stride[i - 1] = old_stride[i] * dims[i];
  std::vector<int> new_dims = dims_of(new_factors);
  std::vector<long long> new_stride(n, 1);
  for (std::size_t i = n; i-- > 1;) new_stride[i - 1] = new_stride[i] * new_dims[i];

  LinMap next(tensor_all(new_factors, cur_.field()), cur_.domain());
  const long long total = cur_.rows();
  std::vector<int> idx(n, 0);
  for (long long row = 0; row < total; ++row) {
    long long rest = row;
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = static_cast<int>(rest / old_stride[i]);
      rest %= old_stride[i];
    }
    long long dst = 0;
    for (std::size_t i = 0; i < n; ++i) dst += new_stride[i] * idx[order[i]];
    for (int j = 0; j < cur_.cols(); ++j) {
      const Scalar& v = cur_.at(static_cast<int>(row), j);
      if (!fis_zero(v)) next.set(static_cast<int>(dst), j, v);
    }
  }
  factors_ = std::move(new_factors);
  cur_ = std::move(next);
  return *this;
}

LinMap permute_factors(const std::vector<Space>& factors, const std::vector<int>& order) {
  if (factors.empty()) throw Error("permute_factors: empty factor list");
  Pipe p(tensor_all(factors, factors.front().field), factors);
  p.perm(order);
  return p.done();
}

}  // namespace cotwist
