#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cotwist/errors.hpp"

namespace cotwist {

/// Exact scalar. Over the rationals this is a reduced fraction; over a prime
/// field it is the canonical residue 0..p-1 stored with denominator 1.
using Scalar = mpq_class;

/// Ground field: the rationals (characteristic 0) or F_p for a prime p < 2^31.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec&) const = default;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);

  std::string str() const;
};

/// Canonical form of an arbitrary rational in this field. For F_p this reduces
/// num * den^-1 mod p and throws if the denominator vanishes mod p.
Scalar fnorm(const FieldSpec& f, const Scalar& x);

Scalar fadd(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar fsub(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar fmul(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar fneg(const FieldSpec& f, const Scalar& a);
Scalar finv(const FieldSpec& f, const Scalar& a);  // throws NotInvertible on 0
Scalar fdiv(const FieldSpec& f, const Scalar& a, const Scalar& b);

inline bool fis_zero(const Scalar& a) { return sgn(a) == 0; }

Scalar scalar_one();
Scalar scalar_zero();
Scalar scalar_int(long v);

/// Parses "3", "-1/2" or (prime fields only) "4 mod 5".
Scalar parse_scalar(const FieldSpec& f, const std::string& text);
std::string scalar_str(const Scalar& a);

}  // namespace cotwist
