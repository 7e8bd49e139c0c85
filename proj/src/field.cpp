#include "cotwist/field.hpp"

#include <cctype>

namespace cotwist {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

mpz_class mod_p(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw Error("field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec{p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic);
}

Scalar fnorm(const FieldSpec& f, const Scalar& x) {
  if (f.is_rational()) {
    Scalar r = x;
    r.canonicalize();
    return r;
  }
  const std::uint32_t p = f.characteristic;
  mpz_class den = mod_p(x.get_den(), p);
  if (den == 0) throw Error("denominator vanishes in F" + std::to_string(p));
  mpz_class num = mod_p(x.get_num(), p);
  mpz_class den_inv;
  mpz_class pz(p);
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw Error("denominator not invertible in F" + std::to_string(p));
  return Scalar(mod_p(num * den_inv, p));
}

Scalar fadd(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  if (f.is_rational()) return a + b;
  return Scalar(mod_p(a.get_num() + b.get_num(), f.characteristic));
}

Scalar fsub(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  if (f.is_rational()) return a - b;
  return Scalar(mod_p(a.get_num() - b.get_num(), f.characteristic));
}

Scalar fmul(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  if (f.is_rational()) return a * b;
  return Scalar(mod_p(a.get_num() * b.get_num(), f.characteristic));
}

Scalar fneg(const FieldSpec& f, const Scalar& a) {
  if (f.is_rational()) return -a;
  return Scalar(mod_p(-a.get_num(), f.characteristic));
}

Scalar finv(const FieldSpec& f, const Scalar& a) {
  if (fis_zero(a)) throw NotInvertible("division by zero");
  if (f.is_rational()) return Scalar(1) / a;
  mpz_class inv;
  mpz_class pz(f.characteristic);
  mpz_class num = mod_p(a.get_num(), f.characteristic);
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw NotInvertible("not invertible mod " + std::to_string(f.characteristic));
  return Scalar(inv);
}

Scalar fdiv(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  return fmul(f, a, finv(f, b));
}

Scalar scalar_one() { return Scalar(1); }
Scalar scalar_zero() { return Scalar(0); }
Scalar scalar_int(long v) { return Scalar(v); }

Scalar parse_scalar(const FieldSpec& f, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  // "r mod p" form (prime fields only)
  auto mod_pos = s.find("mod");
  if (mod_pos != std::string::npos) {
    if (f.is_rational())
      throw Error("'mod' scalar \"" + text + "\" in a rational-field document");
    std::string lhs = s.substr(0, mod_pos);
    std::string rhs = s.substr(mod_pos + 3);
    if (rhs != std::to_string(f.characteristic))
      throw Error("scalar \"" + text + "\" has modulus mismatching field " + f.str());
    s = lhs;
  }

  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body = body.substr(1);
  auto slash = body.find('/');
  bool ok = slash == std::string::npos
                ? digits(body)
                : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw Error("cannot parse scalar \"" + text + "\"");

  Scalar q;
  if (q.set_str(s, 10) != 0) throw Error("cannot parse scalar \"" + text + "\"");
  if (q.get_den() == 0) throw Error("zero denominator in scalar \"" + text + "\"");
  q.canonicalize();
  return fnorm(f, q);
}

std::string scalar_str(const Scalar& a) { return a.get_str(); }

}  // namespace cotwist
