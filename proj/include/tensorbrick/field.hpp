#pragma once

#include <cstdint>
#include <string>

#include "tensorbrick/scalar.hpp"

namespace tensorbrick {

// Ground field: the rationals or a prime field GF(p) with p < 2^31.
// Elements of GF(p) are stored as Scalars holding the least nonnegative residue.
class Field {
 public:
  enum class Kind { Rational, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // "Q" or "GF(p)".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }  // 0 for Q
  std::string name() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }

  // Canonical image of an arbitrary rational (fails if the denominator vanishes mod p).
  Scalar from_rational(const Scalar& q) const;
  Scalar from_int(std::int64_t v) const { return from_rational(Scalar(v)); }
  Scalar parse_element(const std::string& text) const { return from_rational(Scalar::parse(text)); }
  bool is_canonical(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rational) return a + b;
    std::int64_t r = a.small_numerator() + b.small_numerator();
    return Scalar(r >= std::int64_t(p_) ? r - p_ : r);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rational) return a - b;
    std::int64_t r = a.small_numerator() - b.small_numerator();
    return Scalar(r < 0 ? r + p_ : r);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rational) return a * b;
    return Scalar(std::int64_t((__int128(a.small_numerator()) * b.small_numerator()) % p_));
  }
  Scalar neg(const Scalar& a) const {
    if (kind_ == Kind::Rational) return -a;
    return a.is_zero() ? a : Scalar(std::int64_t(p_) - a.small_numerator());
  }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // a - f*b, the elimination step.
  Scalar sub_mul(const Scalar& a, const Scalar& f, const Scalar& b) const { return sub(a, mul(f, b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace tensorbrick
