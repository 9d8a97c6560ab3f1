#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace tensorbrick {

// Exact rational number. Values whose reduced numerator and denominator fit in
// 64 bits are stored inline; anything larger spills into a shared, immutable
// GMP rational. A spilled value never fits inline, so representations are
// canonical and equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : num_(value) {}           // NOLINT(google-explicit-constructor)

  static Scalar fraction(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const mpq_class& value);
  // Accepts "7", "-3", "22/7".
  static Scalar parse(const std::string& text);

  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Only meaningful for small values.
  std::int64_t small_numerator() const { return num_; }
  std::int64_t small_denominator() const { return den_; }

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  static Scalar from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace tensorbrick
