#include "tensorbrick/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace tensorbrick {
namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? 0 - std::uint64_t(a) : std::uint64_t(a);
  std::uint64_t y = b < 0 ? 0 - std::uint64_t(b) : std::uint64_t(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return std::int64_t(x);
}

bool fits64(__int128 v) {
  return v >= __int128(std::numeric_limits<std::int64_t>::min()) &&
         v <= __int128(std::numeric_limits<std::int64_t>::max());
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool mpz_fits_i64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62 || z.fits_slong_p();
}

}  // namespace

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  return from_wide(num, den);
}

Scalar Scalar::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Scalar();
  u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= __int128(g);
    den /= __int128(g);
  }
  if (fits64(num) && fits64(den)) {
    Scalar s;
    s.num_ = std::int64_t(num);
    s.den_ = std::int64_t(den);
    return s;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && mpz_fits_i64(n) && mpz_fits_i64(d)) {
    Scalar s;
    s.num_ = n.get_si();
    s.den_ = d.get_si();
    return s;
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed number '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return from_mpq(q);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Scalar::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Scalar(r);
    }
    return Scalar::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                             __int128(a.den_) * b.den_);
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(a.num_, b.num_, &r)) return Scalar(r);
    }
    return Scalar::from_wide(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                             __int128(a.den_) * b.den_);
  }
  return Scalar::from_mpq(a.to_mpq() - b.to_mpq());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
        !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d)) {
      Scalar s;
      s.num_ = n;
      s.den_ = d;
      return s;
    }
    return Scalar::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (!a.big_ && !b.big_) {
    return Scalar::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  return Scalar::from_mpq(a.to_mpq() / b.to_mpq());
}

Scalar Scalar::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Scalar s;
    s.num_ = -num_;
    s.den_ = den_;
    return s;
  }
  return from_mpq(-to_mpq());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

}  // namespace tensorbrick
