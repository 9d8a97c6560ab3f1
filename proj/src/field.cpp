#include "tensorbrick/field.hpp"

#include <cctype>
#include <stdexcept>

namespace tensorbrick {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime field modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("GF(" + std::to_string(p) + "): modulus is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    const std::string digits = text.substr(3, text.size() - 4);
    if (digits.empty() || digits.size() > 10) throw std::invalid_argument("bad field '" + text + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad field '" + text + "'");
    }
    std::uint64_t p = std::stoull(digits);
    if (p >= (1ull << 31)) throw std::invalid_argument("prime field modulus must be below 2^31");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or GF(p))");
}

std::string Field::name() const {
  if (kind_ == Kind::Rational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar Field::from_rational(const Scalar& q) const {
  if (kind_ == Kind::Rational) return q;
  mpq_class v = q.to_mpq();
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = v.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = v.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (num * inv) % pz;
  return Scalar(static_cast<std::int64_t>(r.get_si()));
}

bool Field::is_canonical(const Scalar& x) const {
  if (kind_ == Kind::Rational) return true;
  return x.is_small() && x.is_integer() && x.small_numerator() >= 0 && x.small_numerator() < std::int64_t(p_);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::Rational) return Scalar(1) / a;
  // extended Euclid on residues
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.small_numerator();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Scalar(t);
}

}  // namespace tensorbrick
