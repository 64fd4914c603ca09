#include "twistkit/rational.hpp"

#include <limits>

namespace twistkit {

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw InvariantError("Rational: zero denominator");
  normalize();
}

std::int64_t Rational::checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw InvariantError("Rational: 64-bit overflow");
  }
  return static_cast<std::int64_t>(v);
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked(-static_cast<__int128>(num_));
    den_ = checked(-static_cast<__int128>(den_));
  }
  if (den_ == 1) return;
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked(static_cast<__int128>(num_) + o.num_);
    return *this;
  }
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  // reduce in 128 bits before narrowing
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  num_ = checked(n);
  den_ = checked(d);
  if (num_ == 0) den_ = 1;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked(static_cast<__int128>(num_) * o.num_);
    return *this;
  }
  std::int64_t g1 = std::gcd(num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  num_ = checked(static_cast<__int128>(num_ / g1) * (o.num_ / g2));
  den_ = checked(static_cast<__int128>(den_ / g2) * (o.den_ / g1));
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvariantError("Rational: division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this *= inv;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace twistkit
