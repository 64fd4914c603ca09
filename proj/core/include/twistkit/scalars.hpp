#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "twistkit/rational.hpp"

namespace twistkit {

namespace detail {
struct FieldData;
const FieldData* field(std::int64_t m);
}  // namespace detail

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Least non-negative residue of a mod m (m > 0).
std::int64_t mod64(std::int64_t a, std::int64_t m);

/// An element of Q/Z, read as the root of unity e^{2 pi i q}.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// Represents num/den reduced into [0, 1).
  RootOfUnity(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  /// Order of the root of unity (denominator of the reduced exponent).
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  /// Exponent numerator when written over modulus m; order() must divide m.
  std::int64_t over(std::int64_t m) const;

  std::string str() const;
  static RootOfUnity parse(const std::string& text);

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

RootOfUnity rou_mul(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity rou_inv(const RootOfUnity& a);
RootOfUnity rou_pow(const RootOfUnity& a, std::int64_t k);

/// Element of the cyclotomic field Q(zeta_m), stored in the power basis
/// 1, z, ..., z^{phi(m)-1} modulo the m-th cyclotomic polynomial.
class Cyclotomic {
 public:
  /// Zero with conductor 1.
  Cyclotomic();
  /// Rational constant with conductor m.
  explicit Cyclotomic(const Rational& r, std::int64_t m = 1);

  static Cyclotomic zeta(std::int64_t m, std::int64_t k = 1);
  static Cyclotomic from_coefficients(std::int64_t m, std::vector<Rational> coeffs);
  /// Arbitrary (not reduced) coefficient vector indexed by powers of zeta_m.
  static Cyclotomic from_powers(std::int64_t m, const std::vector<Rational>& by_power);

  std::int64_t conductor() const { return m_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational rational() const;

  /// Same number written over conductor L (a multiple of conductor()).
  Cyclotomic lift(std::int64_t L) const;

  Cyclotomic conj() const;
  /// Apply the Galois automorphism zeta -> zeta^k (gcd(k, m) = 1).
  Cyclotomic galois(std::int64_t k) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic operator-() const;
  /// Multiply by zeta_M^k where M is a multiple of or equal to the conductor.
  Cyclotomic times_root(const RootOfUnity& r) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// If this equals r * zeta for a positive rational r and root of unity zeta,
  /// return zeta via out. Used for twists and degree-normalized values.
  bool as_scaled_root(const Rational& scale, RootOfUnity* out) const;

  std::size_t hash() const;
  /// Display only; never used in a decision.
  std::complex<double> approx() const;
  std::string str() const;

 private:
  Cyclotomic(const detail::FieldData* f, std::vector<Rational> c);
  void to_conductor(std::int64_t L);

  std::int64_t m_ = 1;
  const detail::FieldData* f_ = nullptr;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_conj(const Cyclotomic& a);
bool cyc_eq(const Cyclotomic& a, const Cyclotomic& b);
/// Embed a root of unity into Q(zeta_m); throws PreconditionError if its order does not divide m.
Cyclotomic rou_to_cyc(const RootOfUnity& r, std::int64_t m);

/// Euler's totient.
std::int64_t euler_phi(std::int64_t m);
/// Coefficients (low degree first) of the m-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

}  // namespace twistkit
