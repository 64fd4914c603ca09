#include "twistkit/scalars.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace twistkit {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l < 0) l = -l;
  if (l > INT64_MAX) throw BoundError("lcm overflows 64 bits");
  return static_cast<std::int64_t>(l);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvariantError("RootOfUnity: denominator must be positive");
  num = mod64(num, den);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

std::int64_t RootOfUnity::over(std::int64_t m) const {
  if (m % den_ != 0) {
    throw PreconditionError("RootOfUnity " + str() + " does not have order dividing " + std::to_string(m));
  }
  return num_ * (m / den_);
}

std::string RootOfUnity::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

RootOfUnity RootOfUnity::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("bad root of unity: " + text);
      return RootOfUnity(n, 1);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw ParseError("bad root of unity: " + text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size() || d <= 0) throw ParseError("bad root of unity: " + text);
    return RootOfUnity(n, d);
  } catch (const std::logic_error&) {
    throw ParseError("bad root of unity: " + text);
  }
}

bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

RootOfUnity rou_mul(const RootOfUnity& a, const RootOfUnity& b) {
  std::int64_t L = lcm64(a.order(), b.order());
  return RootOfUnity(a.over(L) + b.over(L), L);
}

RootOfUnity rou_inv(const RootOfUnity& a) { return RootOfUnity(-a.num(), a.order()); }

RootOfUnity rou_pow(const RootOfUnity& a, std::int64_t k) {
  __int128 n = static_cast<__int128>(a.num()) * mod64(k, a.order());
  return RootOfUnity(static_cast<std::int64_t>(n % a.order()), a.order());
}

// ---------------------------------------------------------------- field data

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t r = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

std::mutex g_poly_mutex;
std::map<std::int64_t, std::vector<std::int64_t>> g_polys;

std::vector<std::int64_t> compute_cyclotomic(std::int64_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      std::int64_t c = num[i];
      q[i - dd] = c;
      if (c != 0) {
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      }
      if (i == dd) break;
    }
    num = q;
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw PreconditionError("cyclotomic polynomial of non-positive index");
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_polys.find(m);
    if (it != g_polys.end()) return it->second;
  }
  std::vector<std::int64_t> p;
  if (m == 1) {
    p = {-1, 1};
  } else {
    p = compute_cyclotomic(m);
  }
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return g_polys.emplace(m, std::move(p)).first->second;
}

namespace detail {

struct FieldData {
  std::int64_t m = 1;
  std::int64_t phi = 1;
  // red[k] = coefficients of x^k mod Phi_m for 0 <= k < m
  std::vector<std::vector<std::int64_t>> red;
};

namespace {

std::shared_mutex g_field_mutex;
std::unordered_map<std::int64_t, std::unique_ptr<FieldData>> g_fields;

std::unique_ptr<FieldData> build_field(std::int64_t m) {
  auto f = std::make_unique<FieldData>();
  f->m = m;
  f->phi = euler_phi(m);
  const auto& poly = cyclotomic_polynomial(m);
  std::int64_t phi = f->phi;
  f->red.assign(m, std::vector<std::int64_t>(phi, 0));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < m; ++k) {
    f->red[k] = cur;
    // multiply by x and reduce
    std::int64_t top = cur[phi - 1];
    for (std::int64_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::int64_t i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
  }
  return f;
}

}  // namespace

const FieldData* field(std::int64_t m) {
  if (m < 1) throw PreconditionError("conductor must be positive");
  {
    std::shared_lock<std::shared_mutex> lock(g_field_mutex);
    auto it = g_fields.find(m);
    if (it != g_fields.end()) return it->second.get();
  }
  auto built = build_field(m);
  std::unique_lock<std::shared_mutex> lock(g_field_mutex);
  auto it = g_fields.find(m);
  if (it != g_fields.end()) return it->second.get();
  return g_fields.emplace(m, std::move(built)).first->second.get();
}

}  // namespace detail

// ---------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic() : m_(1), f_(detail::field(1)), c_(1) {}

Cyclotomic::Cyclotomic(const detail::FieldData* f, std::vector<Rational> c)
    : m_(f->m), f_(f), c_(std::move(c)) {}

Cyclotomic::Cyclotomic(const Rational& r, std::int64_t m) : m_(m), f_(detail::field(m)) {
  c_.assign(f_->phi, Rational());
  c_[0] = r;
}

Cyclotomic Cyclotomic::zeta(std::int64_t m, std::int64_t k) {
  const auto* f = detail::field(m);
  const auto& row = f->red[mod64(k, m)];
  std::vector<Rational> c(row.begin(), row.end());
  return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::from_coefficients(std::int64_t m, std::vector<Rational> coeffs) {
  const auto* f = detail::field(m);
  if (static_cast<std::int64_t>(coeffs.size()) != f->phi) {
    throw PreconditionError("cyclotomic coefficient vector has wrong length");
  }
  return Cyclotomic(f, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_powers(std::int64_t m, const std::vector<Rational>& by_power) {
  const auto* f = detail::field(m);
  std::vector<Rational> c(f->phi);
  for (std::size_t k = 0; k < by_power.size(); ++k) {
    if (by_power[k].is_zero()) continue;
    const auto& row = f->red[k % m];
    for (std::int64_t i = 0; i < f->phi; ++i) {
      if (row[i] != 0) c[i] += by_power[k] * Rational(row[i]);
    }
  }
  return Cyclotomic(f, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw PreconditionError("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::lift(std::int64_t L) const {
  if (L == m_) return *this;
  if (L % m_ != 0) throw PreconditionError("lift target is not a multiple of the conductor");
  const auto* f = detail::field(L);
  std::int64_t step = L / m_;
  std::vector<Rational> c(f->phi);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& row = f->red[static_cast<std::int64_t>(k) * step];
    for (std::int64_t i = 0; i < f->phi; ++i) {
      if (row[i] != 0) c[i] += c_[k] * Rational(row[i]);
    }
  }
  return Cyclotomic(f, std::move(c));
}

void Cyclotomic::to_conductor(std::int64_t L) {
  if (L != m_) *this = lift(L);
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(mod64(k, m_), m_) != 1 && m_ > 1) throw PreconditionError("galois exponent not a unit");
  if (m_ <= 2) return *this;
  std::vector<Rational> c(f_->phi);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& row = f_->red[mod64(static_cast<std::int64_t>(j) * k, m_)];
    for (std::int64_t i = 0; i < f_->phi; ++i) {
      if (row[i] != 0) c[i] += c_[j] * Rational(row[i]);
    }
  }
  return Cyclotomic(f_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  std::int64_t L = lcm64(m_, o.m_);
  to_conductor(L);
  if (o.m_ == L) return *this += o;
  return *this += o.lift(L);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    std::int64_t L = lcm64(m_, o.m_);
    to_conductor(L);
    if (o.m_ != L) return *this *= o.lift(L);
  }
  const std::int64_t phi = f_->phi;
  if (phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  bool integral = true;
  for (std::int64_t i = 0; i < phi && integral; ++i) {
    integral = c_[i].is_integer() && o.c_[i].is_integer();
  }
  if (integral) {
    std::vector<__int128> conv(2 * phi - 1, 0);
    for (std::int64_t i = 0; i < phi; ++i) {
      std::int64_t a = c_[i].num();
      if (a == 0) continue;
      for (std::int64_t j = 0; j < phi; ++j) {
        conv[i + j] += static_cast<__int128>(a) * o.c_[j].num();
      }
    }
    for (std::int64_t k = 2 * phi - 2; k >= phi; --k) {
      if (conv[k] == 0) continue;
      const auto& row = f_->red[k % m_];
      for (std::int64_t i = 0; i < phi; ++i) conv[i] += conv[k] * row[i];
    }
    for (std::int64_t i = 0; i < phi; ++i) {
      if (conv[i] > INT64_MAX || conv[i] < INT64_MIN) throw InvariantError("Cyclotomic: 64-bit overflow");
      c_[i] = Rational(static_cast<std::int64_t>(conv[i]));
    }
    return *this;
  }
  std::vector<Rational> conv(2 * phi - 1);
  for (std::int64_t i = 0; i < phi; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::int64_t j = 0; j < phi; ++j) {
      if (!o.c_[j].is_zero()) conv[i + j] += c_[i] * o.c_[j];
    }
  }
  for (std::int64_t k = 2 * phi - 2; k >= phi; --k) {
    if (conv[k].is_zero()) continue;
    const auto& row = f_->red[k % m_];
    for (std::int64_t i = 0; i < phi; ++i) {
      if (row[i] != 0) conv[i] += conv[k] * Rational(row[i]);
    }
  }
  for (std::int64_t i = 0; i < phi; ++i) c_[i] = conv[i];
  return *this;
}

Cyclotomic Cyclotomic::times_root(const RootOfUnity& r) const {
  if (r.is_one()) return *this;
  if (m_ % r.order() != 0) return lift(lcm64(m_, r.order())).times_root(r);
  std::int64_t shift = r.over(m_);
  const std::int64_t phi = f_->phi;
  std::vector<Rational> c(phi);
  for (std::int64_t j = 0; j < phi; ++j) {
    if (c_[j].is_zero()) continue;
    const auto& row = f_->red[(j + shift) % m_];
    for (std::int64_t i = 0; i < phi; ++i) {
      if (row[i] != 0) c[i] += c_[j] * Rational(row[i]);
    }
  }
  return Cyclotomic(f_, std::move(c));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  std::int64_t L = lcm64(a.m_, b.m_);
  return a.lift(L).c_ == b.lift(L).c_;
}

bool Cyclotomic::as_scaled_root(const Rational& scale, RootOfUnity* out) const {
  // roots of unity in Q(zeta_m) have order dividing lcm(2, m)
  std::int64_t M = lcm64(2, m_);
  const Cyclotomic v = lift(M);
  for (std::int64_t k = 0; k < M; ++k) {
    const auto& row = v.f_->red[k];
    bool match = true;
    for (std::int64_t i = 0; i < v.f_->phi && match; ++i) {
      match = v.c_[i] == scale * Rational(row[i]);
    }
    if (match) {
      if (out != nullptr) *out = RootOfUnity(k, M);
      return true;
    }
  }
  return false;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(m_);
  for (const auto& x : c_) h = h * 1099511628211ull ^ std::hash<Rational>{}(x);
  return h;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> s = 0;
  const double two_pi = 6.283185307179586476925286766559;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    double v = static_cast<double>(c_[k].num()) / static_cast<double>(c_[k].den());
    double ang = two_pi * static_cast<double>(k) / static_cast<double>(m_);
    s += std::polar(v, ang);
  }
  return s;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k] << "*z^" << k;
  }
  if (first) os << "0";
  os << " (" << m_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
Cyclotomic cyc_conj(const Cyclotomic& a) { return a.conj(); }
bool cyc_eq(const Cyclotomic& a, const Cyclotomic& b) { return a == b; }

Cyclotomic rou_to_cyc(const RootOfUnity& r, std::int64_t m) {
  return Cyclotomic::zeta(m, r.over(m));
}

}  // namespace twistkit
