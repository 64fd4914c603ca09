#include "twistkit/cohomology.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "twistkit/error.hpp"
#include "twistkit/modlinalg.hpp"

namespace twistkit {

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(int degree, int n, std::int64_t modulus) : degree_(degree), n_(n), M_(modulus) {
  if (degree < 1 || degree > 3 || n < 1 || modulus < 1) throw PreconditionError("Cochain: bad shape");
}

bool Cochain::is_zero() const {
  for (auto v : v_) {
    if (v != 0) return false;
  }
  return true;
}

void Cochain::materialize() {
  if (!v_.empty()) return;
  std::size_t sz = 1;
  for (int i = 0; i < degree_; ++i) sz *= static_cast<std::size_t>(n_);
  v_.assign(sz, 0);
}

void Cochain::set(int a, std::int64_t v) {
  materialize();
  v_[a] = mod64(v, M_);
}

void Cochain::set(int a, int b, std::int64_t v) {
  materialize();
  v_[static_cast<std::size_t>(a) * n_ + b] = mod64(v, M_);
}

void Cochain::set(int a, int b, int c, std::int64_t v) {
  materialize();
  v_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] = mod64(v, M_);
}

Cochain Cochain::lifted(std::int64_t L) const {
  if (L % M_ != 0) throw PreconditionError("Cochain::lifted: modulus does not divide target");
  Cochain out = *this;
  out.M_ = L;
  std::int64_t f = L / M_;
  for (auto& v : out.v_) v *= f;
  return out;
}

Cochain Cochain::reduced() const {
  std::int64_t g = M_;
  for (auto v : v_) g = gcd64(g, v);
  Cochain out = *this;
  if (g == M_) {
    out.M_ = 1;
    out.v_.clear();
    return out;
  }
  out.M_ = M_ / g;
  for (auto& v : out.v_) v /= g;
  return out;
}

namespace {

void check_shape(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || a.group_order() != b.group_order()) {
    throw PreconditionError("cochain shapes differ");
  }
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree_ == 0) return b;
  if (b.degree_ == 0) return a;
  check_shape(a, b);
  if (b.v_.empty()) return a;
  if (a.v_.empty()) return b;
  std::int64_t L = lcm64(a.M_, b.M_);
  Cochain x = a.lifted(L), y = b.lifted(L);
  for (std::size_t i = 0; i < x.v_.size(); ++i) x.v_[i] = mod64(x.v_[i] + y.v_[i], L);
  return x;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.v_) v = mod64(-v, M_);
  return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.degree_ == 0 || b.degree_ == 0) return a.is_zero() && b.is_zero();
  check_shape(a, b);
  Cochain x = a.reduced(), y = b.reduced();
  if (x.v_.empty() || y.v_.empty()) return x.v_.empty() && y.v_.empty();
  return x.M_ == y.M_ && x.v_ == y.v_;
}

bool equal_on(const Cochain& a, const Cochain& b, const Subgroup& H) {
  check_shape(a, b);
  std::int64_t L = lcm64(a.modulus(), b.modulus());
  std::int64_t fa = L / a.modulus(), fb = L / b.modulus();
  const auto& E = H.elements;
  auto same = [&](std::int64_t x, std::int64_t y) { return mod64(x * fa - y * fb, L) == 0; };
  switch (a.degree()) {
    case 1:
      for (int h : E) {
        if (!same(a.num(h), b.num(h))) return false;
      }
      return true;
    case 2:
      for (int h1 : E) {
        for (int h2 : E) {
          if (!same(a.num(h1, h2), b.num(h1, h2))) return false;
        }
      }
      return true;
    default:
      for (int h1 : E) {
        for (int h2 : E) {
          for (int h3 : E) {
            if (!same(a.num(h1, h2, h3), b.num(h1, h2, h3))) return false;
          }
        }
      }
      return true;
  }
}

// ---------------------------------------------------------------- coboundaries

Cochain coboundary1(const FiniteGroup& G, const Cochain& eta) {
  const int n = G.order();
  Cochain out(2, n, eta.modulus());
  if (eta.is_zero()) return out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.set(a, b, eta.num(a) + eta.num(b) - eta.num(G.mul(a, b)));
  }
  return out;
}

Cochain coboundary2(const FiniteGroup& G, const Cochain& mu) {
  const int n = G.order();
  Cochain out(3, n, mu.modulus());
  if (mu.is_zero()) return out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = G.mul(a, b);
      for (int c = 0; c < n; ++c) {
        out.set(a, b, c, mu.num(b, c) - mu.num(ab, c) + mu.num(a, G.mul(b, c)) - mu.num(a, b));
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> pentagon_failure(const FiniteGroup& G, const Cochain& w) {
  if (w.is_zero()) return std::nullopt;
  const int n = G.order();
  const std::int64_t M = w.modulus();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = G.mul(a, b);
      for (int c = 0; c < n; ++c) {
        int bc = G.mul(b, c);
        std::int64_t wabc = w.num(a, b, c);
        for (int d = 0; d < n; ++d) {
          std::int64_t lhs = w.num(b, c, d) + w.num(a, bc, d) + wabc;
          std::int64_t rhs = w.num(ab, c, d) + w.num(a, b, G.mul(c, d));
          if ((lhs - rhs) % M != 0) return std::vector<int>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

bool satisfies_pentagon(const FiniteGroup& G, const Cochain& omega) { return !pentagon_failure(G, omega); }

bool is_3cocycle(const FiniteGroup& G, const Cochain& omega) {
  if (omega.degree() != 3 || omega.group_order() != G.order()) return false;
  for (int g = 0; g < G.order(); ++g) {
    for (int l = 0; l < G.order(); ++l) {
      if (omega.num(g, 0, l) != 0) return false;
    }
  }
  return satisfies_pentagon(G, omega);
}

NormalizedCocycle normalize_cocycle(const FiniteGroup& G, const Cochain& omega) {
  if (!satisfies_pentagon(G, omega)) throw PreconditionError("not a 3-cocycle");
  const int n = G.order();
  Cochain phi(2, n, omega.modulus());
  bool any = false;
  for (int l = 1; l < n; ++l) {
    if (omega.num(0, 0, l) != 0) {
      phi.set(0, l, omega.num(0, 0, l));
      any = true;
    }
  }
  for (int g = 1; g < n; ++g) {
    if (omega.num(g, 0, 0) != 0) {
      phi.set(g, 0, -omega.num(g, 0, 0));
      any = true;
    }
  }
  if (!any) return {omega, phi};
  Cochain w = omega - coboundary2(G, phi);
  for (int g = 0; g < n; ++g) {
    for (int l = 0; l < n; ++l) {
      if (w.num(g, 0, l) % w.modulus() != 0) throw InvariantError("normalization shift failed");
    }
  }
  return {w, phi};
}

Cochain standard_cocycle(const FiniteGroup& G, const Cochain& omega) {
  if (omega.degree() != 0 && omega.degree() != 3) throw PreconditionError("omega is not a 3-cochain");
  if (omega.is_zero()) return Cochain(3, G.order(), 1);
  if (omega.group_order() != G.order()) throw PreconditionError("omega is defined on a group of a different order");
  return normalize_cocycle(G, omega).omega.reduced();
}

Cochain cyclic_cocycle(int n, int k) {
  if (n < 1 || k < 0 || k >= n) throw PreconditionError("cyclic_cocycle: need 0 <= k < n");
  Cochain w(3, n, n);
  if (k == 0) return w;
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      for (int c = n - b; c < n; ++c) w.set(a, b, c, static_cast<std::int64_t>(k) * a);
    }
  }
  return w;
}

Cochain inflate(const FiniteGroup& G, const FiniteGroup& Q, const Cochain& omega0, const std::vector<int>& pi) {
  const int n = G.order();
  if (static_cast<int>(pi.size()) != n) throw PreconditionError("inflate: map has wrong size");
  std::vector<char> hit(Q.order(), 0);
  for (int x = 0; x < n; ++x) {
    hit[pi[x]] = 1;
    for (int y = 0; y < n; ++y) {
      if (pi[G.mul(x, y)] != Q.mul(pi[x], pi[y])) throw PreconditionError("inflate: map is not a homomorphism");
    }
  }
  for (char h : hit) {
    if (!h) throw PreconditionError("inflate: map is not surjective");
  }
  Cochain w(3, n, omega0.modulus());
  if (omega0.is_zero()) return w;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        std::int64_t v = omega0.num(pi[a], pi[b], pi[c]);
        if (v != 0) w.set(a, b, c, v);
      }
    }
  }
  return w;
}

AbelianCocycleBasis abelian_cocycle_basis(const FiniteGroup& G) {
  if (!G.is_abelian()) throw PreconditionError("abelian_cocycle_basis: group is not abelian");
  AbelianCocycleBasis B;
  B.structure = abelian_structure(G, whole_group(G));
  const auto& f = B.structure.factors;
  const int r = B.structure.rank();
  for (int i = 0; i < r; ++i) {
    B.ranges.push_back(f[i]);
    B.names.push_back("I(" + std::to_string(i) + ")");
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      B.ranges.push_back(gcd64(f[i], f[j]));
      B.names.push_back("II(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int k = j + 1; k < r; ++k) {
        B.ranges.push_back(gcd64(gcd64(f[i], f[j]), f[k]));
        B.names.push_back("III(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  return B;
}

Cochain abelian_cocycle(const FiniteGroup& G, const AbelianCocycleBasis& basis, const std::vector<std::int64_t>& params) {
  if (params.size() != basis.ranges.size()) throw PreconditionError("abelian_cocycle: wrong number of parameters");
  const auto& A = basis.structure;
  const auto& f = A.factors;
  const int r = A.rank(), n = G.order();
  std::int64_t M = 1;
  for (int x : f) M = lcm64(M, x);
  Cochain w(3, n, M);
  bool any = false;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] < 0 || params[i] >= basis.ranges[i]) throw PreconditionError("abelian_cocycle: parameter out of range");
    any = any || params[i] != 0;
  }
  if (!any) return w;
  for (int a = 0; a < n; ++a) {
    const auto& ca = A.coords[a];
    for (int b = 0; b < n; ++b) {
      const auto& cb = A.coords[b];
      for (int c = 0; c < n; ++c) {
        const auto& cc = A.coords[c];
        std::int64_t v = 0;  // numerator over M
        std::size_t p = 0;
        for (int i = 0; i < r; ++i, ++p) {
          if (params[p] != 0 && cb[i] + cc[i] >= f[i]) v += params[p] * ca[i] * (M / f[i]);
        }
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j < r; ++j, ++p) {
            if (params[p] != 0 && cb[j] + cc[j] >= f[j]) v += params[p] * ca[i] * (M / f[i]);
          }
        }
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j < r; ++j) {
            for (int k = j + 1; k < r; ++k, ++p) {
              if (params[p] != 0) v += params[p] * ca[i] * cb[j] * cc[k] * (M / basis.ranges[p]);
            }
          }
        }
        if (v % M != 0) w.set(a, b, c, v);
      }
    }
  }
  return w;
}

Cochain conjugate_cochain(const FiniteGroup& G, const Cochain& c, int x) {
  const int n = G.order();
  Cochain out(c.degree(), n, c.modulus());
  if (c.is_zero()) return out;
  std::vector<int> cj(n);
  for (int g = 0; g < n; ++g) cj[g] = G.conj(x, g);
  switch (c.degree()) {
    case 1:
      for (int a = 0; a < n; ++a) out.set(a, c.num(cj[a]));
      break;
    case 2:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out.set(a, b, c.num(cj[a], cj[b]));
      }
      break;
    default:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int d = 0; d < n; ++d) out.set(a, b, d, c.num(cj[a], cj[b], cj[d]));
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------- derived cochains

Cochain beta(const FiniteGroup& G, const Cochain& w, int a) {
  const int n = G.order();
  Cochain out(2, n, w.modulus());
  if (w.is_zero()) return out;
  for (int h = 0; h < n; ++h) {
    int hah = G.conj(G.inv(h), a);  // h^-1 a h
    for (int g = 0; g < n; ++g) {
      int hg = G.mul(h, g);
      int t = G.conj(G.inv(hg), a);
      out.set(h, g, w.num(a, h, g) - w.num(h, hah, g) + w.num(h, g, t));
    }
  }
  return out;
}

Cochain upsilon(const FiniteGroup& G, const Cochain& w, int x) {
  const int n = G.order();
  Cochain out(2, n, w.modulus());
  if (w.is_zero()) return out;
  for (int g1 = 0; g1 < n; ++g1) {
    int c1 = G.conj(x, g1);
    for (int g2 = 0; g2 < n; ++g2) {
      int c2 = G.conj(x, g2);
      out.set(g1, g2, w.num(c1, c2, x) + w.num(x, g1, g2) - w.num(c1, x, g2));
    }
  }
  return out;
}

Cochain nu_x(const FiniteGroup& G, const Cochain& w, int x) {
  const int n = G.order();
  Cochain out(2, n, w.modulus());
  if (w.is_zero()) return out;
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = 0; g2 < n; ++g2) {
      int g12 = G.mul(g1, g2);
      out.set(g1, g2, w.num(g1, g2, x) + w.num(G.conj(g12, x), g1, g2) - w.num(g1, G.conj(g2, x), g2));
    }
  }
  return out;
}

// ---------------------------------------------------------------- solvers

namespace {

std::int64_t subgroup_exponent(const FiniteGroup& G, const Subgroup& H) {
  if (!is_abelian(G, H)) return H.order();
  std::int64_t e = 1;
  for (int h : H.elements) e = lcm64(e, G.element_order(h));
  return e;
}

std::vector<int> local_index(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> loc(G.order(), -1);
  for (int i = 0; i < H.order(); ++i) loc[H.elements[i]] = i;
  return loc;
}

}  // namespace

MuSolution solve_mu(const FiniteGroup& G, const Cochain& w, const Subgroup& H) {
  const int n = G.order();
  MuSolution out;
  if (w.is_zero()) {
    out.cls = OmegaClass{H, Cochain(2, n, 1)};
    return out;
  }
  for (int g : H.elements) {
    for (int l : H.elements) {
      if (w.num(g, 0, l) != 0) throw PreconditionError("solve_mu: omega is not normalized");
    }
  }
  const int k = H.order();
  const std::int64_t e = subgroup_exponent(G, H);
  const std::int64_t N = w.modulus() * e;
  auto loc = local_index(G, H);
  auto var = [&](int a, int b) { return (loc[a] - 1) * (k - 1) + (loc[b] - 1); };
  ModularSystem sys((k - 1) * (k - 1), N);
  std::vector<std::pair<int, std::int64_t>> terms;
  for (int h1 : H.elements) {
    if (h1 == 0) continue;
    for (int h2 : H.elements) {
      if (h2 == 0) continue;
      int h12 = G.mul(h1, h2);
      for (int h3 : H.elements) {
        if (h3 == 0) continue;
        int h23 = G.mul(h2, h3);
        terms.clear();
        terms.push_back({var(h2, h3), 1});
        if (h12 != 0) terms.push_back({var(h12, h3), -1});
        if (h23 != 0) terms.push_back({var(h1, h23), 1});
        terms.push_back({var(h1, h2), -1});
        sys.add(terms, w.num(h1, h2, h3) * e);
        if (!sys.consistent()) {
          out.certificate = "omega restricted to H is not a coboundary over Z/" + std::to_string(N) + ": " +
                            sys.certificate() + " at (" + G.name(h1) + ", " + G.name(h2) + ", " + G.name(h3) + ")";
          return out;
        }
      }
    }
  }
  auto x = sys.solve();
  Cochain mu(2, n, N);
  for (int h1 : H.elements) {
    if (h1 == 0) continue;
    for (int h2 : H.elements) {
      if (h2 == 0) continue;
      mu.set(h1, h2, (*x)[var(h1, h2)]);
    }
  }
  mu = mu.reduced();
  if (!equal_on(coboundary2(G, mu), w, H)) throw InvariantError("solve_mu: solution does not satisfy d mu = omega");
  out.cls = OmegaClass{H, mu};
  return out;
}

std::optional<Cochain> solve_coboundary1(const FiniteGroup& G, const Subgroup& H, const Cochain& target) {
  const int n = G.order();
  bool zero = true;
  for (int h1 : H.elements) {
    for (int h2 : H.elements) zero = zero && target.num(h1, h2) % target.modulus() == 0;
  }
  if (zero) return Cochain(1, n, 1);
  const int k = H.order();
  const std::int64_t e = subgroup_exponent(G, H);
  const std::int64_t N = target.modulus() * e;
  auto loc = local_index(G, H);
  ModularSystem sys(k - 1, N);
  std::vector<std::pair<int, std::int64_t>> terms;
  for (int h1 : H.elements) {
    for (int h2 : H.elements) {
      int h12 = G.mul(h1, h2);
      terms.clear();
      if (h1 != 0) terms.push_back({loc[h1] - 1, 1});
      if (h2 != 0) terms.push_back({loc[h2] - 1, 1});
      if (h12 != 0) terms.push_back({loc[h12] - 1, -1});
      sys.add(terms, target.num(h1, h2) * e);
      if (!sys.consistent()) return std::nullopt;
    }
  }
  auto x = sys.solve();
  Cochain eta(1, n, N);
  for (int h : H.elements) {
    if (h != 0) eta.set(h, (*x)[loc[h] - 1]);
  }
  if (!equal_on(coboundary1(G, eta), target, H)) throw InvariantError("solve_coboundary1: bad solution");
  return eta.reduced();
}

std::vector<Cochain> alternating_forms(const FiniteGroup& G, const AbelianGroupData& A) {
  const int r = A.rank(), n = G.order();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::int64_t> gs;
  std::int64_t M = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      pairs.push_back({i, j});
      gs.push_back(gcd64(A.factors[i], A.factors[j]));
      M = lcm64(M, gs.back());
    }
  }
  std::int64_t total = 1;
  for (auto g : gs) total *= g;
  std::vector<int> H;
  for (int g = 0; g < n; ++g) {
    if (A.index[g] >= 0) H.push_back(g);
  }
  std::vector<Cochain> out;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> c(pairs.size());
    std::int64_t t = idx;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      c[p] = t % gs[p];
      t /= gs[p];
    }
    Cochain B(2, n, M);
    if (idx != 0) {
      for (int x : H) {
        const auto& cx = A.coords[x];
        for (int y : H) {
          const auto& cy = A.coords[y];
          std::int64_t v = 0;
          for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (c[p] == 0) continue;
            auto [i, j] = pairs[p];
            v += c[p] * (static_cast<std::int64_t>(cx[i]) * cy[j] - static_cast<std::int64_t>(cx[j]) * cy[i]) * (M / gs[p]);
          }
          if (v % M != 0) B.set(x, y, v);
        }
      }
    }
    out.push_back(std::move(B));
  }
  return out;
}

Cochain alt_inverse(const FiniteGroup& G, const AbelianGroupData& A, const Cochain& B) {
  const int r = A.rank(), n = G.order();
  Cochain mu(2, n, B.modulus());
  if (B.is_zero()) return mu;
  std::vector<int> H;
  for (int g = 0; g < n; ++g) {
    if (A.index[g] >= 0) H.push_back(g);
  }
  for (int x : H) {
    const auto& cx = A.coords[x];
    for (int y : H) {
      const auto& cy = A.coords[y];
      std::int64_t v = 0;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < i; ++j) {
          v += static_cast<std::int64_t>(cx[i]) * cy[j] * B.num(A.generators[j], A.generators[i]);
        }
      }
      if (v % B.modulus() != 0) mu.set(x, y, v);
    }
  }
  return mu;
}

std::vector<OmegaClass> omega_set(const FiniteGroup& G, const Cochain& /*omega*/, const OmegaClass& mu0) {
  AbelianGroupData A = abelian_structure(G, mu0.H);
  std::vector<OmegaClass> out;
  for (const auto& B : alternating_forms(G, A)) {
    Cochain mu = mu0.mu + alt_inverse(G, A, B);
    out.push_back(OmegaClass{mu0.H, mu.reduced()});
  }
  return out;
}

OmegaClass mu_action(const FiniteGroup& G, const Cochain& w, const OmegaClass& mu, int x) {
  if (!is_normal(G, mu.H)) throw PreconditionError("mu_action: H is not normal");
  const int n = G.order();
  Cochain ups = upsilon(G, w, x);
  std::int64_t L = lcm64(mu.mu.modulus(), ups.modulus());
  Cochain a = mu.mu.lifted(L), u = ups.lifted(L);
  Cochain out(2, n, L);
  for (int h1 : mu.H.elements) {
    int c1 = G.conj(x, h1);
    for (int h2 : mu.H.elements) {
      std::int64_t v = a.num(c1, G.conj(x, h2)) + u.num(h1, h2);
      if (v % L != 0) out.set(h1, h2, v);
    }
  }
  return OmegaClass{mu.H, out.reduced()};
}

std::vector<InvariantClass> invariant_classes(const FiniteGroup& G, const Cochain& w,
                                              const std::vector<OmegaClass>& classes) {
  std::vector<InvariantClass> out;
  std::vector<int> gens = small_generating_set(G);
  for (const auto& c : classes) {
    InvariantClass ic{c, gens, {}};
    bool ok = true;
    for (int x : gens) {
      OmegaClass moved = mu_action(G, w, c, x);
      auto eta = solve_coboundary1(G, c.H, moved.mu - c.mu);
      if (!eta) {
        ok = false;
        break;
      }
      ic.witnesses.push_back(*eta);
    }
    if (ok) out.push_back(std::move(ic));
  }
  return out;
}

// ---------------------------------------------------------------- text format

void write_cochain(std::ostream& os, const FiniteGroup& G, const Cochain& c, const std::string& group_id) {
  static const char* kinds[] = {"", "eta", "mu", "omega"};
  const int n = G.order();
  os << kinds[c.degree()] << ' ' << group_id << ' ' << c.modulus() << '\n';
  if (c.is_zero()) return;
  auto line = [&](std::initializer_list<int> args, std::int64_t v) {
    if (v == 0) return;
    for (int a : args) os << G.name(a) << ' ';
    os << v << '/' << c.modulus() << '\n';
  };
  for (int a = 0; a < n; ++a) {
    if (c.degree() == 1) {
      line({a}, c.num(a));
      continue;
    }
    for (int b = 0; b < n; ++b) {
      if (c.degree() == 2) {
        line({a, b}, c.num(a, b));
        continue;
      }
      for (int d = 0; d < n; ++d) line({a, b, d}, c.num(a, b, d));
    }
  }
}

Cochain read_cochain(std::istream& is, const FiniteGroup& G, std::string* group_id) {
  std::string line;
  int degree = 0;
  std::int64_t M = 0;
  Cochain c;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (degree == 0) {
      if (tok.size() != 3) throw ParseError("cochain header must be '<kind> <group-id> <M>'");
      if (tok[0] == "omega") degree = 3;
      else if (tok[0] == "mu") degree = 2;
      else if (tok[0] == "eta") degree = 1;
      else throw ParseError("unknown cochain kind '" + tok[0] + "'");
      if (group_id) *group_id = tok[1];
      try {
        M = std::stoll(tok[2]);
      } catch (const std::exception&) {
        throw ParseError("bad modulus '" + tok[2] + "'");
      }
      if (M < 1) throw ParseError("modulus must be positive");
      c = Cochain(degree, G.order(), M);
      continue;
    }
    if (static_cast<int>(tok.size()) != degree + 1) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(degree) + " elements and a value");
    }
    std::vector<int> args;
    for (int i = 0; i < degree; ++i) args.push_back(G.parse_element(tok[i]));
    RootOfUnity r = RootOfUnity::parse(tok[degree]);
    if (M % r.order() != 0) throw ParseError("line " + std::to_string(lineno) + ": value order does not divide M");
    std::int64_t v = r.over(M);
    if (degree == 1) c.set(args[0], v);
    else if (degree == 2) c.set(args[0], args[1], v);
    else c.set(args[0], args[1], args[2], v);
  }
  if (degree == 0) throw ParseError("empty cochain file");
  return c;
}

Cochain read_cochain_file(const std::string& path, const FiniteGroup& G) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cochain file '" + path + "'");
  return read_cochain(in, G);
}

}  // namespace twistkit
