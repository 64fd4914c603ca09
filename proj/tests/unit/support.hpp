#pragma once

// Shared generators and independent formulas for the unit tests. Everything here is
// written from the defining equations and uses only the table of the group and the raw
// cochain values, so it can serve as an oracle for the library routines.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "twistkit/catalog.hpp"
#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"

namespace tk_test {

using namespace twistkit;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int below(int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(g_)); }
  std::int64_t below64(std::int64_t n) { return std::uniform_int_distribution<std::int64_t>(0, n - 1)(g_); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(static_cast<int>(v.size()))]; }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// Exponent of c at the given arguments written over L (a multiple of c.modulus()).
inline std::int64_t at(const Cochain& c, std::int64_t L, int a) { return c.num(a) * (L / c.modulus()); }
inline std::int64_t at(const Cochain& c, std::int64_t L, int a, int b) { return c.num(a, b) * (L / c.modulus()); }
inline std::int64_t at(const Cochain& c, std::int64_t L, int a, int b, int d) {
  return c.num(a, b, d) * (L / c.modulus());
}
inline std::int64_t mod(std::int64_t v, std::int64_t L) { return ((v % L) + L) % L; }
inline std::int64_t lcm_of(std::initializer_list<std::int64_t> ms) {
  std::int64_t L = 1;
  for (auto m : ms) L = std::lcm(L, m);
  return L;
}

/// omega(g2,g3,g4) - omega(g1g2,g3,g4) + omega(g1,g2g3,g4) - omega(g1,g2,g3g4) + omega(g1,g2,g3).
inline std::int64_t pentagon_residual(const FiniteGroup& G, const Cochain& w, int g1, int g2, int g3, int g4) {
  const auto L = w.modulus();
  return mod(at(w, L, g2, g3, g4) - at(w, L, G.mul(g1, g2), g3, g4) + at(w, L, g1, G.mul(g2, g3), g4) -
                 at(w, L, g1, g2, G.mul(g3, g4)) + at(w, L, g1, g2, g3),
             L);
}

/// d mu (a,b,c) = mu(b,c) - mu(ab,c) + mu(a,bc) - mu(a,b), over L.
inline std::int64_t d2(const FiniteGroup& G, const Cochain& mu, std::int64_t L, int a, int b, int c) {
  return mod(at(mu, L, b, c) - at(mu, L, G.mul(a, b), c) + at(mu, L, a, G.mul(b, c)) - at(mu, L, a, b), L);
}

/// d eta (a,b) = eta(b) - eta(ab) + eta(a), over L.
inline std::int64_t d1(const FiniteGroup& G, const Cochain& eta, std::int64_t L, int a, int b) {
  return mod(at(eta, L, b) - at(eta, L, G.mul(a, b)) + at(eta, L, a), L);
}

/// beta_a(h,g) = omega(a,h,g) - omega(h, h^-1 a h, g) + omega(h, g, (hg)^-1 a hg), over L.
inline std::int64_t beta_ref(const FiniteGroup& G, const Cochain& w, std::int64_t L, int a, int h, int g) {
  int hi = G.inv(h);
  int hg = G.mul(h, g);
  return mod(at(w, L, a, h, g) - at(w, L, h, G.conj(hi, a), g) + at(w, L, h, g, G.conj(G.inv(hg), a)), L);
}

/// Upsilon_x(g1,g2) = omega(x g1 x^-1, x g2 x^-1, x) + omega(x, g1, g2) - omega(x g1 x^-1, x, g2).
inline std::int64_t upsilon_ref(const FiniteGroup& G, const Cochain& w, std::int64_t L, int x, int g1, int g2) {
  int c1 = G.conj(x, g1), c2 = G.conj(x, g2);
  return mod(at(w, L, c1, c2, x) + at(w, L, x, g1, g2) - at(w, L, c1, x, g2), L);
}

/// nu_x(g1,g2) = omega(g1,g2,x) + omega(g1 g2 x (g1 g2)^-1, g1, g2) - omega(g1, g2 x g2^-1, g2).
inline std::int64_t nu_ref(const FiniteGroup& G, const Cochain& w, std::int64_t L, int x, int g1, int g2) {
  int g12 = G.mul(g1, g2);
  return mod(at(w, L, g1, g2, x) + at(w, L, G.conj(g12, x), g1, g2) - at(w, L, g1, G.conj(g2, x), g2), L);
}

/// Random normalized 2-cochain over Z/M (mu(1,g) = mu(g,1) = 0).
inline Cochain random_cochain2(const FiniteGroup& G, std::int64_t M, Rng& rng) {
  Cochain mu(2, G.order(), M);
  for (int a = 1; a < G.order(); ++a) {
    for (int b = 1; b < G.order(); ++b) mu.set(a, b, rng.below64(M));
  }
  return mu;
}

/// Random 1-cochain over Z/M with eta(1) = 0.
inline Cochain random_cochain1(const FiniteGroup& G, std::int64_t M, Rng& rng) {
  Cochain eta(1, G.order(), M);
  for (int a = 1; a < G.order(); ++a) eta.set(a, rng.below64(M));
  return eta;
}

/// The cocycle on D8 pulled back from the nontrivial class of Z2 along D8 -> D8/<r2,s>.
inline Cochain inflated_d8_omega(const FiniteGroup& D8) {
  auto N = generated_subgroup(D8, {D8.parse_element("r2"), D8.parse_element("s")});
  auto Q = quotient_group(D8, N);
  return standard_cocycle(D8, inflate(D8, Q.group, cyclic_cocycle(2, 1), Q.projection));
}

/// A random 3-cocycle on G: a pullback of a cyclic class along a random cyclic quotient
/// (or an abelian_cocycle when G is abelian), plus a random normalized coboundary.
inline Cochain random_cocycle(const FiniteGroup& G, Rng& rng) {
  Cochain base(3, G.order(), 1);
  if (G.is_abelian() && rng.coin()) {
    auto basis = abelian_cocycle_basis(G);
    std::vector<std::int64_t> p;
    for (auto r : basis.ranges) p.push_back(rng.below64(r));
    base = abelian_cocycle(G, basis, p);
  } else {
    std::vector<std::pair<Subgroup, int>> cyclic_quotients;
    for (const auto& N : all_subgroups(G)) {
      if (!is_normal(G, N)) continue;
      int q = G.order() / N.order();
      if (q < 2) continue;
      auto Q = quotient_group(G, N);
      bool cyclic = false;
      for (int x = 0; x < Q.group.order(); ++x) cyclic = cyclic || Q.group.element_order(x) == q;
      if (cyclic) cyclic_quotients.push_back({N, q});
    }
    if (!cyclic_quotients.empty()) {
      const auto& [N, q] = rng.pick(cyclic_quotients);
      auto Q = quotient_group(G, N);
      int gen = 0;
      for (int x = 0; x < q; ++x) {
        if (Q.group.element_order(x) == q) {
          gen = x;
          break;
        }
      }
      std::vector<int> log(q);
      for (int i = 0, x = 0; i < q; ++i, x = Q.group.mul(x, gen)) log[x] = i;
      std::vector<int> pi(G.order());
      for (int g = 0; g < G.order(); ++g) pi[g] = log[Q.projection[g]];
      base = inflate(G, cyclic_group(q), cyclic_cocycle(q, rng.below(q)), pi);
    }
  }
  const std::int64_t M = std::max<std::int64_t>(base.modulus(), 2);
  auto mu = random_cochain2(G, M, rng);
  return base.lifted(M) + coboundary2(G, mu);
}

/// Catalog groups with order at most n.
inline std::vector<CatalogEntry> catalog_upto(int n) {
  std::vector<CatalogEntry> out;
  for (const auto& e : small_group_catalog()) {
    if (e.group.order() <= n) out.push_back(e);
  }
  return out;
}

}  // namespace tk_test
