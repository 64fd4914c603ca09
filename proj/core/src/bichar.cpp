#include "twistkit/bichar.hpp"

#include <sstream>

#include "twistkit/error.hpp"

namespace twistkit {

bool operator==(const Bicharacter& a, const Bicharacter& b) {
  if (!(a.H == b.H)) return false;
  return equal_on(a.values, b.values, a.H);
}

bool operator<(const Bicharacter& a, const Bicharacter& b) {
  if (!(a.H == b.H)) return a.H < b.H;
  for (int h1 : a.H.elements) {
    for (int h2 : a.H.elements) {
      RootOfUnity x = a(h1, h2), y = b(h1, h2);
      if (x != y) return x < y;
    }
  }
  return false;
}

namespace {

Cochain swap_minus(const FiniteGroup& G, const Subgroup& H, const Cochain& mu) {
  Cochain out(2, G.order(), mu.modulus());
  if (mu.is_zero()) return out;
  for (int h1 : H.elements) {
    for (int h2 : H.elements) {
      std::int64_t v = mu.num(h2, h1) - mu.num(h1, h2);
      if (v % mu.modulus() != 0) out.set(h1, h2, v);
    }
  }
  return out.reduced();
}

}  // namespace

Bicharacter alt(const FiniteGroup& G, const Subgroup& H, const Cochain& mu) {
  if (!is_abelian(G, H)) throw PreconditionError("alt: H is not abelian");
  return Bicharacter{H, swap_minus(G, H, mu), BicharFlavor::plain};
}

Bicharacter alt_prime(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu) {
  if (!is_abelian(G, mu.H)) throw PreconditionError("alt_prime: H is not abelian");
  const Cochain w = omega.is_zero() ? Cochain(3, G.order(), 1) : omega;
  if (!equal_on(coboundary2(G, mu.mu), w, mu.H)) throw PreconditionError("alt_prime: d mu differs from omega on H");
  Bicharacter B{mu.H, swap_minus(G, mu.H, mu.mu), omega.is_zero() ? BicharFlavor::plain : BicharFlavor::omega};
  return B;
}

std::vector<Bicharacter> enumerate_alternating(const FiniteGroup& G, const Subgroup& H) {
  AbelianGroupData A = abelian_structure(G, H);
  std::vector<Bicharacter> out;
  for (auto& c : alternating_forms(G, A)) out.push_back(Bicharacter{H, c.reduced(), BicharFlavor::plain});
  return out;
}

std::vector<Bicharacter> enumerate_omega_bicharacters(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu0) {
  std::vector<Bicharacter> out;
  for (const auto& cls : omega_set(G, omega, mu0)) out.push_back(alt_prime(G, omega, cls));
  return out;
}

bool is_alternating(const FiniteGroup& G, const Bicharacter& B) {
  const auto& E = B.H.elements;
  const std::int64_t M = B.values.modulus();
  for (int h1 : E) {
    if (B.values.num(h1, h1) % M != 0) return false;
    for (int h2 : E) {
      for (int h3 : E) {
        if ((B.values.num(h1, G.mul(h2, h3)) - B.values.num(h1, h2) - B.values.num(h1, h3)) % M != 0) return false;
        if ((B.values.num(G.mul(h1, h2), h3) - B.values.num(h1, h3) - B.values.num(h2, h3)) % M != 0) return false;
      }
    }
  }
  return true;
}

bool is_omega_bicharacter(const FiniteGroup& G, const Cochain& omega, const Bicharacter& B) {
  const auto& E = B.H.elements;
  const std::int64_t L = lcm64(B.values.modulus(), omega.modulus());
  Cochain b = B.values.lifted(L);
  for (int h1 : E) {
    if (b.num(h1, h1) % L != 0) return false;
    for (int h2 : E) {
      if ((b.num(h1, h2) + b.num(h2, h1)) % L != 0) return false;
    }
  }
  for (int h : E) {
    Cochain bh = beta(G, omega, h).lifted(L);
    for (int h1 : E) {
      for (int h2 : E) {
        std::int64_t d = b.num(h, h1) + b.num(h, h2) - b.num(h, G.mul(h1, h2));
        if ((d - bh.num(h1, h2)) % L != 0) return false;
      }
    }
  }
  return true;
}

bool is_g_invariant(const FiniteGroup& G, const Cochain& omega, const Bicharacter& B, bool full) {
  if (!is_normal(G, B.H)) throw PreconditionError("is_g_invariant: H is not normal");
  const auto& E = B.H.elements;
  if (omega.is_zero()) {
    const std::int64_t M = B.values.modulus();
    std::vector<int> xs;
    if (full) {
      for (int g = 0; g < G.order(); ++g) xs.push_back(g);
    } else {
      xs = small_generating_set(G);
    }
    for (int g : xs) {
      for (int h1 : E) {
        int c1 = G.conj(g, h1);
        for (int h2 : E) {
          if ((B.values.num(c1, G.conj(g, h2)) - B.values.num(h1, h2)) % M != 0) return false;
        }
      }
    }
    return true;
  }
  const std::int64_t L = lcm64(B.values.modulus(), omega.modulus());
  Cochain b = B.values.lifted(L);
  for (const auto& cls : G.classes()) {
    int a = cls.representative;
    if (!B.H.contains(a)) continue;
    Cochain ba = beta(G, omega, a).lifted(L);
    for (int x = 0; x < G.order(); ++x) {
      int xi = G.inv(x);
      int lhs_a = G.conj(xi, a);
      std::int64_t base = -ba.num(x, xi);
      for (int h : E) {
        std::int64_t rhs = base + ba.num(x, h) + ba.num(G.mul(x, h), xi) + b.num(a, G.conj(x, h));
        if ((b.num(lhs_a, h) - rhs) % L != 0) return false;
      }
    }
  }
  return true;
}

std::string format_bicharacter(const FiniteGroup& G, const Bicharacter& B) {
  std::ostringstream os;
  const std::int64_t M = B.values.modulus();
  if (B.flavor == BicharFlavor::plain) {
    AbelianGroupData A = abelian_structure(G, B.H);
    for (int i = 0; i < A.rank(); ++i) {
      for (int j = i + 1; j < A.rank(); ++j) {
        int g = A.generators[i], h = A.generators[j];
        os << G.name(g) << ' ' << G.name(h) << ' ' << B.values.num(g, h) << '/' << M << '\n';
      }
    }
    return os.str();
  }
  for (int h1 : B.H.elements) {
    for (int h2 : B.H.elements) {
      if (B.values.num(h1, h2) != 0) os << G.name(h1) << ' ' << G.name(h2) << ' ' << B.values.num(h1, h2) << '/' << M << '\n';
    }
  }
  return os.str();
}

}  // namespace twistkit
