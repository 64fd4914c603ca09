#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"

namespace twistkit {

enum class BicharFlavor { plain, omega };

/// A map H x H -> Q/Z on a subgroup H, stored as a 2-cochain on the parent group.
struct Bicharacter {
  Subgroup H;
  Cochain values;
  BicharFlavor flavor = BicharFlavor::plain;

  RootOfUnity operator()(int h1, int h2) const { return values.value(h1, h2); }
  /// Pointwise equality on H x H (flavor is not compared).
  friend bool operator==(const Bicharacter& a, const Bicharacter& b);
  friend bool operator!=(const Bicharacter& a, const Bicharacter& b) { return !(a == b); }
  /// Lexicographic order of values over H x H in element order; for stable listings.
  friend bool operator<(const Bicharacter& a, const Bicharacter& b);
};

/// alt(mu)(h1, h2) = mu(h2, h1) - mu(h1, h2). Throws PreconditionError if H is not abelian.
Bicharacter alt(const FiniteGroup& G, const Subgroup& H, const Cochain& mu);

/// Same formula for mu with d mu = omega|_H; the result satisfies the three
/// alternating omega-bicharacter conditions. Throws PreconditionError if d mu != omega|_H.
Bicharacter alt_prime(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu);

/// All alternating bicharacters on abelian H.
std::vector<Bicharacter> enumerate_alternating(const FiniteGroup& G, const Subgroup& H);

/// The image of omega_set(omega, H, mu0) under alt_prime.
std::vector<Bicharacter> enumerate_omega_bicharacters(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu0);

/// Plain flavor: bicharacter in each slot with B(h, h) = 0.
bool is_alternating(const FiniteGroup& G, const Bicharacter& B);
/// B(h1,h2) = -B(h2,h1), B(h,h) = 0, and d B_h = beta_h on H x H for all h in H.
bool is_omega_bicharacter(const FiniteGroup& G, const Cochain& omega, const Bicharacter& B);

/// Plain flavor: B(g x g^-1, g y g^-1) = B(x, y); omega flavor: the twisted invariance
/// condition B(x^-1 a x, h) = [beta_a(x,h) + beta_a(xh,x^-1) - beta_a(x,x^-1)] + B(a, x h x^-1)
/// for a in H among the class representatives. With full = false the plain test runs over a
/// generating set of G; the omega test always runs over every x in G.
/// Throws PreconditionError if H is not normal.
bool is_g_invariant(const FiniteGroup& G, const Cochain& omega, const Bicharacter& B, bool full = false);

/// Lagrangian label (H, B) with the witness mu (alt'(mu) = B) when known.
struct LagrangianLabel {
  Subgroup H;
  Bicharacter B;
  std::optional<Cochain> mu;
};

/// Lines "h1 h2 q/M"; generator pairs only for the plain flavor, all pairs otherwise.
std::string format_bicharacter(const FiniteGroup& G, const Bicharacter& B);

}  // namespace twistkit
