#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/groups.hpp"
#include "twistkit/scalars.hpp"

namespace twistkit {

/// A map G^degree -> Q/Z stored as numerators over a common modulus. Values are
/// kept for the whole parent group even when only a subgroup matters; an empty
/// value vector is the zero cochain.
class Cochain {
 public:
  Cochain() = default;
  /// Zero cochain of the given degree (1, 2 or 3) on a group of order n.
  Cochain(int degree, int n, std::int64_t modulus = 1);

  int degree() const { return degree_; }
  int group_order() const { return n_; }
  std::int64_t modulus() const { return M_; }
  bool is_zero() const;

  /// Numerator over modulus() of the value at the given arguments.
  std::int64_t num(int a) const { return v_.empty() ? 0 : v_[a]; }
  std::int64_t num(int a, int b) const { return v_.empty() ? 0 : v_[static_cast<std::size_t>(a) * n_ + b]; }
  std::int64_t num(int a, int b, int c) const {
    return v_.empty() ? 0 : v_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }
  RootOfUnity value(int a) const { return RootOfUnity(num(a), M_); }
  RootOfUnity value(int a, int b) const { return RootOfUnity(num(a, b), M_); }
  RootOfUnity value(int a, int b, int c) const { return RootOfUnity(num(a, b, c), M_); }

  void set(int a, std::int64_t v);
  void set(int a, int b, std::int64_t v);
  void set(int a, int b, int c, std::int64_t v);

  /// Same cochain over modulus L (a multiple of modulus()).
  Cochain lifted(std::int64_t L) const;
  /// Same cochain over the smallest modulus that holds all values.
  Cochain reduced() const;

  const std::vector<std::int64_t>& raw() const { return v_; }

  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  Cochain operator-() const;
  /// Pointwise equality in Q/Z on all arguments.
  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

 private:
  void materialize();

  int degree_ = 0;
  int n_ = 1;
  std::int64_t M_ = 1;
  std::vector<std::int64_t> v_;
};

/// Equality of two cochains on the tuples of a subgroup only.
bool equal_on(const Cochain& a, const Cochain& b, const Subgroup& H);

Cochain coboundary1(const FiniteGroup& G, const Cochain& eta);
Cochain coboundary2(const FiniteGroup& G, const Cochain& mu);

/// The 3-cocycle identity on all quadruples plus normalization omega(g,1,l) = 0.
bool is_3cocycle(const FiniteGroup& G, const Cochain& omega);
/// The 3-cocycle identity alone.
bool satisfies_pentagon(const FiniteGroup& G, const Cochain& omega);
/// First failing quadruple of the 3-cocycle identity, if any.
std::optional<std::vector<int>> pentagon_failure(const FiniteGroup& G, const Cochain& omega);

struct NormalizedCocycle {
  Cochain omega;  // omega - d(shift), normalized
  Cochain shift;  // the 2-cochain used
};
/// Shift a 3-cocycle by a coboundary so that omega(g, 1, l) = 0.
/// Throws PreconditionError if omega fails the 3-cocycle identity.
NormalizedCocycle normalize_cocycle(const FiniteGroup& G, const Cochain& omega);

/// The form every module works with: zero stays zero (modulus 1), otherwise the
/// normalized cocycle over its reduced modulus. Throws PreconditionError if omega is
/// not a 3-cocycle on G.
Cochain standard_cocycle(const FiniteGroup& G, const Cochain& omega);

/// omega(a,b,c) = k a [b + c >= n] / n on Z/n, with a^i stored at index i.
Cochain cyclic_cocycle(int n, int k);

/// Pullback of omega0 on Q along a surjective homomorphism pi: G -> Q.
Cochain inflate(const FiniteGroup& G, const FiniteGroup& Q, const Cochain& omega0, const std::vector<int>& pi);

/// Standard generators of H^3 of an abelian group against its invariant factors:
/// one parameter per factor, per pair and per triple, in that order.
struct AbelianCocycleBasis {
  AbelianGroupData structure;
  std::vector<std::int64_t> ranges;  // admissible parameter values are 0 .. ranges[i]-1
  std::vector<std::string> names;
};
AbelianCocycleBasis abelian_cocycle_basis(const FiniteGroup& G);
Cochain abelian_cocycle(const FiniteGroup& G, const AbelianCocycleBasis& basis, const std::vector<std::int64_t>& params);

/// omega^x(g1,g2,g3) = omega(x g1 x^-1, x g2 x^-1, x g3 x^-1), and the same for 2-cochains.
Cochain conjugate_cochain(const FiniteGroup& G, const Cochain& c, int x);

Cochain beta(const FiniteGroup& G, const Cochain& omega, int a);
Cochain upsilon(const FiniteGroup& G, const Cochain& omega, int x);
Cochain nu_x(const FiniteGroup& G, const Cochain& omega, int x);

/// Representative of an element of Omega_{H,omega}: a 2-cochain on H with d mu = omega|_H.
struct OmegaClass {
  Subgroup H;
  Cochain mu;
};

struct MuSolution {
  std::optional<OmegaClass> cls;
  std::string certificate;  // reason when cls is empty
};

/// Solve d mu = omega|_H over Z/(M e), M the modulus of omega and e the exponent of H
/// (the order of H when H is not abelian).
MuSolution solve_mu(const FiniteGroup& G, const Cochain& omega, const Subgroup& H);

/// Solve d eta = target on H x H; returns nullopt when target|_H is not a coboundary.
std::optional<Cochain> solve_coboundary1(const FiniteGroup& G, const Subgroup& H, const Cochain& target);

/// All alternating bicharacters of abelian H as 2-cochains, parameterized by
/// c_ij in Z/gcd(n_i, n_j) for generator pairs i < j (first pair fastest).
std::vector<Cochain> alternating_forms(const FiniteGroup& G, const AbelianGroupData& A);

/// 2-cocycle on abelian H with alt equal to the given alternating form, concentrated on
/// generator pairs j < i: mu(x, y) = sum_{i > j} x_i y_j B(g_j, g_i).
Cochain alt_inverse(const FiniteGroup& G, const AbelianGroupData& A, const Cochain& B);

/// mu0 + alt_inverse(B) for every alternating form B on H (H abelian).
std::vector<OmegaClass> omega_set(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu0);

/// mu <| x := mu^x + Upsilon_x restricted to H. Throws PreconditionError if H is not normal.
OmegaClass mu_action(const FiniteGroup& G, const Cochain& omega, const OmegaClass& mu, int x);

struct InvariantClass {
  OmegaClass cls;
  std::vector<int> generators;   // generating set of G used for the test
  std::vector<Cochain> witnesses; // d eta_x = (mu <| x) - mu on H
};

/// Classes fixed by the action of every element of a generating set of G.
std::vector<InvariantClass> invariant_classes(const FiniteGroup& G, const Cochain& omega,
                                              const std::vector<OmegaClass>& classes);

/// Cochain text format: header "<kind> <group-id> <M>" with kind omega/mu/eta for
/// degree 3/2/1, then one line per nonzero value with element names and q/M.
void write_cochain(std::ostream& os, const FiniteGroup& G, const Cochain& c, const std::string& group_id);
Cochain read_cochain(std::istream& is, const FiniteGroup& G, std::string* group_id = nullptr);
Cochain read_cochain_file(const std::string& path, const FiniteGroup& G);

}  // namespace twistkit
