#pragma once

#include <cstdint>
#include <vector>

#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"
#include "twistkit/scalars.hpp"

namespace twistkit {

inline constexpr int kDefaultCharacterBound = 256;

/// Irreducible characters of a finite group, exact in Q(zeta_conductor).
/// Row 0 is the trivial character; rows are sorted by degree, then by values.
struct CharacterTable {
  int group_order = 1;
  std::int64_t conductor = 1;
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> class_of;  // element -> class
  std::vector<int> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]

  int size() const { return static_cast<int>(degrees.size()); }
  const Cyclotomic& value(int chi, int element) const { return values[chi][class_of[element]]; }
};

/// Class-sum eigenvectors over F_p for p = 1 (mod exp K), lifted to cyclotomic values
/// through eigenvalue multiplicities; orthogonality is verified exactly.
/// Throws BoundError if |K| > bound.
CharacterTable character_table(const FiniteGroup& K, int bound = kDefaultCharacterBound);

/// Irreducible projective characters rho with rho(x) rho(y) = e(beta(x,y)) rho(xy), stored
/// per element of K. Computed from the central extension of K by Z/m (m the order of
/// beta) on which the central generator acts by zeta_m.
struct ProjectiveCharacterTable {
  int group_order = 1;
  Cochain cocycle;              // on K
  std::int64_t conductor = 1;   // values lie in Q(zeta_conductor)
  std::vector<int> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [character][element of K]

  int size() const { return static_cast<int>(degrees.size()); }
  const Cyclotomic& value(int chi, int element) const { return values[chi][element]; }
};

/// Throws BoundError if |K| m exceeds bound, PreconditionError if beta is not a
/// normalized 2-cocycle.
ProjectiveCharacterTable projective_character_table(const FiniteGroup& K, const Cochain& beta,
                                                    int bound = 16 * kDefaultCharacterBound);

/// The central extension used above: (x, s) stored at x + |K| s.
FiniteGroup twisted_extension(const FiniteGroup& K, const Cochain& beta);

}  // namespace twistkit
