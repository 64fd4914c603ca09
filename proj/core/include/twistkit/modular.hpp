#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/bichar.hpp"
#include "twistkit/characters.hpp"
#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"
#include "twistkit/scalars.hpp"

namespace twistkit {

/// Simple object (a, chi) of Rep(D^omega(G)): a is a class representative and chi an
/// irreducible beta_a-character of C_G(a).
struct SimpleObject {
  int rep = 0;          // class representative in G
  int class_index = 0;  // index into G.classes()
  int chi = 0;          // row of the centralizer's table
  int degree = 1;
  std::int64_t dim = 1; // |K_a| deg chi
  RootOfUnity twist;    // chi(a) / deg chi
};

struct CentralizerData {
  int rep = 0;
  Subgroup C;
  FiniteGroup local;
  std::vector<int> embedding;  // local index -> parent index
  std::vector<int> local_of;   // parent index -> local index or -1
  Cochain beta;                // beta_rep on the parent group (zero when omega is trivial)
  ProjectiveCharacterTable table;
  std::vector<int> transversal;  // g in the class of rep -> minimal x with x g x^-1 = rep, else -1
};

/// Modular data of Rep(D^omega(G)) with the unnormalized S-matrix (unit row = dimensions).
struct ModularData {
  FiniteGroup G;
  Cochain omega;
  std::vector<CentralizerData> centralizers;  // one per conjugacy class
  std::vector<SimpleObject> objects;          // grouped by class, then character
  std::int64_t conductor = 1;
  std::vector<std::vector<Cyclotomic>> S;

  int size() const { return static_cast<int>(objects.size()); }
  /// Character value of object X at a parent element of C_G(rep), lifted to the conductor.
  Cyclotomic chi(int X, int element) const;
};

/// Character-table work per centralizer is bounded by `bound` (order of the twisted extension).
std::vector<SimpleObject> simple_objects(const FiniteGroup& G, const Cochain& omega,
                                         int bound = 16 * kDefaultCharacterBound);

/// Full modular data. The S-matrix uses the untwisted formula when omega is trivial and
/// the twisted formula otherwise.
ModularData s_matrix(const FiniteGroup& G, const Cochain& omega, int bound = 16 * kDefaultCharacterBound);

/// |G| / (|C_a||C_b|) sum over g in G(a,b) of conj chi(g b g^-1) conj chi'(g^-1 a g).
Cyclotomic s_entry_untwisted(const ModularData& data, int X, int Y);
/// Sum over g in K_a, g' in K_b commuting with g, with the beta ratio prefactor.
Cyclotomic s_entry_twisted(const ModularData& data, int X, int Y);

/// S(X, Y) = d(X) d(Y).
bool centralize(const ModularData& data, int X, int Y);
/// The class-commutation and character conditions, checked directly.
bool centralize_by_conditions(const ModularData& data, int X, int Y);

/// Sorted list of object indices.
using ObjectSet = std::vector<int>;

struct LagrangianCheck {
  bool contains_unit = false;
  bool twists_trivial = false;
  bool centralizing = false;
  bool dimension = false;  // sum of d^2 equals |G|
  bool fusion_closed = false;
  bool duality_closed = false;
  std::string failure;     // first failing property, empty if none

  bool ok() const { return failure.empty(); }
};

LagrangianCheck check_lagrangian(const ModularData& data, const ObjectSet& L);

/// Objects (a, chi) with a in H among class representatives and chi(h) = B(a,h) deg chi on H.
/// With check = true, throws InvariantError if the result is not Lagrangian.
ObjectSet build_subcategory(const ModularData& data, const LagrangianLabel& label, bool check = true);

/// (H_L, B_L) of a Lagrangian object set. Throws PreconditionError when the data do
/// not define a well-defined G-invariant alternating (omega-)bicharacter.
LagrangianLabel extract_label(const ModularData& data, const ObjectSet& L);

/// All Lagrangian object sets: maximal cliques of mutually centralizing objects with
/// trivial twist and total squared dimension |G|, each verified closed under fusion and duality.
std::vector<ObjectSet> brute_force_lagrangians(const ModularData& data);

/// Index of the dual object (S row conjugated).
int dual_object(const ModularData& data, int X);

struct FusionRules {
  int n = 0;
  std::vector<std::int64_t> N;  // N[(a n + b) n + c]
  std::int64_t at(int a, int b, int c) const { return N[(static_cast<std::size_t>(a) * n + b) * n + c]; }
};

/// Verlinde formula with S normalized by |G|. Throws InvariantError on a non-integral or
/// negative coefficient, BoundError when the object count exceeds max_objects.
FusionRules fusion_coefficients(const ModularData& data, int max_objects = 48);

/// N_{ab}^c for a, b, c in L (indices into L).
FusionRules fusion_restricted(const ModularData& data, const ObjectSet& L);

struct EquivalenceResult {
  bool equivalent = false;
  std::vector<int> permutation;  // object of data1 -> object of data2
  std::string reason;
};

/// Searches for a bijection of simple objects preserving S, twists and dimensions exactly.
EquivalenceResult modular_equivalent(const ModularData& data1, const ModularData& data2);

struct CocycleMatch {
  std::vector<std::int64_t> params;  // against abelian_cocycle_basis(A)
  Cochain omega;
  EquivalenceResult witness;
  int tried = 0;                     // parameter vectors examined
};

/// First omega on abelian A, in parameter order (first parameter fastest), whose modular
/// data match the target. Candidates are screened by object count and twists first.
std::optional<CocycleMatch> find_matching_cocycle(const ModularData& target, const FiniteGroup& A);

/// Sorted twists as "q/m" strings.
std::vector<std::string> twist_spectrum(const ModularData& data);

}  // namespace twistkit
