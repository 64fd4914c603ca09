#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/error.hpp"

namespace twistkit {

/// A named generator: display token plus element index.
struct NamedGenerator {
  std::string name;
  int element = 0;
};

struct ConjugacyClass {
  int representative = 0;      // minimal element index in the class
  std::vector<int> elements;   // sorted
};

/// Finite group given by its multiplication table. Element 0 is the identity.
/// Immutable after construction.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates the table (identity, inverses, associativity) and relabels so
  /// that the identity is index 0. Names default to generator words when
  /// generators are given, otherwise to decimal indices.
  static FiniteGroup from_table(int order, std::vector<int> table, std::vector<NamedGenerator> gens = {},
                                std::vector<std::string> names = {}, std::string label = "");

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  int pow(int a, std::int64_t k) const;
  int element_order(int a) const { return orders_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with the given name, or -1.
  int find(const std::string& name) const;
  /// Resolve an element name or a word in the named generators (e.g. "r2s").
  int parse_element(const std::string& text) const;

  const std::vector<NamedGenerator>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }

  const std::vector<int>& table() const { return table_; }

 private:
  void finish();

  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<std::string> names_;
  std::vector<NamedGenerator> gens_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::string label_;
};

/// Subset of a FiniteGroup closed under products and inverses. The parent group
/// is supplied explicitly to every operation.
struct Subgroup {
  std::vector<int> elements;  // sorted
  std::vector<char> member;   // indexed by parent element

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return member[g] != 0; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);
};

/// Builds a Subgroup from an element list; throws PreconditionError if not closed.
Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements);
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);

/// Classes with minimal-index representatives, sorted by representative.
const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, int a);
Subgroup center(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_abelian(const FiniteGroup& G, const Subgroup& H);

/// All normal abelian subgroups sorted by order then element set.
std::vector<Subgroup> normal_abelian_subgroups(const FiniteGroup& G);
/// Full subgroup lattice; only for |G| <= 64.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

/// Right cosets Hx as sorted element sets; H itself first, others by minimal element.
std::vector<std::vector<int>> right_cosets(const FiniteGroup& G, const Subgroup& H);

/// Invariant-factor decomposition of an abelian subgroup.
struct AbelianGroupData {
  std::vector<int> factors;     // n_1 | n_2 | ... | n_r, all > 1
  std::vector<int> generators;  // parent indices, generators[i] has order factors[i]
  /// coords[g] = exponent vector of g against generators; meaningful only when index[g] >= 0.
  std::vector<std::vector<int>> coords;
  /// index[g] = mixed-radix index of coords[g], or -1 if g is not in H.
  std::vector<int> index;
  /// element[k] for k the mixed-radix index of coordinates (first factor fastest).
  std::vector<int> by_index;

  int order() const;
  int rank() const { return static_cast<int>(factors.size()); }
  int index_of(const std::vector<int>& c) const;
};

AbelianGroupData abelian_structure(const FiniteGroup& G, const Subgroup& H);

/// H as a standalone group; embedding[i] = parent index of element i.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H, std::vector<int>* embedding);

/// Extend gens -> images to a homomorphism from <gens> into H. Returns the map
/// (with -1 outside <gens>) or nullopt if the assignment is inconsistent.
std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& G, const std::vector<int>& gens,
                                                    const std::vector<int>& images, const FiniteGroup& H);

/// A small generating set (greedy by element order).
std::vector<int> small_generating_set(const FiniteGroup& G);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> map;  // G1 index -> G2 index when isomorphic
};

/// Throws BoundError if either order exceeds bound.
IsomorphismResult is_isomorphic(const FiniteGroup& G1, const FiniteGroup& G2, int bound = 256);

}  // namespace twistkit
