#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistkit/groups.hpp"

namespace twistkit {

/// Default bound on orders of groups built from named families.
inline constexpr int kDefaultGroupBound = 2048;

FiniteGroup cyclic_group(int n);
/// Z/n1 x Z/n2 x ... with generators a, b, c, ...
FiniteGroup abelian_group(const std::vector<int>& factors);
/// Dihedral group of order 2n with generators r (order n) and s.
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();
/// <a, b | a^n = 1, b^m = a^t, b a b^-1 = a^k>, elements a^i b^j.
FiniteGroup metacyclic_group(int n, int m, int k, int t, const std::string& a = "a", const std::string& b = "b");
/// Dicyclic group of order 4n.
FiniteGroup dicyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// SL(n, q) for prime q; n in {2, 3}; order must not exceed bound.
FiniteGroup special_linear_group(int n, int q, int bound = kDefaultGroupBound);
/// Group generated by permutations of {0, ..., degree-1} (images lists).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens, int bound = kDefaultGroupBound);

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
/// N x| K with (n1,k1)(n2,k2) = (n1 * action[k1](n2), k1 k2); action[k] is an automorphism of N.
FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& K, const std::vector<std::vector<int>>& action);
/// A x| Z2 with the generator acting by inversion (A abelian invariant factors).
FiniteGroup generalized_dihedral(const std::vector<int>& factors);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // G index -> quotient index
};
/// G/N for normal N; quotient elements are cosets ordered by minimal element.
QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

/// Extension of a group Q by an abelian group A: elements (a, q) stored at a + |A| q with
/// (a1,q1)(a2,q2) = (right_action[q2](a1) * a2 * nu[q1 |Q| + q2], q1 q2).
/// Throws PreconditionError when the data do not define a group.
FiniteGroup abelian_extension(const FiniteGroup& A, const FiniteGroup& Q, const std::vector<std::vector<int>>& right_action,
                              const std::vector<int>& nu);

/// Group-spec DSL: "dihedral 4", "quaternion", "sym 4", "alt 5", "sl 2 3", "abelian 2 2",
/// "cyclic n", "dicyclic n", "metacyclic n m k t", "gdih n1 n2 ...", "small <order> <k>",
/// "table <file>", "perm <file>", or a catalog name such as "D8" or "Q16".
FiniteGroup build_group(const std::string& spec, int bound = kDefaultGroupBound);

struct CatalogEntry {
  std::string name;
  std::string spec;
  FiniteGroup group;
};

/// All 42 groups of order at most 16, one per isomorphism class, sorted by order.
const std::vector<CatalogEntry>& small_group_catalog();

/// A short name for G if it is recognized (catalog, abelian, dihedral, or a few
/// common groups up to order 120), otherwise nullopt.
std::optional<std::string> identify(const FiniteGroup& G);

/// Name for an abelian group with the given invariant factors ("Z4xZ2^2").
std::string abelian_name(std::vector<int> factors);

}  // namespace twistkit
