#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistkit {

/// Linear congruences sum_j c_j x_j = r (mod N), added one at a time and kept
/// in Howell form, so consistency is known after every insertion and any
/// consistent system is solved by back substitution.
class ModularSystem {
 public:
  ModularSystem(int variables, std::int64_t modulus);

  int variables() const { return n_; }
  std::int64_t modulus() const { return N_; }

  /// Sparse row: (variable, coefficient) pairs; repeated variables accumulate.
  void add(const std::vector<std::pair<int, std::int64_t>>& terms, std::int64_t rhs);

  bool consistent() const { return consistent_; }
  /// Human-readable reason for inconsistency (empty while consistent).
  const std::string& certificate() const { return certificate_; }

  /// A solution with free variables set to zero, or nullopt if inconsistent.
  std::optional<std::vector<std::int64_t>> solve() const;

  int rank() const;

 private:
  using Row = std::vector<std::int64_t>;  // n_ coefficients followed by the right-hand side
  void insert(Row row);

  int n_;
  std::int64_t N_;
  std::vector<Row> pivots_;     // pivots_[c] empty when column c has no pivot
  bool consistent_ = true;
  std::string certificate_;
  std::int64_t added_ = 0;
};

/// Extended gcd: returns g = gcd(a, b) >= 0 with s a + t b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t* s, std::int64_t* t);

}  // namespace twistkit
