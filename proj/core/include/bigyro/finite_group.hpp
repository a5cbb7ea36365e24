#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bigyro {

/// Sorted, duplicate-free set of element indices.
using Subset = std::vector<std::size_t>;

/// A finite group given by its Cayley table over dense indices 0..order-1.
class FiniteGroup {
 public:
  /// Validates the table: square with entries in range, a Latin square, a
  /// two-sided identity, and (for order <= 128) associativity. Throws
  /// InputError naming the offending row/column/triple. `names` may be empty;
  /// otherwise it must have one label per element.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return table_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const noexcept { return inverse_[a]; }

  /// h·x·h⁻¹
  std::size_t conj(std::size_t h, std::size_t x) const noexcept { return mul(mul(h, x), inv(h)); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  /// The label of `a`, or its index when the group is unlabeled.
  std::string name(std::size_t a) const;

  std::vector<std::vector<std::size_t>> table() const;
  bool is_abelian() const;

 private:
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
};

/// Cyclic group of order n (n >= 1), element k = g^k.
FiniteGroup cyclic_group(std::size_t n);

/// Dihedral group of order 2n (n >= 1), element r^k s^j at index k + n·j.
FiniteGroup dihedral_group(std::size_t n);

/// Dicyclic group of order 4n (n >= 2): <a, x | a^{2n} = 1, x² = a^n, x a x⁻¹ = a⁻¹>.
/// order 8 and 16 are the quaternion groups Q8 and Q16. Element a^k x^j at index k + 2n·j.
FiniteGroup dicyclic_group(std::size_t n);

/// Symmetric group on k points (1 <= k <= 6), elements in lexicographic order
/// of their one-line notation; the product p·q is "apply q, then p".
FiniteGroup symmetric_group(std::size_t k);

/// G × H with (g, h) at index g·|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Isomorphic copy with element a renamed perm[a]. Throws InputError unless
/// `perm` is a permutation of 0..order-1.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<std::size_t>& perm);

/// True iff `s` (any order, duplicates allowed) is a subgroup.
bool is_subgroup(const FiniteGroup& g, const Subset& s);

/// Smallest subgroup containing `gens`.
Subset generated_subgroup(const FiniteGroup& g, const Subset& gens);

/// Every subgroup, ordered by (size, elements).
std::vector<Subset> all_subgroups(const FiniteGroup& g);

/// Sorts and validates an index set: entries in range and distinct, else InputError.
Subset normalize_subset(const FiniteGroup& g, Subset s, const char* what);

}  // namespace bigyro
