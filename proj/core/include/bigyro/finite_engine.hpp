#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "bigyro/finite_group.hpp"
#include "bigyro/report.hpp"

namespace bigyro {

/// g = hl · b · hr
struct Factor {
  std::size_t hl;
  std::size_t b;
  std::size_t hr;
};

/// A verified bi-transversal Γ = H_L B H_R: every g factors uniquely as h_ℓ·b·h_r.
/// Only verify_bitransversal constructs one.
class Decomposition {
 public:
  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  const Subset& hl() const noexcept { return hl_; }
  const Subset& b() const noexcept { return b_; }
  const Subset& hr() const noexcept { return hr_; }
  const Factor& fact(std::size_t g) const { return fact_.at(g); }

  /// Position of element `x` within b(), or nullopt.
  std::optional<std::size_t> b_position(std::size_t x) const;

 private:
  friend Decomposition verify_bitransversal(std::shared_ptr<const FiniteGroup>, Subset, Subset, Subset);
  Decomposition() = default;

  std::shared_ptr<const FiniteGroup> group_;
  Subset hl_;
  Subset b_;
  Subset hr_;
  std::vector<Factor> fact_;
  std::vector<std::size_t> b_pos_;  // group element -> position in b_, or b_.size()
};

/// Checks Γ = H_L B H_R is a bi-transversal and builds the factorization map.
/// Throws InputError for empty or out-of-range sets and when hl or hr is not a
/// subgroup; throws VerificationError naming an element with zero or several
/// factorizations.
Decomposition verify_bitransversal(std::shared_ptr<const FiniteGroup> group, Subset hl, Subset b, Subset hr);

/// Transversal maps, induced operation and gyrations of a decomposition. All
/// B-valued entries are positions into `elements` (0..k-1); hl_map and hr_map
/// hold group elements. Three-argument tables are indexed (a, b, x) -> (a·k + b)·k + x.
struct GyrTables {
  std::shared_ptr<const FiniteGroup> group;
  Subset elements;  // B, sorted
  std::size_t k = 0;
  std::vector<std::size_t> hl_map;
  std::vector<std::size_t> hr_map;
  std::vector<std::size_t> op;    // a ⊙ b
  std::vector<std::size_t> lgyr;  // lgyr[a, b](x) = h_r(a, b) x h_r(a, b)⁻¹
  std::vector<std::size_t> rgyr;  // rgyr[a, b](x) = h_ℓ(a, b)⁻¹ x h_ℓ(a, b)
  // Filled by build_bigyrogroup.
  std::vector<std::size_t> op2;  // a ⊕ b = rgyr[b, a](a ⊙ b)
  std::vector<std::size_t> gyr;  // gyr[a, b] = lgyr[a, b] ∘ rgyr[b, a]

  std::size_t pair(std::size_t a, std::size_t b) const noexcept { return a * k + b; }
  std::size_t at(std::size_t a, std::size_t b) const noexcept { return op[a * k + b]; }
  std::size_t at2(std::size_t a, std::size_t b) const noexcept { return op2[a * k + b]; }
  std::size_t L(std::size_t a, std::size_t b, std::size_t x) const noexcept { return lgyr[(a * k + b) * k + x]; }
  std::size_t R(std::size_t a, std::size_t b, std::size_t x) const noexcept { return rgyr[(a * k + b) * k + x]; }
  std::size_t G(std::size_t a, std::size_t b, std::size_t x) const noexcept { return gyr[(a * k + b) * k + x]; }
  bool has_bigyrogroup() const noexcept { return !op2.empty(); }
};

/// H_L and H_R normalize B, and every h_ℓ commutes with every h_r.
Report verify_bigyrotransversal(const Decomposition& d);

/// 1 ∈ B, B closed under inversion and under (a, b) ↦ a·b·a.
Report verify_twisted_subgroup(const FiniteGroup& g, const Subset& b);

/// h_ℓ(a, b)⁻¹ = h_ℓ(b, a) and h_r(a, b)⁻¹ = h_r(b, a) for all a, b ∈ B.
Report verify_symmetry(const Decomposition& d, const GyrTables& t);

/// Fills hl_map, hr_map, op, lgyr, rgyr. Throws StructuralError if a
/// conjugate of a B element by a transversal-map value leaves B.
GyrTables build_tables(const Decomposition& d);

/// Adds the bi-gyrogroup operation and the gyrator table.
GyrTables build_bigyrogroup(GyrTables t);

/// a ⊙ b = (lgyr[a,b] ∘ rgyr[a,b])(b ⊙ a) for all a, b.
bool is_bigyrocommutative(const GyrTables& t);

/// Every left and right gyration is the identity, so (B, ⊙) is a group.
bool is_degenerate(const GyrTables& t);

struct TheoremReport {
  Report laws;                     // every law that must hold
  bool bigyrocommutative = false;  // a ⊙ b = (lgyr[a,b] ∘ rgyr[a,b])(b ⊙ a) for all a, b
  bool gyrocommutative = false;    // a ⊕ b = gyr[a,b](b ⊕ a) for all a, b
  bool degenerate = false;         // every gyration is the identity

  bool all_pass() const { return laws.all_pass(); }
};

/// Exhaustive evaluation over all element tuples of the bi-gyrogroupoid
/// axioms, their consequences for bi-gyrodecompositions, the bi-gyrogroup laws,
/// and the gyrogroup axioms for ⊕ via the generic checker. Residuals count
/// violating tuples. Builds the bi-gyrogroup tables first if absent.
TheoremReport check_all_theorems(const GyrTables& t);

/// Image of `d` under the isomorphism `phi`: group -> *target (phi[a] is the
/// image of a). Throws InputError if phi is not an isomorphism.
Decomposition transport(const Decomposition& d, std::shared_ptr<const FiniteGroup> target,
                        const std::vector<std::size_t>& phi);

enum class SearchLevel {
  BiTransversal,      // uniqueness of factorization only
  BiGyroTransversal,  // plus normalization and commuting subgroups
  BiGyroDecomposition // plus twisted subgroup and symmetric transversal maps
};

struct SearchOptions {
  SearchLevel level = SearchLevel::BiGyroDecomposition;
  bool require_identity = true;  // only consider B containing the group identity
  std::size_t max_order = 64;
  std::size_t max_results = 0;  // 0 = unlimited
};

struct SearchHit {
  Decomposition decomposition;
  bool bigyrocommutative = false;
  bool degenerate = false;
};

/// Enumerates subgroup pairs and transversals B meeting `opts.level`, in
/// order of (|H_L|, |H_R|, B, H_L, H_R). Flags are computed from the
/// decomposition's tables. Throws InputError when the group order exceeds
/// opts.max_order.
std::vector<SearchHit> search_decompositions(const FiniteGroup& group, const SearchOptions& opts = {});

}  // namespace bigyro
