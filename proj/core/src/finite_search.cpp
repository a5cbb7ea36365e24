#include <algorithm>
#include <tuple>

#include "bigyro/errors.hpp"
#include "bigyro/finite_engine.hpp"

namespace bigyro {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool commute_elementwise(const FiniteGroup& g, const Subset& a, const Subset& b) {
  for (std::size_t x : a)
    for (std::size_t y : b)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

/// Double cosets H_L g H_R; empty result when some coset is smaller than
/// |H_L|·|H_R| (then no bi-transversal exists for this pair).
std::vector<std::size_t> full_double_cosets(const FiniteGroup& g, const Subset& hl, const Subset& hr,
                                            std::size_t& count) {
  std::vector<std::size_t> coset(g.order(), kNone);
  count = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != kNone) continue;
    std::size_t size = 0;
    for (std::size_t h : hl)
      for (std::size_t r : hr) {
        const std::size_t y = g.mul(g.mul(h, x), r);
        if (coset[y] == kNone) {
          coset[y] = count;
          ++size;
        }
      }
    if (size != hl.size() * hr.size()) return {};
    ++count;
  }
  return coset;
}

/// Depth-first choice of one representative per double coset, closing the
/// partial B under the operations the target level forces on it.
class TransversalSearch {
 public:
  TransversalSearch(const FiniteGroup& g, const Subset& hl, const Subset& hr, std::vector<std::size_t> coset,
                    std::size_t cosets, const SearchOptions& opts)
      : g_(g), coset_(std::move(coset)), chosen_(cosets, kNone), opts_(opts) {
    if (opts.level != SearchLevel::BiTransversal) {
      conjugators_ = hl;
      conjugators_.insert(conjugators_.end(), hr.begin(), hr.end());
    }
  }

  template <class Visit>
  void run(const Visit& visit) {
    if (opts_.require_identity || opts_.level == SearchLevel::BiGyroDecomposition) {
      if (!add(g_.identity())) return;
    }
    dfs(visit);
  }

 private:
  bool twisted() const { return opts_.level == SearchLevel::BiGyroDecomposition; }

  /// Adds `x` and everything it forces. On conflict returns false; the caller
  /// rolls back to its trail mark.
  bool add(std::size_t x) {
    std::vector<std::size_t> work{x};
    while (!work.empty()) {
      const std::size_t y = work.back();
      work.pop_back();
      const std::size_t c = coset_[y];
      if (chosen_[c] == y) continue;
      if (chosen_[c] != kNone) return false;
      chosen_[c] = y;
      trail_.push_back(c);
      members_.push_back(y);

      for (std::size_t h : conjugators_) work.push_back(g_.conj(h, y));
      if (twisted()) {
        work.push_back(g_.inv(y));
        for (std::size_t z : members_) {
          work.push_back(g_.mul(g_.mul(y, z), y));
          work.push_back(g_.mul(g_.mul(z, y), z));
        }
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      chosen_[trail_.back()] = kNone;
      trail_.pop_back();
      members_.pop_back();
    }
  }

  template <class Visit>
  void dfs(const Visit& visit) {
    if (done_) return;
    auto open = std::find(chosen_.begin(), chosen_.end(), kNone);
    if (open == chosen_.end()) {
      Subset b = members_;
      std::sort(b.begin(), b.end());
      done_ = !visit(std::move(b));
      return;
    }
    const std::size_t c = static_cast<std::size_t>(open - chosen_.begin());
    for (std::size_t x = 0; x < g_.order() && !done_; ++x) {
      if (coset_[x] != c) continue;
      const std::size_t mark = trail_.size();
      if (add(x)) dfs(visit);
      rollback(mark);
    }
  }

  const FiniteGroup& g_;
  std::vector<std::size_t> coset_;
  std::vector<std::size_t> chosen_;  // coset -> representative
  std::vector<std::size_t> trail_;   // cosets in order of assignment
  std::vector<std::size_t> members_; // representatives in order of assignment
  Subset conjugators_;
  const SearchOptions& opts_;
  bool done_ = false;
};

}  // namespace

std::vector<SearchHit> search_decompositions(const FiniteGroup& group, const SearchOptions& opts) {
  if (group.order() > opts.max_order) {
    throw InputError("search_decompositions: group order " + std::to_string(group.order()) + " exceeds the bound " +
                     std::to_string(opts.max_order));
  }
  const auto shared = std::make_shared<const FiniteGroup>(group);
  const std::vector<Subset> subgroups = all_subgroups(group);
  std::vector<SearchHit> hits;
  const auto full = [&] { return opts.max_results != 0 && hits.size() >= opts.max_results; };

  for (const Subset& hl : subgroups) {
    for (const Subset& hr : subgroups) {
      if (full()) break;
      if (group.order() % (hl.size() * hr.size()) != 0) continue;
      if (opts.level != SearchLevel::BiTransversal && !commute_elementwise(group, hl, hr)) continue;
      std::size_t cosets = 0;
      std::vector<std::size_t> coset = full_double_cosets(group, hl, hr, cosets);
      if (coset.empty()) continue;

      TransversalSearch search(group, hl, hr, std::move(coset), cosets, opts);
      search.run([&](Subset b) {
        Decomposition d = verify_bitransversal(shared, hl, std::move(b), hr);
        SearchHit hit{std::move(d), false, false};
        try {
          const GyrTables t = build_tables(hit.decomposition);
          if (opts.level == SearchLevel::BiGyroDecomposition &&
              !verify_symmetry(hit.decomposition, t).all_pass()) {
            return true;
          }
          hit.bigyrocommutative = is_bigyrocommutative(t);
          hit.degenerate = is_degenerate(t);
        } catch (const StructuralError&) {
          // Only reachable below the bi-gyrotransversal level; flags stay false.
        }
        hits.push_back(std::move(hit));
        return !full();
      });
    }
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    const Decomposition& a = x.decomposition;
    const Decomposition& b = y.decomposition;
    return std::forward_as_tuple(a.hl().size(), a.hr().size(), a.b(), a.hl(), a.hr()) <
           std::forward_as_tuple(b.hl().size(), b.hr().size(), b.b(), b.hl(), b.hr());
  });
  return hits;
}

}  // namespace bigyro
