#include "bigyro/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bigyro/errors.hpp"

namespace bigyro {

namespace {

constexpr std::size_t kAssociativityCheckLimit = 128;

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : order_(table.size()), names_(std::move(names)) {
  const std::size_t n = order_;
  if (n == 0) throw InputError("group table is empty");
  if (!names_.empty() && names_.size() != n) {
    throw InputError("group has " + std::to_string(n) + " elements but " + std::to_string(names_.size()) + " names");
  }
  table_.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) throw InputError("group table row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) throw InputError("group table entry out of range at " + triple(r, c, table[r][c]));
      table_.push_back(table[r][c]);
    }
  }

  std::vector<std::size_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t v = mul(r, c);
      if (seen[v] != n) {
        throw InputError("group table is not a Latin square: row " + std::to_string(r) + " repeats " +
                         std::to_string(v) + " at columns " + std::to_string(seen[v]) + " and " + std::to_string(c));
      }
      seen[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = mul(r, c);
      if (seen[v] != n) {
        throw InputError("group table is not a Latin square: column " + std::to_string(c) + " repeats " +
                         std::to_string(v) + " at rows " + std::to_string(seen[v]) + " and " + std::to_string(r));
      }
      seen[v] = r;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no two-sided identity");

  if (n <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw InputError("group table is not associative at (a, b, c) = " + triple(a, b, c));
          }
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
}

std::string FiniteGroup::name(std::size_t a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> out(order_);
  for (std::size_t r = 0; r < order_; ++r) out[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic_group: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InputError("dihedral_group: n must be positive");
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x % n, j = x / n;
    std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
    names[x] = j == 0 ? (k == 0 ? "e" : r) : r + "s";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y % n, i = y / n;
      // s r^l = r^{-l} s
      const std::size_t rot = j == 0 ? (k + l) % n : (k + n - l) % n;
      t[x][y] = rot + n * ((j + i) % 2);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup dicyclic_group(std::size_t n) {
  if (n < 2) throw InputError("dicyclic_group: n must be at least 2");
  const std::size_t m = 2 * n;  // order of a
  const std::size_t order = 2 * m;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x % m, j = x / m;
    std::string a = k == 0 ? "" : k == 1 ? "a" : "a^" + std::to_string(k);
    names[x] = j == 0 ? (k == 0 ? "e" : a) : a + "x";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y % m, i = y / m;
      if (j == 0) {
        t[x][y] = (k + l) % m + m * i;
      } else if (i == 0) {
        // a^k x a^l = a^{k-l} x
        t[x][y] = (k + m - l) % m + m;
      } else {
        // a^k x a^l x = a^{k-l} x² = a^{k-l+n}
        t[x][y] = (k + m - l + n) % m;
      }
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 6) throw InputError("symmetric_group: k must be in 1..6");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  std::vector<std::size_t> comp(k);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t i = 0; i < k; ++i) names[a] += static_cast<char>('1' + perms[a][i]);
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t g1 = x / h.order(), h1 = x % h.order();
    names[x] = "(" + g.name(g1) + "," + h.name(h1) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t g2 = y / h.order(), h2 = y % h.order();
      t[x][y] = g.mul(g1, g2) * h.order() + h.mul(h1, h2);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InputError("relabel: permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t v : perm) {
    if (v >= n || hit[v]) throw InputError("relabel: not a permutation");
    hit[v] = true;
  }
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(g.names().empty() ? 0 : n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!names.empty()) names[perm[a]] = g.names()[a];
    for (std::size_t b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[g.mul(a, b)];
  }
  return FiniteGroup(std::move(t), std::move(names));
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  if (s.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (std::size_t x : s) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.identity()]) return false;
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

Subset generated_subgroup(const FiniteGroup& g, const Subset& gens) {
  std::vector<bool> in(g.order(), false);
  Subset out{g.identity()};
  in[g.identity()] = true;
  // Closing under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t s : gens) {
      const std::size_t y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> all_subgroups(const FiniteGroup& g) {
  std::set<Subset> found;
  for (std::size_t x = 0; x < g.order(); ++x) found.insert(generated_subgroup(g, {x}));
  std::vector<Subset> frontier(found.begin(), found.end());
  const std::vector<Subset> cyclic = frontier;
  // Every subgroup is a join of cyclic subgroups; grow joins until nothing new appears.
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& h : frontier) {
      for (const Subset& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        Subset gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        Subset j = generated_subgroup(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return a.size() < b.size(); });
  return out;
}

Subset normalize_subset(const FiniteGroup& g, Subset s, const char* what) {
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.order()) throw InputError(std::string(what) + ": element " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] == s[i - 1]) throw InputError(std::string(what) + ": duplicate element " + std::to_string(s[i]));
  }
  return s;
}

}  // namespace bigyro
