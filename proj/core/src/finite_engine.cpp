#include "bigyro/finite_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "bigyro/errors.hpp"
#include "bigyro/gyrogroup.hpp"

namespace bigyro {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::size_t kGyrationDepth = 3;

/// Counts violations of one law over an exhaustive loop.
class Tally {
 public:
  explicit Tally(std::string law) : law_(std::move(law)) {}

  template <class WitnessFn>
  void check(bool ok, const WitnessFn& witness) {
    ++trials_;
    if (!ok && violations_++ == 0) witness_ = witness();
  }

  void flush(Report& report) const {
    report.add(LawResult{law_, trials_, static_cast<double>(violations_), violations_ == 0, witness_, violations_});
  }

 private:
  std::string law_;
  std::size_t trials_ = 0;
  std::size_t violations_ = 0;
  std::string witness_;
};

std::string tuple_str(std::initializer_list<std::string> parts) {
  std::string s = "(";
  for (const auto& p : parts) {
    if (s.size() > 1) s += ", ";
    s += p;
  }
  return s + ")";
}

using Perm = std::vector<std::size_t>;

/// Distinct permutations with dense ids.
class PermSet {
 public:
  std::size_t intern(Perm p) {
    auto [it, inserted] = ids_.emplace(std::move(p), perms_.size());
    if (inserted) perms_.push_back(it->first);
    return it->second;
  }
  std::size_t find(const Perm& p) const {
    auto it = ids_.find(p);
    return it == ids_.end() ? kNone : it->second;
  }
  const Perm& operator[](std::size_t id) const { return perms_[id]; }
  std::size_t size() const noexcept { return perms_.size(); }
  const std::vector<Perm>& all() const noexcept { return perms_; }

 private:
  std::map<Perm, std::size_t> ids_;
  std::vector<Perm> perms_;
};

Perm identity_perm(std::size_t k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (p ∘ q)(x) = p(q(x))
Perm compose(const Perm& p, const Perm& q) {
  Perm out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
  return out;
}

bool is_bijection(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Perm invert(const Perm& p) {
  Perm out(p.size(), kNone);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] < p.size()) out[p[x]] = x;
  return out;
}

Perm slice(const std::vector<std::size_t>& table, std::size_t k, std::size_t a, std::size_t b) {
  const auto first = table.begin() + static_cast<std::ptrdiff_t>((a * k + b) * k);
  return Perm(first, first + static_cast<std::ptrdiff_t>(k));
}

bool all_identity(const std::vector<std::size_t>& table, std::size_t k) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] != i % k) return false;
  return true;
}

bool bigyrocommutative_law(const GyrTables& t) {
  for (std::size_t a = 0; a < t.k; ++a)
    for (std::size_t b = 0; b < t.k; ++b)
      if (t.at(a, b) != t.L(a, b, t.R(a, b, t.at(b, a)))) return false;
  return true;
}

}  // namespace

std::optional<std::size_t> Decomposition::b_position(std::size_t x) const {
  if (x >= b_pos_.size() || b_pos_[x] == b_.size()) return std::nullopt;
  return b_pos_[x];
}

Decomposition verify_bitransversal(std::shared_ptr<const FiniteGroup> group, Subset hl, Subset b, Subset hr) {
  if (!group) throw InputError("verify_bitransversal: no group");
  const FiniteGroup& g = *group;
  hl = normalize_subset(g, std::move(hl), "H_L");
  b = normalize_subset(g, std::move(b), "B");
  hr = normalize_subset(g, std::move(hr), "H_R");
  if (hl.empty() || b.empty() || hr.empty()) throw InputError("verify_bitransversal: H_L, B and H_R must be nonempty");
  if (!is_subgroup(g, hl)) throw InputError("verify_bitransversal: H_L is not a subgroup");
  if (!is_subgroup(g, hr)) throw InputError("verify_bitransversal: H_R is not a subgroup");

  const std::size_t n = g.order();
  std::vector<std::size_t> count(n, 0);
  std::vector<Factor> first(n, Factor{kNone, kNone, kNone});
  std::vector<Factor> second(n, Factor{kNone, kNone, kNone});
  for (std::size_t h : hl)
    for (std::size_t x : b)
      for (std::size_t r : hr) {
        const std::size_t p = g.mul(g.mul(h, x), r);
        if (count[p]++ == 0) {
          first[p] = {h, x, r};
        } else if (count[p] == 2) {
          second[p] = {h, x, r};
        }
      }
  for (std::size_t p = 0; p < n; ++p) {
    if (count[p] == 0) {
      throw VerificationError("not a bi-transversal: element " + g.name(p) + " has no factorization h_l*b*h_r");
    }
    if (count[p] > 1) {
      auto f = [&](const Factor& x) { return g.name(x.hl) + "*" + g.name(x.b) + "*" + g.name(x.hr); };
      throw VerificationError("not a bi-transversal: element " + g.name(p) + " has " + std::to_string(count[p]) +
                              " factorizations, e.g. " + f(first[p]) + " and " + f(second[p]));
    }
  }

  Decomposition d;
  d.group_ = std::move(group);
  d.fact_ = std::move(first);
  d.b_pos_.assign(n, b.size());
  for (std::size_t i = 0; i < b.size(); ++i) d.b_pos_[b[i]] = i;
  d.hl_ = std::move(hl);
  d.b_ = std::move(b);
  d.hr_ = std::move(hr);
  return d;
}

Report verify_bigyrotransversal(const Decomposition& d) {
  const FiniteGroup& g = d.group();
  Report report;
  auto normalizes = [&](const char* law, const Subset& h_set) {
    Tally t(law);
    for (std::size_t h : h_set)
      for (std::size_t x : d.b()) {
        const std::size_t y = g.conj(h, x);
        t.check(d.b_position(y).has_value(), [&] {
          return "(h, x, h*x*h^-1) = " + tuple_str({g.name(h), g.name(x), g.name(y)}) + ", conjugate not in B";
        });
      }
    t.flush(report);
  };
  normalizes("H_L_normalizes_B", d.hl());
  normalizes("H_R_normalizes_B", d.hr());

  Tally commute("H_L_commutes_with_H_R");
  for (std::size_t h : d.hl())
    for (std::size_t r : d.hr())
      commute.check(g.mul(h, r) == g.mul(r, h), [&] { return "(h_l, h_r) = " + tuple_str({g.name(h), g.name(r)}); });
  commute.flush(report);
  return report;
}

Report verify_twisted_subgroup(const FiniteGroup& g, const Subset& b_in) {
  const Subset b = normalize_subset(g, b_in, "B");
  std::vector<bool> in(g.order(), false);
  for (std::size_t x : b) in[x] = true;

  Report report;
  Tally one("contains_identity");
  one.check(in[g.identity()], [&] { return "identity " + g.name(g.identity()) + " not in B"; });
  one.flush(report);

  Tally inverse("inverse_closed");
  for (std::size_t x : b)
    inverse.check(in[g.inv(x)], [&] { return "(b, b^-1) = " + tuple_str({g.name(x), g.name(g.inv(x))}); });
  inverse.flush(report);

  Tally aba("aba_closed");
  for (std::size_t a : b)
    for (std::size_t c : b) {
      const std::size_t y = g.mul(g.mul(a, c), a);
      aba.check(in[y], [&] { return "(a, b, aba) = " + tuple_str({g.name(a), g.name(c), g.name(y)}); });
    }
  aba.flush(report);
  return report;
}

GyrTables build_tables(const Decomposition& d) {
  const FiniteGroup& g = d.group();
  GyrTables t;
  t.group = d.group_ptr();
  t.elements = d.b();
  t.k = d.b().size();
  const std::size_t k = t.k;
  t.hl_map.resize(k * k);
  t.hr_map.resize(k * k);
  t.op.resize(k * k);
  t.lgyr.resize(k * k * k);
  t.rgyr.resize(k * k * k);

  auto position = [&](std::size_t y, std::size_t h) {
    auto p = d.b_position(y);
    if (!p) {
      throw StructuralError("conjugating a B element by " + g.name(h) + " gives " + g.name(y) + ", which is not in B");
    }
    return *p;
  };

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Factor& f = d.fact(g.mul(t.elements[a], t.elements[b]));
      const std::size_t ab = t.pair(a, b);
      t.hl_map[ab] = f.hl;
      t.hr_map[ab] = f.hr;
      t.op[ab] = *d.b_position(f.b);
      const std::size_t hl_inv = g.inv(f.hl);
      for (std::size_t x = 0; x < k; ++x) {
        t.lgyr[ab * k + x] = position(g.conj(f.hr, t.elements[x]), f.hr);
        t.rgyr[ab * k + x] = position(g.conj(hl_inv, t.elements[x]), hl_inv);
      }
    }
  return t;
}

Report verify_symmetry(const Decomposition& d, const GyrTables& t) {
  const FiniteGroup& g = d.group();
  Report report;
  auto symmetric = [&](const char* law, const std::vector<std::size_t>& map) {
    Tally tally(law);
    for (std::size_t a = 0; a < t.k; ++a)
      for (std::size_t b = 0; b < t.k; ++b)
        tally.check(g.inv(map[t.pair(a, b)]) == map[t.pair(b, a)],
                    [&] { return "(a, b) = " + tuple_str({g.name(t.elements[a]), g.name(t.elements[b])}); });
    tally.flush(report);
  };
  symmetric("h_left_symmetric", t.hl_map);
  symmetric("h_right_symmetric", t.hr_map);
  return report;
}

GyrTables build_bigyrogroup(GyrTables t) {
  const std::size_t k = t.k;
  t.op2.resize(k * k);
  t.gyr.resize(k * k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      t.op2[t.pair(a, b)] = t.R(b, a, t.at(a, b));
      for (std::size_t x = 0; x < k; ++x) t.gyr[t.pair(a, b) * k + x] = t.L(a, b, t.R(b, a, x));
    }
  return t;
}

TheoremReport check_all_theorems(const GyrTables& input) {
  const GyrTables t = input.has_bigyrogroup() ? input : build_bigyrogroup(input);
  const std::size_t k = t.k;
  const FiniteGroup& grp = *t.group;
  auto nm = [&](std::size_t x) { return grp.name(t.elements[x]); };
  auto w2 = [&](std::size_t a, std::size_t b) { return "(a, b) = " + tuple_str({nm(a), nm(b)}); };
  auto w3 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return "(a, b, c) = " + tuple_str({nm(a), nm(b), nm(c)});
  };

  TheoremReport out;
  Report& rep = out.laws;

  // Identity and left inverses, read off the table.
  std::size_t zero = kNone;
  for (std::size_t e = 0; e < k && zero == kNone; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) zero = e;
  }
  {
    Tally bg1("BG1.identity");
    bg1.check(zero != kNone, [] { return std::string("no two-sided identity"); });
    bg1.flush(rep);
  }
  if (zero == kNone) zero = 0;

  std::vector<std::size_t> neg(k, kNone);
  {
    Tally bg2("BG2.left_inverse");
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t x = 0; x < k && neg[a] == kNone; ++x)
        if (t.at(x, a) == zero) neg[a] = x;
      bg2.check(neg[a] != kNone, [&] { return "a = " + nm(a) + " has no left inverse"; });
      if (neg[a] == kNone) neg[a] = a;
    }
    bg2.flush(rep);
  }

  // Gyrations as interned permutations.
  PermSet lset, rset, gset;
  std::vector<std::size_t> lid(k * k), rid(k * k), gid(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      lid[t.pair(a, b)] = lset.intern(slice(t.lgyr, k, a, b));
      rid[t.pair(a, b)] = rset.intern(slice(t.rgyr, k, a, b));
      gid[t.pair(a, b)] = gset.intern(slice(t.gyr, k, a, b));
    }
  auto Lid = [&](std::size_t a, std::size_t b) { return lid[t.pair(a, b)]; };
  auto Rid = [&](std::size_t a, std::size_t b) { return rid[t.pair(a, b)]; };
  const std::size_t l_id = lset.find(identity_perm(k));
  const std::size_t r_id = rset.find(identity_perm(k));

  auto automorphism = [&](const char* law, const PermSet& set, const std::vector<std::size_t>& op) {
    Tally tally(law);
    for (std::size_t p = 0; p < set.size(); ++p) {
      const Perm& f = set[p];
      const bool bij = is_bijection(f);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          tally.check(bij && f[op[x * k + y]] == op[f[x] * k + f[y]], [&] {
            return std::string(bij ? "map fails to preserve the operation at " : "map is not a bijection; ") +
                   "(x, y) = " + tuple_str({nm(x), nm(y)});
          });
    }
    tally.flush(rep);
  };
  automorphism("BG3.lgyr_automorphism", lset, t.op);
  automorphism("BG3.rgyr_automorphism", rset, t.op);

  {
    Tally law("BG3.bigyroassociative");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          law.check(t.at(t.at(a, b), t.L(a, b, c)) == t.at(t.R(b, c, a), t.at(b, c)), [&] { return w3(a, b, c); });
    law.flush(rep);
  }
  {
    Tally r4("BG4a.rgyr_reduction"), l4("BG4b.lgyr_reduction");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t la = t.L(a, b, a), ab = t.at(a, b);
        r4.check(Rid(a, b) == Rid(la, ab), [&] { return w2(a, b); });
        l4.check(Lid(a, b) == Lid(la, ab), [&] { return w2(a, b); });
      }
    r4.flush(rep);
    l4.flush(rep);
  }
  {
    Tally law("BG5.trivial_at_zero");
    for (std::size_t a = 0; a < k; ++a)
      law.check(Lid(a, zero) == l_id && Rid(a, zero) == r_id, [&] { return "a = " + nm(a); });
    law.flush(rep);
  }

  // Inverse maps of each distinct gyration.
  std::vector<Perm> linv(lset.size()), rinv(rset.size());
  for (std::size_t p = 0; p < lset.size(); ++p) linv[p] = invert(lset[p]);
  for (std::size_t p = 0; p < rset.size(); ++p) rinv[p] = invert(rset[p]);

  {
    Tally left("left_bigyroassociative"), right("right_bigyroassociative");
    Tally left_inv("left_bigyroassociative.inversion_form"), right_inv("right_bigyroassociative.inversion_form");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t a_bc = t.at(a, t.at(b, c));
          const std::size_t ab_c = t.at(t.at(a, b), c);
          const std::size_t ar = rinv[Rid(b, c)][a];
          left.check(ar < k && a_bc == t.at(t.at(ar, b), t.L(ar, b, c)), [&] { return w3(a, b, c); });
          const std::size_t cl = linv[Lid(a, b)][c];
          right.check(cl < k && ab_c == t.at(t.R(b, cl, a), t.at(b, cl)), [&] { return w3(a, b, c); });
          const std::size_t ar2 = t.R(c, b, a);
          left_inv.check(a_bc == t.at(t.at(ar2, b), t.L(ar2, b, c)), [&] { return w3(a, b, c); });
          const std::size_t cl2 = t.L(b, a, c);
          right_inv.check(ab_c == t.at(t.R(b, cl2, a), t.at(b, cl2)), [&] { return w3(a, b, c); });
        }
    left.flush(rep);
    right.flush(rep);
    left_inv.flush(rep);
    right_inv.flush(rep);
  }

  {
    Tally fixes("gyration_fixes_zero"), equal("gyration_at_equal_args"), inverse_pair("gyration_at_inverse_pair");
    Tally right_inv("left_inverse_is_right_inverse"), dbl("double_inverse"), commutes("gyration_commutes_with_inverse");
    Tally lcancel("left_cancellation"), rcancel("right_cancellation"), inversion("gyration_inversion_law");
    Tally even("even_gyrations"), id_agree("identity_is_group_identity"), inv_agree("inverse_is_group_inverse");

    id_agree.check(t.elements[zero] == grp.identity(), [&] { return "identity of B is " + nm(zero); });
    for (std::size_t a = 0; a < k; ++a) {
      equal.check(Lid(a, a) == l_id && Rid(a, a) == r_id, [&] { return "a = " + nm(a); });
      const std::size_t na = neg[a];
      inverse_pair.check(Lid(na, a) == l_id && Lid(a, na) == l_id && Rid(na, a) == r_id && Rid(a, na) == r_id,
                         [&] { return "a = " + nm(a); });
      right_inv.check(t.at(a, na) == zero, [&] { return "a = " + nm(a); });
      dbl.check(neg[na] == a, [&] { return "a = " + nm(a); });
      inv_agree.check(t.elements[na] == grp.inv(t.elements[a]), [&] { return "a = " + nm(a); });
      for (std::size_t b = 0; b < k; ++b) {
        fixes.check(t.L(a, b, zero) == zero && t.R(a, b, zero) == zero, [&] { return w2(a, b); });
        lcancel.check(t.at(neg[t.R(a, b, a)], t.at(a, b)) == b, [&] { return w2(a, b); });
        rcancel.check(t.at(t.at(a, b), neg[t.L(a, b, b)]) == a, [&] { return w2(a, b); });
        inversion.check(linv[Lid(a, b)] == lset[Lid(b, a)] && rinv[Rid(a, b)] == rset[Rid(b, a)],
                        [&] { return w2(a, b); });
        even.check(Lid(neg[a], neg[b]) == Lid(a, b) && Rid(neg[a], neg[b]) == Rid(a, b), [&] { return w2(a, b); });
        for (std::size_t c = 0; c < k; ++c)
          commutes.check(t.L(a, b, neg[c]) == neg[t.L(a, b, c)] && t.R(a, b, neg[c]) == neg[t.R(a, b, c)],
                         [&] { return w3(a, b, c); });
      }
    }
    for (Tally* x : {&fixes, &equal, &inverse_pair, &right_inv, &dbl, &commutes, &lcancel, &rcancel, &inversion,
                     &even, &id_agree, &inv_agree})
      x->flush(rep);
  }

  {
    Tally law("left_right_gyrations_commute");
    for (std::size_t p = 0; p < lset.size(); ++p)
      for (std::size_t q = 0; q < rset.size(); ++q)
        law.check(compose(lset[p], rset[q]) == compose(rset[q], lset[p]),
                  [&] { return "left gyration #" + std::to_string(p) + ", right gyration #" + std::to_string(q); });
    law.flush(rep);
  }

  {
    Tally rrel("rgyr_composite_relation"), lrel("lgyr_composite_relation");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t ar = t.R(b, c, a), bc = t.at(b, c), ab = t.at(a, b), cl = t.L(a, b, c);
          rrel.check(compose(rset[Rid(ar, bc)], rset[Rid(b, c)]) == compose(rset[Rid(ab, cl)], rset[Rid(a, b)]),
                     [&] { return w3(a, b, c); });
          lrel.check(compose(lset[Lid(ab, cl)], lset[Lid(a, b)]) == compose(lset[Lid(ar, bc)], lset[Lid(b, c)]),
                     [&] { return w3(a, b, c); });
        }
    rrel.flush(rep);
    lrel.flush(rep);
  }

  // Compositions of up to three gyrations of one side.
  auto compositions = [&](const PermSet& gens) {
    std::set<Perm> all{identity_perm(k)};
    std::vector<Perm> layer{identity_perm(k)};
    for (std::size_t depth = 0; depth < kGyrationDepth; ++depth) {
      std::vector<Perm> next;
      for (const Perm& p : gens.all())
        for (const Perm& q : layer) {
          Perm c = compose(p, q);
          if (all.insert(c).second) next.push_back(std::move(c));
        }
      layer = std::move(next);
    }
    return std::vector<Perm>(all.begin(), all.end());
  };
  {
    const std::vector<Perm> rhos = compositions(rset);
    const std::vector<Perm> lambdas = compositions(lset);
    Tally inv_l("gyration_invariance.lgyr_under_rgyr"), inv_r("gyration_invariance.rgyr_under_lgyr");
    Tally com_r("gyration_commuting_relation.rgyr"), com_l("gyration_commuting_relation.lgyr");
    for (const Perm& rho : rhos)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          inv_l.check(Lid(a, b) == Lid(rho[a], rho[b]), [&] { return w2(a, b); });
          com_r.check(compose(rho, rset[Rid(a, b)]) == compose(rset[Rid(rho[a], rho[b])], rho),
                      [&] { return w2(a, b); });
        }
    for (const Perm& lam : lambdas)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          inv_r.check(Rid(a, b) == Rid(lam[a], lam[b]), [&] { return w2(a, b); });
          com_l.check(compose(lam, lset[Lid(a, b)]) == compose(lset[Lid(lam[a], lam[b])], lam),
                      [&] { return w2(a, b); });
        }
    inv_l.flush(rep);
    inv_r.flush(rep);
    com_r.flush(rep);
    com_l.flush(rep);
  }

  {
    Tally lred("lgyr_reduction"), rred("rgyr_reduction"), bired("bigyration_reduction");
    Tally with_inv("reduction_with_inverse"), with_neg("reduction_with_negative");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t ab = t.at(a, b), ba = t.at(b, a);
        const auto w = [&] { return w2(a, b); };
        lred.check(Lid(a, b) == Lid(t.R(b, a, a), ba) && Lid(a, b) == Lid(ab, t.R(a, b, b)), w);
        rred.check(Rid(a, b) == Rid(t.L(a, b, a), ab) && Rid(a, b) == Rid(ba, t.L(b, a, b)), w);
        bired.check(Lid(a, b) == Lid(t.L(a, b, a), ab) && Rid(a, b) == Rid(ab, t.R(a, b, b)), w);
        const std::size_t nlb = neg[t.L(a, b, b)], nra = neg[t.R(a, b, a)];
        with_inv.check(Rid(a, b) == Rid(nlb, ab) && Lid(a, b) == Lid(nlb, ab) && Rid(a, b) == Rid(ab, nra) &&
                           Lid(a, b) == Lid(ab, nra),
                       w);
        const std::size_t s = t.R(b, a, ab);
        with_neg.check(Lid(a, b) == Lid(s, neg[a]) && Rid(a, b) == Rid(s, neg[a]), w);
      }
    for (Tally* x : {&lred, &rred, &bired, &with_inv, &with_neg}) x->flush(rep);
  }

  automorphism("gyr_automorphism", gset, t.op);

  // The bi-gyrogroup operation.
  {
    Tally ident("bigyrogroup.identity"), inverse("bigyrogroup.inverse");
    for (std::size_t a = 0; a < k; ++a) {
      ident.check(t.at2(zero, a) == a && t.at2(a, zero) == a, [&] { return "a = " + nm(a); });
      inverse.check(t.at2(neg[a], a) == zero && t.at2(a, neg[a]) == zero, [&] { return "a = " + nm(a); });
    }
    ident.flush(rep);
    inverse.flush(rep);
  }
  automorphism("bigyrogroup.lgyr_automorphism", lset, t.op2);
  automorphism("bigyrogroup.rgyr_automorphism", rset, t.op2);
  automorphism("bigyrogroup.gyr_automorphism", gset, t.op2);
  {
    Tally rel("bigyrogroup.rgyr_relation"), left("bigyrogroup.left_bigyroassociative");
    Tally right("bigyrogroup.right_bigyroassociative");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          const auto w = [&] { return w3(a, b, c); };
          rel.check(compose(rset[Rid(t.G(a, b, c), t.at2(a, b))], rset[Rid(b, a)]) ==
                        compose(rset[Rid(t.at2(b, c), a)], rset[Rid(c, b)]),
                    w);
          left.check(t.at2(a, t.at2(b, c)) == t.at2(t.at2(a, b), t.L(a, b, t.R(b, a, c))), w);
          right.check(t.at2(t.at2(a, b), c) == t.at2(a, t.at2(b, t.L(b, a, t.R(a, b, c)))), w);
        }
    rel.flush(rep);
    left.flush(rep);
    right.flush(rep);
  }
  {
    Tally lred("bigyrogroup.lgyr_reduction"), rred("bigyrogroup.rgyr_reduction");
    Tally gright("gyrator.right_gyroassociative"), gred("gyrator.right_reduction");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t ab = t.at2(a, b), ba = t.at2(b, a);
        const auto w = [&] { return w2(a, b); };
        lred.check(Lid(a, b) == Lid(ab, b) && Lid(a, b) == Lid(a, ba), w);
        rred.check(Rid(a, b) == Rid(ab, b) && Rid(a, b) == Rid(a, ba), w);
        gred.check(gid[t.pair(a, b)] == gid[t.pair(a, ba)], w);
        for (std::size_t c = 0; c < k; ++c)
          gright.check(t.at2(ab, c) == t.at2(a, t.at2(b, t.G(b, a, c))), [&] { return w3(a, b, c); });
      }
    lred.flush(rep);
    rred.flush(rep);
    gright.flush(rep);
    gred.flush(rep);
  }

  // Independent gyrogroup checker on (B, ⊕) with the gyrator table.
  {
    GyrogroupModel<std::size_t> model{
        [&](const std::size_t& a, const std::size_t& b) { return t.at2(a, b); },
        [&](const std::size_t& a) { return neg[a]; },
        zero,
        [&](const std::size_t& a, const std::size_t& b, const std::size_t& c) { return t.G(a, b, c); },
        [](const std::size_t& a, const std::size_t& b) { return a == b ? 0.0 : 1.0; },
    };
    Report generic;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          for (std::size_t d = 0; d < k; ++d)
            check_gyrogroup_sample(model, a, b, c, d, 0.5, generic, "gyrogroup.", [&] {
              return "(a, b, c, d) = " + tuple_str({nm(a), nm(b), nm(c), nm(d)});
            });
    out.gyrocommutative = true;
    for (LawResult r : generic.laws()) {
      r.max_residual = static_cast<double>(r.violations);
      if (r.law == "gyrogroup.gyrocommutative") {
        out.gyrocommutative = r.pass;
        continue;
      }
      rep.add(std::move(r));
    }
  }

  out.bigyrocommutative = is_bigyrocommutative(t);
  out.degenerate = is_degenerate(t);
  return out;
}

Decomposition transport(const Decomposition& d, std::shared_ptr<const FiniteGroup> target,
                        const std::vector<std::size_t>& phi) {
  if (!target) throw InputError("transport: no target group");
  const FiniteGroup& g = d.group();
  const std::size_t n = g.order();
  if (target->order() != n || phi.size() != n) throw InputError("transport: order mismatch");
  std::vector<bool> hit(n, false);
  for (std::size_t v : phi) {
    if (v >= n || hit[v]) throw InputError("transport: map is not a bijection");
    hit[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (phi[g.mul(a, b)] != target->mul(phi[a], phi[b])) {
        throw InputError("transport: map is not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) +
                         ")");
      }
  auto image = [&](const Subset& s) {
    Subset out;
    for (std::size_t x : s) out.push_back(phi[x]);
    return out;
  };
  return verify_bitransversal(std::move(target), image(d.hl()), image(d.b()), image(d.hr()));
}

bool is_bigyrocommutative(const GyrTables& t) { return bigyrocommutative_law(t); }
bool is_degenerate(const GyrTables& t) { return all_identity(t.lgyr, t.k) && all_identity(t.rgyr, t.k); }

}  // namespace bigyro
