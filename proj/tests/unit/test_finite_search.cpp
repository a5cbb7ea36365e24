#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "bigyro/errors.hpp"
#include "bigyro/finite_engine.hpp"
#include "bigyro/json_io.hpp"

using namespace bigyro;

namespace {

FiniteGroup fixture(const std::string& name) {
  return load_group(read_json_file(std::string(BIGYRO_FIXTURE_DIR) + "/groups/" + name + ".json"));
}

struct Counts {
  std::size_t hits;
  std::size_t nondegenerate;
  std::size_t bigyrocommutative;
};

// Frozen from the first full run of the search at the default level.
const std::map<std::string, Counts> kCatalog = {
    {"C1", {1, 0, 1}},     {"C2", {3, 0, 3}},     {"C3", {3, 0, 3}},    {"C4", {3, 0, 3}},
    {"C5", {3, 0, 3}},     {"C6", {9, 0, 9}},     {"C7", {3, 0, 3}},    {"C8", {3, 0, 3}},
    {"C9", {3, 0, 3}},     {"C10", {9, 0, 9}},    {"C11", {3, 0, 3}},   {"C12", {9, 0, 9}},
    {"C13", {3, 0, 3}},    {"C14", {9, 0, 9}},    {"C15", {9, 0, 9}},   {"C16", {3, 0, 3}},
    {"D4", {21, 0, 21}},   {"D6", {9, 0, 8}},     {"D8", {19, 0, 18}},  {"D10", {13, 0, 12}},
    {"D12", {63, 0, 46}},  {"D14", {17, 0, 16}},  {"D16", {35, 0, 18}}, {"Q8", {3, 0, 2}},
    {"Q16", {3, 0, 2}},    {"Dic12", {9, 0, 8}},  {"S1", {1, 0, 1}},    {"S2", {3, 0, 3}},
    {"S3", {9, 0, 8}},     {"D8xC2", {579, 96, 482}},
};

}  // namespace

TEST(Search, FrozenCatalogCounts) {
  for (const auto& [name, want] : kCatalog) {
    SCOPED_TRACE(name);
    const auto hits = search_decompositions(fixture(name));
    Counts got{hits.size(), 0, 0};
    for (const SearchHit& h : hits) {
      got.nondegenerate += h.degenerate ? 0 : 1;
      got.bigyrocommutative += h.bigyrocommutative ? 1 : 0;
    }
    EXPECT_EQ(got.hits, want.hits);
    EXPECT_EQ(got.nondegenerate, want.nondegenerate);
    EXPECT_EQ(got.bigyrocommutative, want.bigyrocommutative);
  }
}

TEST(Search, LevelsAreNested) {
  // Frozen first-run counts per level.
  const std::map<std::string, std::tuple<std::size_t, std::size_t, std::size_t>> levels = {
      {"S3", {39, 15, 9}}, {"D8", {187, 51, 19}}, {"Q8", {43, 19, 3}}};
  for (const auto& [name, want] : levels) {
    const FiniteGroup g = fixture(name);
    SearchOptions bt, bgt;
    bt.level = SearchLevel::BiTransversal;
    bgt.level = SearchLevel::BiGyroTransversal;
    EXPECT_EQ(search_decompositions(g, bt).size(), std::get<0>(want)) << name;
    EXPECT_EQ(search_decompositions(g, bgt).size(), std::get<1>(want)) << name;
    EXPECT_EQ(search_decompositions(g).size(), std::get<2>(want)) << name;
  }
}

TEST(Search, EveryHitMeetsItsLevel) {
  const FiniteGroup g = fixture("D8");
  for (const SearchHit& h : search_decompositions(g)) {
    const Decomposition& d = h.decomposition;
    EXPECT_TRUE(verify_bigyrotransversal(d).all_pass());
    EXPECT_TRUE(verify_twisted_subgroup(g, d.b()).all_pass());
    EXPECT_TRUE(verify_symmetry(d, build_tables(d)).all_pass());
    EXPECT_TRUE(std::binary_search(d.b().begin(), d.b().end(), g.identity()));
  }
}

TEST(Search, OrderedAndDeterministic) {
  const FiniteGroup g = fixture("D12");
  const auto a = search_decompositions(g);
  const auto b = search_decompositions(g);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(catalog_to_json(a).dump(), catalog_to_json(b).dump());
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto& p = a[i - 1].decomposition;
    const auto& q = a[i].decomposition;
    const auto kp = std::make_tuple(p.hl().size(), p.hr().size(), p.b(), p.hl(), p.hr());
    const auto kq = std::make_tuple(q.hl().size(), q.hr().size(), q.b(), q.hl(), q.hr());
    EXPECT_LT(kp, kq);
  }
}

TEST(Search, Options) {
  const FiniteGroup g = fixture("D8");
  SearchOptions capped;
  capped.max_results = 4;
  EXPECT_EQ(search_decompositions(g, capped).size(), 4u);
  SearchOptions small;
  small.max_order = 4;
  EXPECT_THROW(search_decompositions(g, small), InputError);
  SearchOptions raw;
  raw.require_identity = false;
  EXPECT_GE(search_decompositions(g, raw).size(), search_decompositions(g).size());
}

TEST(Search, NonDegenerateInstancesExist) {
  const FiniteGroup g = fixture("D8xC2");
  std::size_t checked = 0;
  for (const SearchHit& h : search_decompositions(g)) {
    if (h.degenerate) continue;
    const TheoremReport th = check_all_theorems(build_tables(h.decomposition));
    EXPECT_TRUE(th.all_pass()) << th.laws.to_text();
    EXPECT_FALSE(th.degenerate);
    if (++checked == 8) break;
  }
  EXPECT_EQ(checked, 8u);
}
