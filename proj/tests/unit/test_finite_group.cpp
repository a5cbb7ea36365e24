#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "bigyro/errors.hpp"
#include "bigyro/finite_group.hpp"
#include "bigyro/json_io.hpp"
#include "oracles.hpp"

using namespace bigyro;

namespace {

FiniteGroup fixture(const std::string& name) {
  return load_group(read_json_file(std::string(BIGYRO_FIXTURE_DIR) + "/groups/" + name + ".json"));
}

std::size_t power_order(const FiniteGroup& g, std::size_t a) {
  std::size_t k = 1;
  for (std::size_t x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

}  // namespace

TEST(FiniteGroup, SymmetricGroupMatchesPermutationOracle) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const FiniteGroup g = symmetric_group(k);
    const auto perms = oracle::all_perms(k);
    ASSERT_EQ(g.order(), perms.size());
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b) {
        const auto prod = oracle::compose(perms[a], perms[b]);
        EXPECT_EQ(perms[g.mul(a, b)], prod);
      }
  }
}

TEST(FiniteGroup, CyclicTable) {
  const FiniteGroup g = cyclic_group(5);
  EXPECT_EQ(g.mul(3, 4), 2u);
  EXPECT_EQ(g.inv(2), 3u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.name(2), "g^2");
}

TEST(FiniteGroup, DihedralRelations) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const FiniteGroup g = dihedral_group(n);
    const std::size_t r = 1, s = n;
    EXPECT_EQ(power_order(g, r), n);
    EXPECT_EQ(g.mul(s, s), g.identity());
    EXPECT_EQ(g.mul(g.mul(s, r), s), g.inv(r));
    EXPECT_EQ(g.is_abelian(), n <= 2);
  }
}

TEST(FiniteGroup, QuaternionHasOneInvolution) {
  for (std::size_t n : {2, 4}) {
    const FiniteGroup g = dicyclic_group(n);
    std::size_t involutions = 0;
    for (std::size_t a = 0; a < g.order(); ++a)
      if (a != g.identity() && g.mul(a, a) == g.identity()) ++involutions;
    EXPECT_EQ(involutions, 1u);
    EXPECT_FALSE(g.is_abelian());
  }
}

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), InputError);           // repeated entry in a row
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), InputError);           // repeated entry in a column
  EXPECT_THROW(FiniteGroup({{0, 2}, {1, 0}}), InputError);           // out of range
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), InputError);  // only a left identity
  // The smallest loop that is not a group: has an identity, fails associativity.
  EXPECT_THROW(FiniteGroup({{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}}),
               InputError);
  EXPECT_THROW(FiniteGroup({}), InputError);
  EXPECT_THROW(FiniteGroup({{0}}, {"a", "b"}), InputError);
}

TEST(FiniteGroup, Subgroups) {
  EXPECT_EQ(all_subgroups(symmetric_group(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral_group(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(dicyclic_group(2)).size(), 6u);
  EXPECT_EQ(all_subgroups(cyclic_group(12)).size(), 6u);
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_TRUE(is_subgroup(s3, {0, 1}));
  EXPECT_FALSE(is_subgroup(s3, {0, 1, 2}));
  EXPECT_EQ(generated_subgroup(s3, {3}), (Subset{0, 3, 4}));
}

TEST(FiniteGroup, NormalizeSubset) {
  const FiniteGroup g = cyclic_group(4);
  EXPECT_EQ(normalize_subset(g, {3, 0, 1}, "B"), (Subset{0, 1, 3}));
  EXPECT_THROW(normalize_subset(g, {0, 4}, "B"), InputError);
  EXPECT_THROW(normalize_subset(g, {1, 1}, "B"), InputError);
}

TEST(FiniteGroup, ProductsAndRelabeling) {
  const FiniteGroup p = direct_product(dihedral_group(4), cyclic_group(2));
  EXPECT_EQ(p.order(), 16u);
  EXPECT_FALSE(p.is_abelian());
  const FiniteGroup c4 = cyclic_group(4);
  const FiniteGroup r = relabel(c4, {2, 3, 0, 1});
  EXPECT_EQ(r.identity(), 2u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(r.mul((a + 2) % 4, (b + 2) % 4), (c4.mul(a, b) + 2) % 4);
  EXPECT_THROW(relabel(c4, {0, 0, 1, 2}), InputError);
}

TEST(Fixtures, MatchGenerators) {
  for (std::size_t n = 1; n <= 16; ++n)
    EXPECT_EQ(fixture("C" + std::to_string(n)).table(), cyclic_group(n).table());
  for (std::size_t n = 2; n <= 8; ++n)
    EXPECT_EQ(fixture("D" + std::to_string(2 * n)).table(), dihedral_group(n).table());
  EXPECT_EQ(fixture("Q8").table(), dicyclic_group(2).table());
  EXPECT_EQ(fixture("Dic12").table(), dicyclic_group(3).table());
  EXPECT_EQ(fixture("Q16").table(), dicyclic_group(4).table());
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(fixture("S" + std::to_string(k)).table(), symmetric_group(k).table());
  EXPECT_EQ(fixture("D8xC2").table(), direct_product(dihedral_group(4), cyclic_group(2)).table());
}
