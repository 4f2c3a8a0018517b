#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace rctest;

namespace {

std::shared_ptr<const RootSystem> type_a(int n) { return make_root_system(RootSystemType{Family::A, n - 1}); }

TopologyMatrix ones(int n) {
  return {n, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(n, 1))};
}

/// Root permutation induced by a point permutation: alpha_ij -> alpha_pi(i)pi(j).
Perm induced(const RootSystem& rs, const std::vector<int>& pi) {
  const int n = rs.rank() + 1;
  std::vector<int> img(rs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) img[alpha_index(rs, i, j)] = alpha_index(rs, pi[i], pi[j]);
  return Perm(img);
}

}  // namespace

TEST(Topology, MatrixExamples) {
  const auto rs = type_a(3);
  EXPECT_EQ(matrix_from_closed(*rs, RootSet{}), TopologyMatrix::identity(3));
  EXPECT_EQ(matrix_from_closed(*rs, rs->all()), ones(3));
  RootSet a12;
  a12.insert(alpha_index(*rs, 0, 1));
  TopologyMatrix expect = TopologyMatrix::identity(3);
  expect.m[0][1] = 1;
  EXPECT_EQ(matrix_from_closed(*rs, a12), expect);

  EXPECT_TRUE(closed_from_matrix(*rs, TopologyMatrix::identity(3)).empty());
  EXPECT_EQ(closed_from_matrix(*rs, ones(3)), rs->all());
  EXPECT_EQ(closed_from_matrix(*rs, expect), a12);
}

TEST(Topology, AlphaIndexCoordinates) {
  const auto rs = type_a(4);
  EXPECT_EQ(rs->coords(alpha_index(*rs, 0, 1)), (Coords{1, 0, 0}));
  EXPECT_EQ(rs->coords(alpha_index(*rs, 1, 3)), (Coords{0, 1, 1}));
  EXPECT_EQ(rs->coords(alpha_index(*rs, 3, 0)), (Coords{-1, -1, -1}));
  EXPECT_THROW(alpha_index(*rs, 2, 2), Error);
}

TEST(Topology, Errors) {
  const auto rs = type_a(3);
  RootSet bad;
  bad.insert(alpha_index(*rs, 0, 1));
  bad.insert(alpha_index(*rs, 1, 2));
  EXPECT_THROW(matrix_from_closed(*rs, bad), Error);
  TopologyMatrix t = TopologyMatrix::identity(3);
  t.m[0][1] = t.m[1][2] = 1;
  EXPECT_FALSE(is_topology(t));
  EXPECT_THROW(closed_from_matrix(*rs, t), Error);
  t = TopologyMatrix::identity(3);
  t.m[2][2] = 0;
  EXPECT_THROW(closed_from_matrix(*rs, t), Error);
  EXPECT_THROW(matrix_from_closed(RootSystem::build(ty("B3")), RootSet{}), Error);
  EXPECT_THROW(count_labeled(7, false), Error);
  EXPECT_THROW(count_labeled(0, false), Error);
}

TEST(Topology, T0Examples) {
  const auto rs = type_a(3);
  EXPECT_TRUE(is_t0(TopologyMatrix::identity(3)));
  EXPECT_FALSE(is_t0(ones(2)));
  RootSet pm;
  pm.insert(alpha_index(*rs, 0, 1));
  pm.insert(alpha_index(*rs, 1, 0));
  EXPECT_FALSE(is_t0(matrix_from_closed(*rs, pm)));
}

TEST(Topology, RoundTripAndT0EqualsSpecial) {
  for (int n : {2, 3, 4}) {
    const auto rs = type_a(n);
    for (const RootSet& s : all_closed_sets(*rs)) {
      const TopologyMatrix t = matrix_from_closed(*rs, s);
      ASSERT_TRUE(is_topology(t));
      EXPECT_EQ(closed_from_matrix(*rs, t), s);
      EXPECT_EQ(is_t0(t), split_parts(*rs, s).sym.empty());
    }
  }
}

TEST(Topology, SymmetricGroupEquivariance) {
  std::mt19937_64 rng(8);
  const int n = 5;
  const auto rs = type_a(n);
  const auto wa = weyl_group(rs);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(pi.begin(), pi.end(), rng);
    const Perm w = induced(*rs, pi);
    ASSERT_TRUE(wa.group().contains(w));
    const RootSet s = random_closed_set(*rs, rng);
    const TopologyMatrix t = matrix_from_closed(*rs, s);
    const TopologyMatrix tw = matrix_from_closed(*rs, w.image(s));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(tw.m[pi[i]][pi[j]], t.m[i][j]);
  }
}

TEST(Topology, LabeledCountsMatchMatrixOracle) {
  const std::uint64_t all[] = {1, 4, 29, 355};
  const std::uint64_t t0[] = {1, 3, 19, 219};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(brute_force_count_labeled(n, false), all[n - 1]);
    EXPECT_EQ(brute_force_count_labeled(n, true), t0[n - 1]);
    EXPECT_EQ(count_labeled(n, false), brute_force_count_labeled(n, false)) << n;
    EXPECT_EQ(count_labeled(n, true), brute_force_count_labeled(n, true)) << n;
  }
  EXPECT_EQ(count_labeled(5, false), brute_force_count_labeled(5, false));
  EXPECT_EQ(count_labeled(5, true), brute_force_count_labeled(5, true));
}

TEST(Topology, ClassCounts) {
  EXPECT_EQ(count_topologies(2, false).classes, 3u);
  EXPECT_EQ(count_topologies(2, false).labeled, 4u);
  EXPECT_EQ(count_topologies(4, false).classes, 33u);
  EXPECT_EQ(count_topologies(4, true).classes, 16u);
  EXPECT_EQ(count_topologies(4, false).classes, golden_lookup(ty("A3"))->total + 1);
  EXPECT_EQ(count_topologies(4, true).classes, golden_lookup(ty("A3"))->special + 1);
  EXPECT_EQ(count_topologies(1, false).classes, 1u);
}
