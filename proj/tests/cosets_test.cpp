#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gelfand/cosets.hpp"
#include "gelfand/error.hpp"
#include "gelfand/reflections.hpp"

namespace gelfand {
namespace {

Embedding standard_pair(GroupKind kind, int n, int q) {
  const auto f = Field::of_order(q);
  return embed_standard(enumerate(kind, n, f), enumerate(kind, n + 1, f));
}

// Oracle: double cosets as explicit sets {h x k} over the full subgroups.
std::size_t brute_double_coset_count(const Embedding& emb, bool mod_center) {
  const GroupTable& g = *emb.big;
  std::vector<ElemId> right(emb.map.begin(), emb.map.end());
  if (mod_center) {
    std::set<ElemId> zh;
    for (ElemId z : center_ids(g)) {
      for (ElemId h : emb.map) zh.insert(g.multiply(z, h));
    }
    right.assign(zh.begin(), zh.end());
  }
  std::vector<char> covered(g.order(), 0);
  std::size_t count = 0;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    ++count;
    for (ElemId h : emb.map) {
      for (ElemId k : right) covered[g.multiply(g.multiply(h, x), k)] = 1;
    }
  }
  return count;
}

TEST(Cosets, TrivialSubgroupGivesSingletons) {
  const auto emb = standard_pair(GroupKind::GL, 1, 2);
  const auto d = double_cosets(emb.big, emb, false);
  EXPECT_EQ(d.count(), 6u);
  for (ElemId x = 0; x < 6; ++x) EXPECT_EQ(d.reps[d.coset_of[x]], x);
}

TEST(Cosets, GL2F2TransposeMovesExactlyTheTwoNonSymmetricElements) {
  const auto emb = standard_pair(GroupKind::GL, 1, 2);
  const auto a = involution_action(double_cosets(emb.big, emb, true));
  EXPECT_EQ(a.nonfixed_count, 2u);
  EXPECT_EQ(a.fixed_count, 4u);
  std::set<std::string> moved;
  for (CosetId c : a.nonfixed()) moved.insert(to_literal(emb.big->element(a.decomp.reps[c])));
  EXPECT_EQ(moved, (std::set<std::string>{"1,1;0,1", "1,0;1,1"}));
  for (ElemId x = 0; x < emb.big->order(); ++x) {
    const bool symmetric = is_symmetric(emb.big->element(x));
    EXPECT_EQ(a.perm[a.decomp.coset_of[x]] == a.decomp.coset_of[x], symmetric);
  }
}

TEST(Cosets, GL3F2HasKEqualOne) {
  const auto emb = standard_pair(GroupKind::GL, 2, 2);
  const auto a = involution_action(double_cosets(emb.big, emb, true));
  EXPECT_EQ(count_nonfixed(a), 2u);
  EXPECT_EQ(a.k(), 1u);
}

TEST(Cosets, OrthogonalCosetsAreAllTransposeFixed) {
  const auto emb = standard_pair(GroupKind::O, 2, 3);
  const auto a = involution_action(double_cosets(emb.big, emb, false));
  EXPECT_EQ(count_nonfixed(a), 0u);
  EXPECT_EQ(a.fixed_count, a.decomp.count());
}

TEST(Cosets, OrthogonalCountMatchesOrbitsOnSpherePairs) {
  // H\G/H is in bijection with G-orbits on (G/H) x (G/H), and G/H is the
  // unit sphere (H is the stabilizer of the last basis vector).
  const auto emb = standard_pair(GroupKind::O, 2, 3);
  const auto d = double_cosets(emb.big, emb, false);
  const GroupTable& g = *emb.big;
  const auto sphere = sphere_points(3, g.field());
  ASSERT_EQ(sphere.size(), g.order() / emb.small->order());

  auto index_of = [&](const Matrix& col) {
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      if (Matrix::column(g.field(), sphere[i].coords) == col) return i;
    }
    ADD_FAILURE() << "image left the sphere";
    return std::size_t{0};
  };
  const std::size_t s = sphere.size();
  std::vector<char> seen(s * s, 0);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < s * s; ++start) {
    if (seen[start]) continue;
    ++orbits;
    const std::size_t u = start / s;
    const std::size_t v = start % s;
    for (ElemId x = 0; x < g.order(); ++x) {
      const Matrix m = g.element(x);
      const auto gu = index_of(m * Matrix::column(g.field(), sphere[u].coords));
      const auto gv = index_of(m * Matrix::column(g.field(), sphere[v].coords));
      seen[gu * s + gv] = 1;
    }
  }
  EXPECT_EQ(d.count(), orbits);
}

TEST(Cosets, SelfPairHasOneCoset) {
  const auto f = build_field(3, 1);
  const auto g = enumerate_gl(2, f);
  std::vector<ElemId> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  const Embedding self{g, g, all};
  const auto a = involution_action(double_cosets(g, self, false));
  EXPECT_EQ(a.decomp.count(), 1u);
  EXPECT_EQ(count_nonfixed(a), 0u);
}

class CosetGrid : public ::testing::TestWithParam<std::tuple<GroupKind, int, int>> {};

TEST_P(CosetGrid, MatchesBruteForceAndRefines) {
  auto [kind, n, q] = GetParam();
  const auto emb = standard_pair(kind, n, q);
  const auto plain = double_cosets(emb.big, emb, false);
  const auto reduced = double_cosets(emb.big, emb, true);
  if (emb.big->order() <= 500) {
    EXPECT_EQ(plain.count(), brute_double_coset_count(emb, false));
    EXPECT_EQ(reduced.count(), brute_double_coset_count(emb, true));
  }
  // Coset ids ordered by minimal elements.
  for (CosetId c = 0; c < plain.count(); ++c) {
    EXPECT_EQ(plain.coset_of[plain.reps[c]], c);
    if (c > 0) EXPECT_LT(plain.reps[c - 1], plain.reps[c]);
  }
  for (ElemId x = 0; x < emb.big->order(); ++x) EXPECT_LE(plain.reps[plain.coset_of[x]], x);

  // Every reduced coset is a union of at most |Z| plain cosets.
  const std::size_t z = center_ids(*emb.big).size();
  std::vector<std::set<CosetId>> parts(reduced.count());
  for (ElemId x = 0; x < emb.big->order(); ++x) parts[reduced.coset_of[x]].insert(plain.coset_of[x]);
  std::size_t total = 0;
  for (const auto& p : parts) {
    EXPECT_LE(p.size(), z);
    total += p.size();
  }
  EXPECT_EQ(total, plain.count());

  const auto act = involution_action(reduced);
  EXPECT_EQ(act.nonfixed_count % 2, 0u);
  for (CosetId c = 0; c < act.perm.size(); ++c) EXPECT_EQ(act.perm[act.perm[c]], c);
  EXPECT_EQ(act.k(), kind == GroupKind::GL ? 1u : 0u);
}

INSTANTIATE_TEST_SUITE_P(
    Grid, CosetGrid,
    ::testing::Values(std::make_tuple(GroupKind::GL, 1, 2), std::make_tuple(GroupKind::GL, 1, 3),
                      std::make_tuple(GroupKind::GL, 1, 4), std::make_tuple(GroupKind::GL, 1, 5),
                      std::make_tuple(GroupKind::GL, 2, 2), std::make_tuple(GroupKind::GL, 2, 3),
                      std::make_tuple(GroupKind::GL, 3, 2), std::make_tuple(GroupKind::O, 1, 3),
                      std::make_tuple(GroupKind::O, 2, 3), std::make_tuple(GroupKind::O, 1, 5),
                      std::make_tuple(GroupKind::O, 2, 5)));

TEST(Cosets, RejectsForeignEmbedding) {
  const auto emb = standard_pair(GroupKind::GL, 1, 3);
  const auto other = enumerate_gl(2, build_field(3, 1));
  EXPECT_THROW(double_cosets(other, emb, false), DomainError);
}

}  // namespace
}  // namespace gelfand
