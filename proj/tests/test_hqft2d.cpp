#include <random>

#include <gtest/gtest.h>

#include "pitop/fixtures.hpp"
#include "pitop/hqft2d.hpp"

using namespace pitop;

namespace {

std::vector<ThinCategory> categories() {
  std::vector<ThinCategory> out;
  for (const auto& f : fixture_categories())
    if (f.dsign > 0) out.push_back(category_of(f));
  return out;
}

/// K[pi] for abelian pi: e_x e_y = e_xy, eta(e_x, e_y) = [xy = 1], trivial action.
CrossedAlgebra group_crossed_algebra(const FiniteGroup& g) {
  int n = g.order();
  CrossedAlgebra a;
  a.group = g;
  for (int x = 0; x < n; ++x) {
    a.grade.push_back(x);
    a.labels.push_back("e" + std::to_string(x));
  }
  a.mul.assign(n, std::vector<SparseVec>(n));
  a.eta.assign(n, std::vector<CycloNum>(n, CycloNum(0)));
  a.phi.assign(n, std::vector<SparseVec>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.mul[x][y] = a.basis(g.mul(x, y));
      if (g.mul(x, y) == g.unit()) a.eta[x][y] = CycloNum(1);
      a.phi[x][y] = a.basis(y);
    }
  a.unit = a.basis(g.unit());
  return a;
}

}  // namespace

TEST(CrossedAlgebra, ColorAlgebrasOfTheCorpusVerify) {
  for (const ThinCategory& c : categories()) {
    CrossedAlgebra a = crossed_algebra(c);
    Report r = verify_crossed_algebra(a);
    EXPECT_TRUE(r.ok()) << c.name << "\n" << r.str();
    const Check* tr = r.find("trace identity");
    ASSERT_NE(tr, nullptr) << c.name;
    EXPECT_GT(tr->tested, 0) << c.name;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        EXPECT_EQ(a.eta[i][j], CycloNum(c.dual[i] == j ? 1 : 0)) << c.name;
  }
}

TEST(CrossedAlgebra, GroupAlgebraOfAnAbelianGroup) {
  for (int n : {1, 2, 3, 5}) EXPECT_TRUE(verify_crossed_algebra(group_crossed_algebra(FiniteGroup::cyclic(n))).ok());
  EXPECT_TRUE(verify_crossed_algebra(group_crossed_algebra(FiniteGroup::product({2, 2}))).ok());
}

TEST(CrossedAlgebra, PairingMutationsAreCaught) {
  std::mt19937_64 rng(9);
  for (const ThinCategory& c : categories()) {
    if (c.size() < 2) continue;
    for (int trial = 0; trial < 20; ++trial) {
      CrossedAlgebra a = crossed_algebra(c);
      int i = std::uniform_int_distribution<int>(0, a.dim() - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, a.dim() - 1)(rng);
      a.eta[i][j] += CycloNum(1);
      EXPECT_FALSE(verify_crossed_algebra(a).ok()) << c.name << " eta" << i << "," << j;
    }
  }
}

TEST(CrossedAlgebra, RandomMutationsAreMostlyCaught) {
  std::mt19937_64 rng(10);
  auto cats = categories();
  int caught = 0, total = 0;
  for (int k = 0; k < 200; ++k) {
    const ThinCategory& c = cats[k % cats.size()];
    if (c.size() < 2) continue;
    CrossedAlgebra a = crossed_algebra(c);
    mutate(a, rng);
    ++total;
    if (!verify_crossed_algebra(a).ok()) ++caught;
  }
  EXPECT_GE(caught * 100, total * 99);
}

TEST(Blocks, SphereAndRelation) {
  ThinCategory c = category_of(fixture_categories()[8]);  // cat_s3
  ASSERT_EQ(c.name, "cat_s3");
  EXPECT_EQ(block_dimension(c, SurfaceSpec{}), 1);
  const FiniteGroup& g = c.group;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      SurfaceSpec torus{{}, {a}, {b}};
      EXPECT_EQ(surface_relation(g, torus), g.commutator(a, b));
      if (g.commutator(a, b) != g.unit()) {
        EXPECT_THROW(block_dimension(c, torus), DomainError);
      }
    }
  EXPECT_THROW(block_dimension(c, SurfaceSpec{{}, {0}, {}}), DomainError);
}

TEST(Blocks, TorusCountsMatchBruteForce) {
  for (const ThinCategory& c : categories()) {
    const FiniteGroup& g = c.group;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        if (g.commutator(a, b) != g.unit()) continue;
        long brute = 0;
        for (int s = 0; s < c.size(); ++s) brute += c.grade[s] == a && c.Act(b, s) == s;
        EXPECT_EQ(block_dimension(c, SurfaceSpec{{}, {a}, {b}}), brute) << c.name;
        EXPECT_EQ(torus_fixed_points(c, a, b), brute) << c.name;
      }
  }
}

TEST(Blocks, MarkedTorusCountsAgree) {
  for (const ThinCategory& c : categories()) {
    const FiniteGroup& g = c.group;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int s = 0; s < c.size(); ++s) {
          auto counts = torus_mark_counts(c, 1, s, a, b);
          for (long x : counts) EXPECT_EQ(x, counts[0]) << c.name;
        }
  }
}

TEST(Blocks, SplittingHolds) {
  for (const ThinCategory& c : categories())
    for (int a = 0; a < c.group.order(); ++a) EXPECT_TRUE(verify_splitting(c, a).ok()) << c.name << " " << a;
}
