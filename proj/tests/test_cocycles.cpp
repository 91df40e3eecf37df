#include <random>

#include <gtest/gtest.h>

#include "pitop/cocycles.hpp"
#include "pitop/fixtures.hpp"

using namespace pitop;

namespace {

/// Class function pi x pi -> mu_N: constant on simultaneous conjugacy classes.
TwoCochain random_invariant_cochain(const FiniteGroup& g, long N, std::mt19937_64& rng) {
  int n = g.order();
  std::vector<long> e(static_cast<size_t>(n) * n, -1);
  std::uniform_int_distribution<long> pick(0, N - 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (e[x * n + y] >= 0) continue;
      long v = pick(rng);
      for (int d = 0; d < n; ++d) e[g.conj(d, x) * n + g.conj(d, y)] = v;
    }
  TwoCochain t{g, N, {}};
  for (long v : e) t.eta.push_back(CycloNum::root(N, v));
  return t;
}

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
          FiniteGroup::product({2, 2}), symmetric_group_s3(), quaternion_group()};
}

}  // namespace

TEST(Group, RejectsOneCorruptedEntry) {
  std::mt19937_64 rng(1);
  for (const FiniteGroup& g : small_groups()) {
    if (g.order() < 2) continue;
    for (int trial = 0; trial < 20; ++trial) {
      auto t = g.table();
      int a = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
      int b = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
      t[a][b] = (t[a][b] + 1) % g.order();
      EXPECT_TRUE(check_group_table(t).has_value()) << g.spec();
      EXPECT_THROW(FiniteGroup::from_table(t), GroupError);
    }
    EXPECT_FALSE(check_group_table(g.table()).has_value());
  }
}

TEST(Group, ParsesSpecs) {
  EXPECT_EQ(FiniteGroup::parse("cyclic:5").order(), 5);
  EXPECT_EQ(FiniteGroup::parse("product:2x3").order(), 6);
  EXPECT_EQ(FiniteGroup::parse("trivial").order(), 1);
  EXPECT_THROW(FiniteGroup::parse("dihedral:4"), GroupError);
}

TEST(Cocycles, FixtureTuplesVerify) {
  for (const auto& f : fixture_categories()) {
    Report r = verify_tuple(f.tuple);
    EXPECT_TRUE(r.ok()) << f.name << "\n" << r.str();
  }
}

TEST(Cocycles, BrokenBraidingIsCaught) {
  RibbonTuple t = cyclic_bicharacter_tuple(3);
  t.C(1, 2) = t.C(1, 2) * CycloNum::root(3, 1);
  EXPECT_FALSE(verify_braiding(t).ok());
  RibbonTuple u = cyclic_bicharacter_tuple(4);
  u.theta[1] = -u.theta[1];
  EXPECT_FALSE(verify_twist(u).ok());
}

TEST(Cocycles, CoboundaryOfInvariantCochainsVerifies) {
  std::mt19937_64 rng(2);
  int trials = 0;
  for (int round = 0; round < 20; ++round)
    for (const FiniteGroup& g : small_groups()) {
      TwoCochain eta = random_invariant_cochain(g, 6, rng);
      RibbonTuple t = coboundary(eta);
      Report a = verify_associator(t), b = verify_braiding(t);
      EXPECT_TRUE(a.ok() && b.ok()) << g.spec() << "\n" << a.str() << b.str();
      ++trials;
    }
  EXPECT_GE(trials, 100);
}

TEST(Cocycles, MirrorIsAnInvolutionAndStaysValid) {
  for (const auto& f : fixture_categories()) {
    RibbonTuple m = tuple_mirror(f.tuple);
    EXPECT_TRUE(verify_tuple(m).ok()) << f.name;
    EXPECT_EQ(tuple_mirror(m), f.tuple) << f.name;
  }
}

TEST(Cocycles, PointwiseProductsOfValidTuples) {
  auto cats = fixture_categories();
  for (const auto& s : cats)
    for (const auto& t : cats) {
      if (!(s.tuple.group == t.tuple.group)) {
        EXPECT_THROW(tuple_product(s.tuple, t.tuple), DomainError);
        continue;
      }
      EXPECT_TRUE(verify_tuple(tuple_product(s.tuple, t.tuple)).ok()) << s.name << " x " << t.name;
    }
  RibbonTuple t = cyclic_bicharacter_tuple(6);
  EXPECT_EQ(tuple_product(t, RibbonTuple::ones(t.group, t.order)), t);
}

TEST(Cocycles, TwistsDifferBySignCharacters) {
  // Oracle: the sign characters of Z/4 are the trivial one and x -> (-1)^x.
  auto chars = sign_characters(FiniteGroup::cyclic(4));
  ASSERT_EQ(chars.size(), 2u);
  RibbonTuple t = cyclic_bicharacter_tuple(4);
  for (const auto& chi : chars) {
    auto th = canonical_twist(t, chi);
    EXPECT_TRUE(twist_ratio_is_sign_character(t.group, th, t.theta));
    RibbonTuple u = t;
    u.theta = th;
    EXPECT_TRUE(verify_twist(u).ok());
  }
  EXPECT_THROW(canonical_twist(t, std::vector<int>{1, 1, -1, 1}), DomainError);
  EXPECT_EQ(sign_characters(symmetric_group_s3()).size(), 2u);
  EXPECT_EQ(sign_characters(quaternion_group()).size(), 4u);
}

TEST(Cocycles, BicharacterEnumerationMatchesCount) {
  // Bicharacters Z/n x Z/n -> mu_N number gcd(n, N); each one gives a valid tuple.
  for (auto [n, N] : std::vector<std::pair<int, long>>{{2, 2}, {3, 3}, {4, 2}, {2, 4}, {6, 3}}) {
    auto ts = enumerate_bicharacter_tuples(FiniteGroup::cyclic(n), N);
    EXPECT_EQ(static_cast<long>(ts.size()), std::gcd(static_cast<long>(n), N)) << n << " " << N;
    for (const auto& t : ts) EXPECT_TRUE(verify_tuple(t).ok());
  }
}

TEST(Cocycles, DerivedIdentitiesHold) {
  for (const auto& f : fixture_categories()) {
    DerivedIdentities d = derived_identities(f.tuple);
    EXPECT_TRUE(d.report.ok()) << f.name << "\n" << d.report.str();
    EXPECT_EQ(static_cast<int>(d.d.size()), f.tuple.n());
  }
}
