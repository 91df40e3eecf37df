#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "pitop/constructions.hpp"
#include "pitop/fixtures.hpp"

using namespace pitop;

namespace {

ThinCategory cat(int n) { return pointlike_category(cyclic_bicharacter_tuple(n)); }

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Constructions, RelabelingIsAnIsomorphism) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4, 5}) {
    ThinCategory c = cat(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm = iota(c.size());
      std::shuffle(perm.begin(), perm.end(), rng);
      ThinCategory r = relabel(c, perm);
      EXPECT_TRUE(validate_structure(r).ok());
      std::vector<int> back(perm.size());
      for (size_t s = 0; s < perm.size(); ++s) back[perm[s]] = static_cast<int>(s);
      EXPECT_EQ(relabel(r, back), c);
    }
  }
}

TEST(Constructions, PullbackAndPushforwardAlongAQuotient) {
  // Z/6 -> Z/3, x -> x mod 3.
  FiniteGroup z6 = FiniteGroup::cyclic(6), z3 = FiniteGroup::cyclic(3);
  std::vector<int> img;
  for (int x = 0; x < 6; ++x) img.push_back(x % 3);
  GroupHom q = GroupHom::finite(z6, img, z3);
  ThinCategory c = cat(3);
  ThinCategory p = pullback(c, q);
  EXPECT_EQ(p.group.order(), 6);
  EXPECT_TRUE(validate_structure(p).ok());
  EXPECT_EQ(p.size(), 6);
  EXPECT_THROW(GroupHom::finite(z6, {0, 1, 0, 1, 0, 2}, z3), GroupError);
}

TEST(Constructions, ProductsOfCategories) {
  ThinCategory a = cat(3), b = pointlike_category(tuple_mirror(cyclic_bicharacter_tuple(3)));
  // Direct sum: simples side by side, one unit summand per factor.
  ProductResult direct = product_categories({a, b}, ProductMode::Direct);
  EXPECT_EQ(direct.cat.size(), a.size() + b.size());
  EXPECT_EQ(direct.unit_rank, 2);
  EXPECT_TRUE(direct.report.ok()) << direct.report.str();
  // Tensor product: pairs of simples of equal grade.
  ProductResult tensor = product_categories({a, b}, ProductMode::Tensor);
  EXPECT_EQ(tensor.cat.size(), 3);
  EXPECT_EQ(tensor.unit_rank, 1);
  EXPECT_TRUE(tensor.report.ok()) << tensor.report.str();
  EXPECT_TRUE(validate_structure(tensor.cat).ok());
  EXPECT_THROW(product_categories({a, cat(2)}, ProductMode::Direct), DomainError);
}

TEST(Constructions, MirrorIsAnInvolution) {
  for (const auto& f : fixture_categories()) {
    ThinCategory c = category_of(f);
    ThinCategory m = mirror_category(c);
    EXPECT_TRUE(validate_structure(m).ok()) << f.name;
    EXPECT_EQ(mirror_category(m), c) << f.name;
    for (int s = 0; s < c.size(); ++s) EXPECT_EQ(m.twist[s], c.twist[s].inv()) << f.name;
  }
}

TEST(Constructions, TransferUnitRankIsTheIndex) {
  // End(1) of the transfer from a subgroup of index k is k-dimensional.
  ThinCategory triv = pointlike_category(RibbonTuple::ones(FiniteGroup(), 1));
  for (int n : {2, 3, 4}) {
    TransferResult t = transfer(triv, FiniteGroup::cyclic(n), {0});
    EXPECT_EQ(t.unit_rank, n);
    EXPECT_EQ(static_cast<int>(t.cosets.reps.size()), n);
  }
  // Z/2 inside Z/4 as {0, 2}.
  TransferResult t = transfer(cat(2), FiniteGroup::cyclic(4), {0, 2});
  EXPECT_EQ(t.unit_rank, 2);
  EXPECT_EQ(t.cat.size(), 4);
  EXPECT_TRUE(t.report.ok()) << t.report.str();
}

TEST(Constructions, CharacterGroupActsByStructurePreservingAutomorphisms) {
  for (int n : {2, 3, 4, 6}) {
    ThinCategory c = cat(n);
    CharacterGroup aut = aut0_pointlike(c);
    EXPECT_EQ(aut.group.order(), n) << n;
    EXPECT_TRUE(aut0_preserves_structure(c, aut).ok()) << n;
  }
}

TEST(Constructions, CanonicalExtensionsAreValid) {
  for (int n : {2, 3}) {
    ThinCategory c = cat(n);
    CharacterGroup aut = aut0_pointlike(c);
    ExtensionResult e = canonical_extension(c, aut, iota(aut.group.order()));
    EXPECT_TRUE(e.report.ok()) << e.report.str();
    // Simples (U, chi) over the character group.
    EXPECT_EQ(e.cat.group.order(), aut.group.order());
    EXPECT_EQ(e.cat.size(), n * aut.group.order());
    EXPECT_TRUE(validate_structure(e.cat).ok());
    EXPECT_TRUE(crossed_invariance_suite(e.cat).ok());
    ExtensionResult trivial = canonical_extension(c, aut, {0});
    EXPECT_EQ(trivial.cat.size(), c.size());
  }
}
