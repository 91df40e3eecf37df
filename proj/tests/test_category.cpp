#include <gtest/gtest.h>

#include "pitop/category.hpp"
#include "pitop/fixtures.hpp"

using namespace pitop;

namespace {

std::vector<std::pair<std::string, ThinCategory>> corpus() {
  std::vector<std::pair<std::string, ThinCategory>> out;
  for (const auto& f : fixture_categories()) out.emplace_back(f.name, category_of(f));
  return out;
}

}  // namespace

TEST(Category, FixtureCategoriesAreValid) {
  for (const auto& [name, c] : corpus()) {
    Report r = validate_structure(c);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.str();
    Report s = crossed_invariance_suite(c);
    EXPECT_TRUE(s.ok()) << name << "\n" << s.str();
    EXPECT_TRUE(verify_canonical_colors(c).ok()) << name;
  }
}

TEST(Category, PointlikeHasOneSimplePerElement) {
  for (const auto& [name, c] : corpus()) {
    EXPECT_EQ(c.size(), c.group.order()) << name;
    for (int s = 0; s < c.size(); ++s) {
      EXPECT_EQ(c.Tensor(s, c.dual[s]), c.unit()) << name;
      EXPECT_EQ(categorical_dim(c, s) * categorical_dim(c, c.dual[s]), CycloNum(1)) << name;
    }
  }
}

TEST(Category, RejectsInvalidTuple) {
  RibbonTuple t = cyclic_bicharacter_tuple(3);
  t.C(1, 1) = CycloNum(2);
  EXPECT_THROW(pointlike_category(t), DomainError);
}

TEST(Category, VerlindeAlgebraIsAssociativeWithUnit) {
  for (const auto& [name, c] : corpus()) {
    ColorAlgebra a = verlinde_algebra(c);
    EXPECT_TRUE(verify_color_algebra(a).ok()) << name;
    for (int s = 0; s < a.size(); ++s) {
      EXPECT_EQ(a.mul(a.unit(), a.basis(s)), a.basis(s));
      EXPECT_EQ(a.grade_of(a.basis(s)), c.grade[s]);
      EXPECT_EQ(a.star(a.star(a.basis(s))), a.basis(s));
    }
  }
}

TEST(Category, ModularDataOfPointlikeCategories) {
  // Each component has one simple of dimension +-1, so D^2 = 1 and the weight of every component is D^2.
  for (const auto& [name, c] : corpus()) {
    ModularData md = modular_data(c, 1);
    EXPECT_EQ(md.D2, CycloNum(1)) << name;
    EXPECT_EQ(md.D * md.D, md.D2) << name;
    EXPECT_EQ(modular_data(c, -1).D, -md.D) << name;
    EXPECT_EQ(md.delta_plus * md.delta_minus, md.D2) << name;
    for (int a = 0; a < c.group.order(); ++a) EXPECT_EQ(component_weight(c, a), md.D2) << name;
  }
}

TEST(Category, CanonicalColorsAreHomogeneous) {
  for (const auto& [name, c] : corpus()) {
    ColorAlgebra a = verlinde_algebra(c);
    for (int alpha = 0; alpha < c.group.order(); ++alpha) {
      ColorElement w = canonical_color(c, alpha);
      EXPECT_EQ(a.grade_of(w), alpha) << name;
      for (int beta = 0; beta < c.group.order(); ++beta)
        EXPECT_EQ(a.act(beta, w), canonical_color(c, c.group.conj(beta, alpha))) << name;
    }
  }
}
