#include <gtest/gtest.h>

#include "pitop/hopf.hpp"

using namespace pitop;

namespace {

HopfAlgebraData kz2() { return group_algebra(FiniteGroup::cyclic(2)); }
const Vec kG{CycloNum(0), CycloNum(1)};

void expect_ok(const Report& r) { EXPECT_TRUE(r.ok()) << r.title() << "\n" << r.str(); }

}  // namespace

TEST(Hopf, GroupAlgebrasAndSweedler) {
  for (int n : {1, 2, 3, 4}) expect_ok(verify_hopf(group_algebra(FiniteGroup::cyclic(n))));
  expect_ok(verify_hopf(sweedler_h4()));
  // Each verifier records every evaluation, so passing checks carry counts.
  Report r = verify_hopf(sweedler_h4());
  const Check* c = r.find("coassociativity");
  ASSERT_NE(c, nullptr);
  EXPECT_GT(c->tested, 0);
}

TEST(Hopf, BrokenAntipodeIsCaught) {
  HopfAlgebraData h = sweedler_h4();
  h.antipode[2 * 4 + 3] = -h.antipode[2 * 4 + 3];  // s(x) = +gx
  EXPECT_FALSE(verify_hopf(h).ok());
}

TEST(Hopf, RibbonElementOfTheGroupAlgebraOfZ2) {
  // Brute force over v = a + b g with a, b in {-1, 0, 1}: exactly 1 and g are ribbon elements.
  HopfAlgebraData h = kz2();
  std::vector<std::pair<int, int>> found;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      if (verify_ribbon_hopf(h, z2_r_matrix(), Vec{CycloNum(a), CycloNum(b)}).ok()) found.emplace_back(a, b);
  std::vector<std::pair<int, int>> expected{{0, 1}, {1, 0}};
  EXPECT_EQ(found, expected);
}

TEST(Hopf, SweedlerRMatrixSigns) {
  // Search the sign patterns on the x-x block; the solutions are the parameter values +1 and -1.
  HopfAlgebraData h = sweedler_h4();
  const int pairs[4][2] = {{2, 2}, {2, 3}, {3, 3}, {3, 2}};
  std::vector<Vec> found;
  for (int m = 0; m < 16; ++m) {
    Vec R = sweedler_r_matrix(0);
    for (int k = 0; k < 4; ++k) R[pairs[k][0] * 4 + pairs[k][1]] += CycloNum(mpq_class((m >> k) & 1 ? -1 : 1, 2));
    if (verify_quasitriangular(as_pi_coalgebra(h), RibbonFamily{{R}, {}}).ok()) found.push_back(R);
  }
  ASSERT_EQ(found.size(), 2u);
  EXPECT_TRUE((found[0] == sweedler_r_matrix(1) && found[1] == sweedler_r_matrix(-1)) ||
              (found[0] == sweedler_r_matrix(-1) && found[1] == sweedler_r_matrix(1)));
  for (int t : {-2, 0, 3}) expect_ok(verify_quasitriangular(as_pi_coalgebra(h), RibbonFamily{{sweedler_r_matrix(t)}, {}}));
}

TEST(Hopf, ScaledLegBreaksQuasitriangularity) {
  HopfAlgebraData h = kz2();
  Vec R = z2_r_matrix();
  R[1 * 2 + 1] = R[1 * 2 + 1] * CycloNum::root(3, 1);
  EXPECT_FALSE(verify_quasitriangular(as_pi_coalgebra(h), RibbonFamily{{R}, {}}).ok());
}

TEST(Hopf, PiCoalgebrasFromTheRibbonAlgebra) {
  for (ApiVariant var : {ApiVariant::Plain, ApiVariant::Bar}) {
    RibbonPiCoalgebra rb = build_R_theta_from_ribbon(kz2(), z2_r_matrix(), kG, var);
    expect_ok(verify_pi_coalgebra(rb.A));
    expect_ok(verify_crossed(rb.A));
    expect_ok(verify_quasitriangular(rb.A, rb.family));
    expect_ok(verify_ribbon(rb.A, rb.family));
    std::vector<Vec> w;
    for (int a = 0; a < rb.A.G(); ++a)
      w.push_back(rb.A.alg[a].product(rb.family.theta[a], drinfeld_element(rb.A, rb.family, a)));
    Report s = verify_spherical(rb.A, w);
    expect_ok(s);
  }
}

TEST(Hopf, MirrorIsAnInvolution) {
  for (ApiVariant var : {ApiVariant::Plain, ApiVariant::Bar}) {
    RibbonPiCoalgebra rb = build_R_theta_from_ribbon(kz2(), z2_r_matrix(), kG, var);
    PiCoalgebra m = mirror_coalgebra(rb.A);
    RibbonFamily mf = mirror_family(rb.A, rb.family);
    expect_ok(verify_pi_coalgebra(m));
    expect_ok(verify_crossed(m));
    expect_ok(verify_quasitriangular(m, mf));
    expect_ok(verify_ribbon(m, mf));
    EXPECT_EQ(mirror_coalgebra(m), rb.A);
    EXPECT_EQ(mirror_family(m, mf), rb.family);
  }
}

TEST(Hopf, SweedlerOverItsGroupLikes) {
  HopfAlgebraData h = sweedler_h4();
  GroupLikes gl = group_likes(h);
  ASSERT_EQ(gl.group.order(), 2);
  EXPECT_EQ(gl.basis_index, (std::vector<int>{0, 1}));
  auto act = conjugation_action(h, gl);
  PiCoalgebra plain = build_A_pi(h, gl.group, act, ApiVariant::Plain);
  PiCoalgebra bar = build_A_pi(h, gl.group, act, ApiVariant::Bar);
  for (const PiCoalgebra* a : {&plain, &bar}) {
    expect_ok(verify_pi_coalgebra(*a));
    expect_ok(verify_crossed(*a));
    EXPECT_EQ(mirror_coalgebra(mirror_coalgebra(*a)), *a);
  }
  EXPECT_EQ(mirror_coalgebra(plain), bar);
}

TEST(Hopf, InversesInTheAlgebra) {
  HopfAlgebraData h = sweedler_h4();
  Vec a{CycloNum(2), CycloNum(1), CycloNum(3), CycloNum(0)};
  Vec inv = algebra_inverse(h.alg, a);
  ASSERT_EQ(inv.size(), 4u);
  EXPECT_EQ(h.alg.product(a, inv), h.alg.unit);
  EXPECT_TRUE(algebra_inverse(h.alg, Vec{CycloNum(0), CycloNum(0), CycloNum(1), CycloNum(0)}).empty());
}
