#include <random>

#include <gtest/gtest.h>

#include "pitop/fixtures.hpp"
#include "pitop/surgery.hpp"

using namespace pitop;

namespace {

std::vector<ThinCategory> categories() {
  std::vector<ThinCategory> out;
  for (const auto& f : fixture_categories())
    if (f.dsign > 0) out.push_back(category_of(f));
  return out;
}

}  // namespace

TEST(Surgery, SphereIsTheInverseOfD) {
  for (const ThinCategory& c : categories())
    for (int s : {1, -1}) {
      TauResult t = tau(builtin_presentation("S3", c), c, s);
      EXPECT_EQ(t.value * t.D, CycloNum(1)) << c.name;
      EXPECT_EQ(t.tau_prime, CycloNum(1)) << c.name;
    }
}

TEST(Surgery, SOneTimesSTwoIsOne) {
  for (const ThinCategory& c : categories())
    for (int a = 0; a < c.group.order(); ++a) {
      TauResult t = tau(builtin_presentation("S1xS2", c, a), c);
      EXPECT_EQ(t.value, CycloNum(1)) << c.name << " " << a;
      EXPECT_EQ(t.b1, 1);
      EXPECT_EQ(t.sigma, 0);
    }
}

TEST(Surgery, FixtureSurgeriesAreSpecialAndFrozen) {
  ThinCategory c = fixture_surgery_category();
  std::map<std::string, int> sigma{{"s3", 0},  {"s1xs2_0", 0}, {"s1xs2_1", 0},
                                   {"lens31", 1}, {"lens_m1", -1}, {"hopf00", 0}};
  for (const SurgeryFile& f : fixture_surgeries()) {
    EXPECT_TRUE(check_special(f.presentation, c.group).ok()) << f.presentation.name;
    TauResult t = tau(f.presentation, c);
    EXPECT_EQ(t.value, CycloNum(1)) << f.presentation.name;
    EXPECT_EQ(t.sigma, sigma.at(f.presentation.name)) << f.presentation.name;
  }
}

TEST(Surgery, NonSpecialPresentationsAreRejected) {
  ThinCategory c = fixture_surgery_category();
  // Framing 1 with label 1 in Z/3: the longitude is 1, not the unit.
  SurgeryPresentation p = builtin_presentation("S3", c);
  p = kirby_stabilize(p, c, 1);
  p.diagram.events[0].seeds[0] = Seed{1, 1, true};
  EXPECT_FALSE(check_special(p, c.group).ok());
  EXPECT_THROW(tau(p, c), DomainError);
}

TEST(Surgery, LinkingMatrixOfTheHopfLink) {
  ThinCategory c = fixture_surgery_category();
  for (const SurgeryFile& f : fixture_surgeries()) {
    if (f.presentation.name != "hopf00") continue;
    LinkingData l = signature_of_linking(f.presentation, c.group);
    ASSERT_EQ(l.matrix.size(), 2u);
    EXPECT_EQ(abs(l.matrix[0][1]), 1);
    EXPECT_EQ(l.signature(), 0);
    EXPECT_EQ(l.b1(), 0);
  }
}

TEST(Surgery, ConnectedSumMultiplies) {
  // With the normalization tau(S3) = 1/D the law reads tau(M # N) = D tau(M) tau(N).
  std::mt19937_64 rng(6);
  for (const ThinCategory& c : categories()) {
    ModularData md = modular_data(c);
    std::vector<SurgeryPresentation> ps{builtin_presentation("S3", c)};
    for (int a = 0; a < c.group.order(); ++a) {
      ps.push_back(builtin_presentation("S1xS2", c, a));
      ps.push_back(builtin_presentation("lens", c, a, c.group.element_order(a)));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const auto& m = ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
      const auto& n = ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
      EXPECT_EQ(tau(connected_sum(m, n), c, md).value, md.D * tau(m, c, md).value * tau(n, c, md).value)
          << c.name << " " << m.name << " # " << n.name;
    }
  }
}

TEST(Surgery, StabilizationAndFennRourkeKeepTau) {
  ThinCategory c = fixture_surgery_category();
  ModularData md = modular_data(c);
  SurgeryPresentation p = builtin_presentation("lens", c, 1, 3);
  CycloNum t0 = tau(p, c, md).value;
  for (int s : {1, -1}) EXPECT_EQ(tau(kirby_stabilize(p, c, s), c, md).value, t0);
  // The lens diagram has strands at level 1.
  for (int dir : {1, -1}) {
    SurgeryPresentation q = fenn_rourke(p, c, FennRourkeSite{1, 0, 1}, dir);
    EXPECT_TRUE(check_special(q, c.group).ok());
    EXPECT_EQ(tau(q, c, md).value, t0) << dir;
  }
}

TEST(Surgery, RandomKirbySequences) {
  std::mt19937_64 rng(8);
  for (const ThinCategory& c : categories()) {
    ModularData md = modular_data(c);
    for (int a = 0; a < c.group.order(); ++a) {
      KirbyRun run = kirby_random(builtin_presentation("S1xS2", c, a), c, md, 4, rng);
      EXPECT_TRUE(run.report.ok()) << c.name << "\n" << run.report.str();
      EXPECT_EQ(run.steps.size(), 4u);
    }
  }
}
