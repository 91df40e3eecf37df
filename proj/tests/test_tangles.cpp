#include <random>

#include <gtest/gtest.h>

#include "pitop/fixtures.hpp"
#include "pitop/moves.hpp"

using namespace pitop;

namespace {

ThinCategory cat(int n) { return pointlike_category(cyclic_bicharacter_tuple(n)); }

Diagram hopf_link(int j, int k) {
  Diagram d;
  d.events = {Event::cup(0, 1, Seed{j, j, false}), Event::cup(2, -1, Seed{k, k, false}), Event::cross(1, 1),
              Event::cross(1, 1), Event::cap(2, -1), Event::cap(0, 1)};
  return d;
}

Diagram unknot(int j) {
  Diagram d;
  d.events = {Event::cup(0, 1, Seed{j, j, false}), Event::cap(0, 1)};
  return d;
}

}  // namespace

TEST(Tangles, FixtureValues) {
  ThinCategory c = fixture_surgery_category();
  std::map<std::string, CycloNum> frozen{
      {"unknot", CycloNum(1)}, {"hopf", CycloNum::root(3, 2)}, {"trefoil", CycloNum(1)}};
  for (const auto& nd : fixture_diagrams()) {
    EXPECT_TRUE(validate_labeling(nd.diagram, c).ok()) << nd.name;
    EXPECT_EQ(evaluate_F(nd.diagram, c), frozen.at(nd.name)) << nd.name;
  }
}

TEST(Tangles, HopfLinkIsTheDoubleBraiding) {
  // Oracle: two crossings between components coloured j and k contribute c(j,k) c(k,j) = zeta_n^(2jk).
  for (int n : {2, 3, 4, 5}) {
    ThinCategory c = cat(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        EXPECT_EQ(evaluate_F(hopf_link(j, k), c), CycloNum::root(n, (2 * j * k) % n)) << n << " " << j << " " << k;
  }
}

TEST(Tangles, UnknotIsTheDimension) {
  for (int n : {2, 3, 4}) {
    ThinCategory c = cat(n);
    for (int j = 0; j < n; ++j) EXPECT_EQ(evaluate_F(unknot(j), c), categorical_dim(c, j));
  }
}

TEST(Tangles, BadLabelingsAreReported) {
  ThinCategory c = cat(3);
  Diagram d = unknot(1);
  d.events[0].seeds[0].color = 2;  // colour of grade 2 on an arc labelled 1
  EXPECT_FALSE(validate_labeling(d, c).ok());
  EXPECT_THROW(evaluate_F(d, c), DomainError);
  Diagram open;
  open.events = {Event::cup(0, 1, Seed{1, 1, false})};
  EXPECT_EQ(open.output_width(), 2);
  Diagram arity;
  arity.events = {Event::cap(0, 1)};
  EXPECT_THROW(arity.output_width(), DomainError);
}

TEST(Tangles, ReidemeisterMovesPreserveTheValue) {
  std::mt19937_64 rng(5);
  long moves = 0;
  for (int n : {2, 3, 4}) {
    ThinCategory c = cat(n);
    for (int j = 1; j < n; ++j)
      for (Diagram d : {unknot(j), hopf_link(j, n - j), hopf_link(j, j)}) {
        CycloNum f0 = evaluate_F(d, c);
        for (int k = 0; k < 40; ++k, ++moves) {
          RandomMove m = random_move(d, c, rng);
          d = m.result;
          ASSERT_EQ(evaluate_F(d, c), f0) << to_string(m.site);
        }
      }
  }
  EXPECT_GE(moves, 200);
}

TEST(Tangles, EverySiteOfTheTrefoilIsInvariant) {
  ThinCategory c = fixture_surgery_category();
  Diagram t = fixture_diagrams()[2].diagram;
  CycloNum f0 = evaluate_F(t, c);
  long applied = 0;
  for (const MoveSite& s : enumerate_sites(t, c.group)) {
    try {
      EXPECT_EQ(evaluate_F(apply_move(t, c, s), c), f0) << to_string(s);
      ++applied;
    } catch (const DomainError&) {
    }
  }
  EXPECT_GT(applied, 10);
}

TEST(Tangles, ConjugationAndDisjointUnion) {
  ThinCategory c = cat(4);
  Diagram a = hopf_link(1, 3), b = unknot(2);
  for (int delta = 0; delta < 4; ++delta) EXPECT_EQ(evaluate_F(conjugate_diagram(a, c, delta), c), evaluate_F(a, c));
  EXPECT_EQ(evaluate_F(juxtapose(a, b), c), evaluate_F(a, c) * evaluate_F(b, c));
}

TEST(Tangles, ReversingAComponentKeepsTheValue) {
  ThinCategory c = cat(3);
  Diagram h = hopf_link(1, 2);
  Tracing t = trace_components(h, c.group);
  ASSERT_EQ(t.components.size(), 2u);
  for (int comp = 0; comp < 2; ++comp)
    EXPECT_EQ(evaluate_F(transform_reverse_dual(h, c, comp), c), evaluate_F(h, c)) << comp;
}

TEST(Tangles, LinkingNumbersOfTheHopfLink) {
  Tracing t = trace_components(hopf_link(1, 1), FiniteGroup::cyclic(3));
  ASSERT_EQ(t.linking2.size(), 2u);
  EXPECT_EQ(std::abs(t.linking2[0][1]), 2);
  EXPECT_EQ(t.linking2[0][0], 0);
  Tracing tr = trace_components(fixture_diagrams()[2].diagram, FiniteGroup::cyclic(3));
  ASSERT_EQ(tr.components.size(), 1u);
  EXPECT_EQ(tr.components[0].framing, 3);
}
