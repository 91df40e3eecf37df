#include <random>

#include <gtest/gtest.h>

#include "pitop/io.hpp"
#include "pitop/linalg.hpp"

using namespace pitop;

namespace {

/// Random element of Q(zeta_N) with small rational coefficients on random powers.
CycloNum random_cyclo(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pw(0, static_cast<int>(N) - 1), terms(0, 3);
  CycloNum x(0);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) x += CycloNum(mpq_class(num(rng), den(rng))) * CycloNum::root(N, pw(rng));
  return x;
}

}  // namespace

TEST(Cyclo, RootsHaveTheirOrder) {
  for (long N : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CycloNum z = CycloNum::root(N, 1);
    EXPECT_EQ(z.pow(N), CycloNum(1)) << N;
    for (long k = 1; k < N; ++k) EXPECT_NE(z.pow(k), CycloNum(1)) << N << " " << k;
  }
}

TEST(Cyclo, SumOfPrimitiveRootsIsMobius) {
  // Sum of primitive N-th roots is mu(N).
  const std::vector<std::pair<long, long>> mu{{1, 1}, {2, -1}, {3, -1}, {4, 0}, {5, -1}, {6, 1}, {12, 0}};
  for (auto [N, m] : mu) {
    CycloNum s(0);
    for (long k = 0; k < N; ++k)
      if (std::gcd(k, N) == 1) s += CycloNum::root(N, k);
    EXPECT_EQ(s, CycloNum(m)) << N;
  }
}

TEST(Cyclo, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    long N = std::vector<long>{3, 4, 5, 6, 8, 12}[trial % 6];
    CycloNum a = random_cyclo(rng, N), b = random_cyclo(rng, N), c = random_cyclo(rng, N);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, CycloNum(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), CycloNum(1));
      EXPECT_EQ(a.pow(-2) * a.pow(2), CycloNum(1));
    }
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(Cyclo, MixedOrdersLiftToTheLcm) {
  CycloNum i = CycloNum::root(4, 1), w = CycloNum::root(3, 1);
  CycloNum z12 = CycloNum::root(12, 1);
  EXPECT_EQ(i * w, z12.pow(7));
  EXPECT_EQ((i * w).pow(12), CycloNum(1));
}

TEST(Cyclo, StringRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    CycloNum a = random_cyclo(rng, std::vector<long>{1, 3, 4, 12}[trial % 4]);
    EXPECT_EQ(parse_cyclo(a.str()), a) << a.str();
    EXPECT_EQ(parse_cyclo(a.str()).str(), a.str());
  }
  EXPECT_THROW(parse_cyclo("1 + zeta"), ParseError);
  EXPECT_THROW(parse_cyclo(""), ParseError);
}

TEST(Cyclo, ZetaExponent) {
  EXPECT_EQ(zeta_exponent(CycloNum(1), 1), 0);
  EXPECT_EQ(zeta_exponent(CycloNum(-1), 6), 3);
  EXPECT_EQ(zeta_exponent(CycloNum::root(3, 2), 12), 8);
  EXPECT_THROW(zeta_exponent(CycloNum(-1), 3), DomainError);
  EXPECT_THROW(zeta_exponent(CycloNum(2), 4), DomainError);
}

TEST(Cyclo, SquareRootsInTheField) {
  // sqrt(-3) lies in Q(zeta_3); sqrt(2) needs Q(zeta_8).
  CycloNum r = sqrt_in_field(CycloNum(-3), 3);
  EXPECT_EQ(r * r, CycloNum(-3));
  CycloNum s = sqrt_in_field(CycloNum(2), 8);
  EXPECT_EQ(s * s, CycloNum(2));
  EXPECT_THROW(sqrt_in_field(CycloNum(2), 3), DomainError);
}

TEST(Linalg, InverseAndRank) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(3, std::vector<CycloNum>(3));
    for (auto& row : m)
      for (auto& x : row) x = random_cyclo(rng, 3);
    auto inv = inverse(m);
    if (rank(m) == 3) {
      ASSERT_TRUE(inv.has_value());
      Matrix id = matmul(m, *inv);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(id[i][j], CycloNum(i == j ? 1 : 0));
    } else {
      EXPECT_FALSE(inv.has_value());
    }
  }
}

TEST(Linalg, InertiaOfHopfLinkingMatrix) {
  // Linking matrix of the Hopf link with framings (0, 0): signature 0.
  Inertia in = inertia({{0, 1}, {1, 0}});
  EXPECT_EQ(in.positive, 1);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.signature(), 0);
  Inertia z = inertia({{0}});
  EXPECT_EQ(z.zero, 1);
}
