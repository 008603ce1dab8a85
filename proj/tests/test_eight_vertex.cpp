#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "test_support.hpp"
#include "yb/eight_vertex.hpp"
#include "yb/families.hpp"
#include "yb/oracle.hpp"

namespace yb {
namespace {

EightVertexGate identity_gate() {
  EightVertexGate g;
  g.a = g.c = g.f = g.h = 1.0;
  return g;
}

EightVertexGate swap_entries() {
  EightVertexGate g;
  g.a = g.d = g.e = g.h = 1.0;
  return g;
}

TEST(ToMatrix, Examples) {
  EXPECT_EQ(to_matrix(identity_gate()), identity(4));
  EXPECT_EQ(to_matrix(swap_entries()), swap_gate());

  const double s = 1.0 / std::numbers::sqrt2;
  SquareMatrix bell(4, 4);
  bell << s, 0, 0, s,  //
      0, s, -s, 0,     //
      0, s, s, 0,      //
      -s, 0, 0, s;
  EXPECT_LE(frobenius_distance(to_matrix(bell_gate()), bell), 1e-16);
  EXPECT_TRUE(is_unitary(bell));
  EXPECT_LE(braided_ybe_residual(bell), 1e-15);
}

TEST(ToMatrix, HasEightStructuralZeros) {
  std::mt19937_64 rng(10);
  const SquareMatrix m = to_matrix(testing::random_gate(rng));
  int zeros = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) zeros += m(i, j) == Complex(0.0);
  EXPECT_EQ(zeros, 8);
}

TEST(FromMatrix, Examples) {
  EXPECT_EQ(from_matrix(identity(4)), identity_gate());

  SquareMatrix bad = identity(4);
  bad(0, 1) = 0.5;
  try {
    from_matrix(bad);
    FAIL() << "expected NotEightVertex";
  } catch (const NotEightVertex& e) {
    ASSERT_EQ(e.offenders().size(), 1u);
    EXPECT_EQ(e.offenders()[0].row, 0);
    EXPECT_EQ(e.offenders()[0].col, 1);
    EXPECT_DOUBLE_EQ(e.offenders()[0].modulus, 0.5);
  }

  SquareMatrix noisy = identity(4);
  noisy(2, 3) = 1e-12;
  EXPECT_NO_THROW(from_matrix(noisy, 1e-10));
  EXPECT_THROW(from_matrix(noisy, 0.0), NotEightVertex);
  EXPECT_THROW(from_matrix(identity(2)), DimensionError);
}

TEST(FromMatrix, RoundTripsExactly) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const EightVertexGate g = testing::random_gate(rng);
    EXPECT_EQ(from_matrix(to_matrix(g)), g);
  }
}

TEST(YbeResiduals, Examples) {
  for (double r : ybe_residuals(identity_gate())) EXPECT_EQ(r, 0.0);
  for (double r : ybe_residuals(swap_entries())) EXPECT_EQ(r, 0.0);

  // a = c = 1, f = 2, b = g = 1: yb1 = |bfg - bcg| = |2 - 1| = 1.
  EightVertexGate g;
  g.a = g.c = 1.0;
  g.f = 2.0;
  g.b = g.g = 1.0;
  EXPECT_DOUBLE_EQ(ybe_residuals(g)[0], 1.0);
  EXPECT_FALSE(satisfies_ybe_conditions(g, 1e-10));
}

TEST(SatisfiesYbeConditions, Examples) {
  EXPECT_TRUE(satisfies_ybe_conditions(identity_gate(), 1e-10));
  EXPECT_TRUE(satisfies_ybe_conditions(bell_gate(), 1e-10));
}

// Each of the 32 conditions is one nonzero entry of the 8x8 difference
// (R(x)I)(I(x)R)(R(x)I) - (I(x)R)(R(x)I)(I(x)R); some appear at several
// entries. Multiplicities found by symbolic expansion: condition 1 at six
// entries, 4 and 5 at four, 6 at two, the sixteen below once each.
TEST(YbeResiduals, WeightedSumOfSquaresEqualsOracle) {
  constexpr std::array<int, 16> singles = {2, 3, 7, 8, 9, 10, 12, 14, 19, 21, 23, 24, 25, 26, 30, 31};
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const EightVertexGate g = testing::random_gate(rng);
    const auto r = ybe_residuals(g);
    const auto sq = [&](int k) { return r[k - 1] * r[k - 1]; };
    double total = 6 * sq(1) + 4 * sq(4) + 4 * sq(5) + 2 * sq(6);
    for (int k : singles) total += sq(k);
    const double oracle = braided_ybe_residual(to_matrix(g));
    EXPECT_NEAR(std::sqrt(total), oracle, 1e-12 * std::max(1.0, oracle));
  }
}

TEST(UnitarityResiduals, Examples) {
  for (double r : unitarity_residuals(identity_gate())) EXPECT_EQ(r, 0.0);

  EightVertexGate g = identity_gate();
  g.b = 1.0;
  EXPECT_DOUBLE_EQ(unitarity_residuals(g)[0], 1.0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    for (double r : unitarity_residuals(testing::random_case3(rng))) EXPECT_LE(r, 1e-12);
  }
}

TEST(UnitarityResiduals, AgreeWithMatrixUnitarity) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const EightVertexGate g = testing::random_gate(rng);
    const SquareMatrix m = to_matrix(g);
    const auto u = unitarity_residuals(g);
    // R R^dagger - I has the four unit-sum residuals on the diagonal and the
    // two cross terms, each twice, off the diagonal.
    double total = 0.0;
    for (int k = 0; k < 4; ++k) total += u[k] * u[k];
    total += 2 * (u[4] * u[4] + u[5] * u[5]);
    EXPECT_NEAR(std::sqrt(total), frobenius_distance(m * m.adjoint(), identity(4)), 1e-12);
  }
}

TEST(ZeroPattern, Examples) {
  EXPECT_TRUE(zero_pattern_ok(identity_gate()));
  EXPECT_TRUE(zero_pattern_ok(gen_case1(0.1, 0.2, 0.3, 0.4)));

  EightVertexGate g = identity_gate();
  g.b = 1.0;
  EXPECT_FALSE(zero_pattern_ok(g));

  // b = g = 0 with a = 0 breaks "b = 0 implies a nonzero".
  EightVertexGate h;
  h.c = h.f = h.d = h.e = 1.0;
  EXPECT_FALSE(zero_pattern_ok(h));
}

TEST(PhaseDeform, Examples) {
  std::mt19937_64 rng(15);
  const EightVertexGate g = testing::random_gate(rng);
  EXPECT_EQ(phase_deform(g, 0.0), g);
  EXPECT_LE(testing::max_abs_diff(phase_deform(phase_deform(g, 0.7), -0.7), g), 1e-15);

  const EightVertexGate c3 = gen_case3(0.4, 1.1, 1);
  const EightVertexGate d3 = phase_deform(c3, std::numbers::pi / 3);
  EXPECT_LE(std::abs(d3.b * d3.g + d3.a * d3.a), 1e-15);
  EXPECT_EQ(d3.a, c3.a);
  EXPECT_EQ(d3.h, c3.h);
}

TEST(PhaseDeform, PreservesResidualModuli) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    const EightVertexGate g = testing::random_gate(rng);
    const EightVertexGate d = phase_deform(g, testing::random_angle(rng));
    const auto r0 = ybe_residuals(g), r1 = ybe_residuals(d);
    for (int k = 0; k < kYbeConditionCount; ++k) EXPECT_NEAR(r0[k], r1[k], 1e-12) << "yb" << k + 1;
    const auto u0 = unitarity_residuals(g), u1 = unitarity_residuals(d);
    for (int k = 0; k < kUnitarityConditionCount; ++k) EXPECT_NEAR(u0[k], u1[k], 1e-12);
  }
}

TEST(YbeResiduals, RedundantConditionsCoincide) {
  std::mt19937_64 rng(17);
  const std::array<std::vector<int>, 4> groups = {
      {{1, 11, 16, 17, 22, 32}, {4, 13, 15, 28}, {5, 18, 20, 29}, {6, 27}}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto r = ybe_residuals(testing::random_gate(rng));
    for (const auto& group : groups) {
      for (int k : group) EXPECT_NEAR(r[k - 1], r[group[0] - 1], 1e-12) << "yb" << k;
    }
  }
}

// The entry conditions and the 8x8 oracle give the same verdict.
TEST(ConditionOracleEquivalence, RandomGatesAndSolutions) {
  std::mt19937_64 rng(18);
  int disagreements = 0, solutions = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    EightVertexGate g;
    switch (trial % 5) {
      case 0: g = testing::random_case1(rng); break;
      case 1: g = testing::random_case2(rng); break;
      case 2: g = testing::random_case3(rng); break;
      default: g = testing::random_gate(rng); break;
    }
    const bool by_conditions = satisfies_ybe_conditions(g, 1e-9);
    const bool by_oracle = braided_ybe_residual(to_matrix(g)) <= 1e-9;
    disagreements += by_conditions != by_oracle;
    solutions += by_oracle;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_EQ(solutions, 6000);
}

}  // namespace
}  // namespace yb
