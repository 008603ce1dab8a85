#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "test_support.hpp"
#include "yb/classifier.hpp"
#include "yb/families.hpp"
#include "yb/json_io.hpp"

namespace yb {
namespace {

void expect_invariants(const ClassificationReport& r) {
  if (r.is_unitary && r.satisfies_ybe) EXPECT_EQ(r.universal, r.entangling);
  if (r.family != Family::kNone) {
    EXPECT_TRUE(r.is_eight_vertex && r.is_unitary && r.satisfies_ybe);
  }
  EXPECT_EQ(r.residuals.has_value(), r.is_eight_vertex);
  EXPECT_EQ(r.gate.has_value(), r.is_eight_vertex);
}

TEST(Classify, Examples) {
  const ClassificationReport bell = classify(to_matrix(bell_gate()));
  EXPECT_EQ(bell.family, Family::kCase3);
  EXPECT_TRUE(bell.entangling);
  EXPECT_TRUE(bell.universal);
  expect_invariants(bell);

  const ClassificationReport swap = classify(swap_gate());
  EXPECT_EQ(swap.family, Family::kCase1);
  EXPECT_FALSE(swap.entangling);
  EXPECT_FALSE(swap.universal);

  const ClassificationReport scalar = classify(std::polar(1.0, 0.9) * identity(4));
  EXPECT_EQ(scalar.family, Family::kNonEntanglingScalar);
  EXPECT_FALSE(scalar.entangling);
  EXPECT_EQ(classify(identity(4)).family, Family::kNonEntanglingScalar);

  const ClassificationReport special = classify(to_matrix(testing::case4_special_point()));
  EXPECT_EQ(special.family, Family::kCase4);
  EXPECT_TRUE(special.universal);
}

TEST(Classify, NonEightVertexInput) {
  SquareMatrix cnot = SquareMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const ClassificationReport r = classify(cnot);
  EXPECT_FALSE(r.is_eight_vertex);
  EXPECT_TRUE(r.is_unitary);
  EXPECT_TRUE(r.entangling);
  EXPECT_TRUE(r.universal);
  EXPECT_EQ(r.family, Family::kNone);
  EXPECT_FALSE(r.notes.empty());
  expect_invariants(r);

  EXPECT_THROW(classify(identity(2)), DimensionError);
}

TEST(Classify, NonSolutionsGetNoFamily) {
  EightVertexGate g = bell_gate();
  g.b *= 1.001;
  const ClassificationReport r = classify(to_matrix(g));
  EXPECT_TRUE(r.is_eight_vertex);
  EXPECT_FALSE(r.is_unitary);
  EXPECT_EQ(r.family, Family::kNone);
  EXPECT_FALSE(r.universal);
  expect_invariants(r);

  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassificationReport x = classify(to_matrix(testing::random_gate(rng)));
    EXPECT_FALSE(x.satisfies_ybe);
    EXPECT_EQ(x.family, Family::kNone);
    expect_invariants(x);
  }
}

TEST(Classify, FamilySoundness) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const EightVertexGate c1 = testing::random_case1(rng);
    const ClassificationReport r1 = classify(to_matrix(c1));
    EXPECT_EQ(r1.family, Family::kCase1);
    EXPECT_EQ(r1.entangling, std::abs(c1.a * c1.h - c1.d * c1.e) > 1e-8);
    expect_invariants(r1);

    const EightVertexGate c2 = testing::random_case2(rng);
    const ClassificationReport r2 = classify(to_matrix(c2));
    EXPECT_EQ(r2.family, Family::kCase2);
    EXPECT_EQ(r2.entangling, std::abs(c2.b * c2.g - c2.c * c2.c) > 1e-8);
    expect_invariants(r2);

    const ClassificationReport r3 = classify(to_matrix(testing::random_case3(rng)));
    EXPECT_EQ(r3.family, Family::kCase3);
    EXPECT_TRUE(r3.entangling);
    expect_invariants(r3);
  }
}

// The known families are asserted to cover every dense solver output; a
// breach would mean a unitary eight-vertex solution outside them.
TEST(Classify, FamilyNoneUnreachableOnSolverOutputs) {
  int classified = 0;
  for (std::uint64_t seed = 0; classified < 10000; ++seed) {
    const Case4Search search = solve_case4_all(seed, 1000);
    for (const auto& s : search.solutions) {
      const ClassificationReport r = classify(to_matrix(s.gate));
      ASSERT_NE(r.family, Family::kNone) << "seed " << seed << " restart " << s.restart;
      EXPECT_EQ(r.family, Family::kCase4);
      EXPECT_TRUE(r.universal);
      if (++classified == 10000) break;
    }
  }
}

TEST(Classify, PhaseDeformationInvariance) {
  std::mt19937_64 rng(62);
  std::vector<EightVertexGate> gates;
  for (int k = 0; k < 30; ++k) {
    gates.push_back(testing::random_case1(rng));
    gates.push_back(testing::random_case2(rng));
    gates.push_back(testing::random_case3(rng));
  }
  for (const auto& s : solve_case4_all(3, 20).solutions) gates.push_back(s.gate);
  gates.push_back(testing::random_gate(rng));

  for (const EightVertexGate& g : gates) {
    const SquareMatrix m = to_matrix(g);
    const ClassificationReport base = classify(m);
    for (int k = 0; k < 5; ++k) {
      const double phi = testing::random_angle(rng);
      const ClassificationReport d = classify(to_matrix(phase_deform(from_matrix(m), phi)));
      EXPECT_EQ(d.family, base.family);
      EXPECT_EQ(d.entangling, base.entangling);
      EXPECT_EQ(d.universal, base.universal);
      EXPECT_EQ(d.satisfies_ybe, base.satisfies_ybe);
      EXPECT_EQ(d.is_unitary, base.is_unitary);
    }
  }
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : {Family::kCase1, Family::kCase2, Family::kCase3, Family::kCase4,
                   Family::kNonEntanglingScalar, Family::kNone}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_EQ(family_from_string("case1"), std::nullopt);
}

TEST(ReportJson, DeterministicAndRoundTrips) {
  std::mt19937_64 rng(63);
  SquareMatrix cnot = SquareMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  for (const SquareMatrix& m : {to_matrix(bell_gate()), swap_gate(), cnot,
                                to_matrix(testing::random_case2(rng)),
                                to_matrix(testing::random_gate(rng))}) {
    const ClassificationReport r = classify(m);
    const std::string text = report_to_json(r);
    EXPECT_EQ(text, report_to_json(classify(m)));
    const ClassificationReport back = report_from_json(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(report_to_json(back), text);
  }
}

TEST(ReportJson, ResidualArrays) {
  const auto j = nlohmann::json::parse(report_to_json(classify(to_matrix(bell_gate()))));
  ASSERT_TRUE(j.contains("residuals"));
  EXPECT_EQ(j["residuals"]["ybe"].size(), 32u);
  EXPECT_EQ(j["residuals"]["unitarity"].size(), 6u);
  EXPECT_EQ(j["family"], "Case3");

  EightVertexGate g;
  g.a = g.c = 1.0;
  g.f = 2.0;
  g.b = g.g = 1.0;
  const auto k = nlohmann::json::parse(report_to_json(classify(to_matrix(g))));
  EXPECT_DOUBLE_EQ(k["residuals"]["ybe"][0].get<double>(), ybe_residuals(g)[0]);
  EXPECT_THROW(report_from_json("{"), InputError);
}

}  // namespace
}  // namespace yb
