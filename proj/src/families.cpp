#include "yb/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "yb/constraint_solver.hpp"
#include "yb/oracle.hpp"

namespace yb {

EightVertexGate gen_case1(double phase_a, double phase_d, double phase_e, double phase_h) {
  EightVertexGate r;
  r.a = std::polar(1.0, phase_a);
  r.d = std::polar(1.0, phase_d);
  r.e = std::polar(1.0, phase_e);
  r.h = std::polar(1.0, phase_h);
  return r;
}

EightVertexGate gen_case2(double phase_b, double phase_c, double phase_g) {
  EightVertexGate r;
  r.b = std::polar(1.0, phase_b);
  r.c = r.f = std::polar(1.0, phase_c);
  r.g = std::polar(1.0, phase_g);
  return r;
}

EightVertexGate gen_case3(double alpha, double beta, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("gen_case3: sign must be +1 or -1");
  const double m = 1.0 / std::numbers::sqrt2;
  EightVertexGate r;
  r.a = r.c = r.f = r.h = std::polar(m, alpha);
  r.d = static_cast<double>(sign) * r.a;
  r.e = -static_cast<double>(sign) * r.a;
  r.b = std::polar(m, beta);
  r.g = -(r.a * r.a) / r.b;
  return r;
}

EightVertexGate bell_gate() { return gen_case3(0.0, 0.0, -1); }

std::vector<double> Case4Constraints::as_vector() const {
  std::vector<double> v{squares_balance, squares_vs_c, squares_sum, product_bg};
  v.insert(v.end(), unitarity.begin(), unitarity.end());
  v.push_back(tie_ed);
  v.push_back(tie_fc);
  return v;
}

double Case4Constraints::max() const {
  const auto v = as_vector();
  return *std::max_element(v.begin(), v.end());
}

Case4Constraints case4_residual(const EightVertexGate& r) {
  Case4Constraints out;
  const Complex a2 = r.a * r.a, d2 = r.d * r.d, h2 = r.h * r.h;
  out.squares_balance = std::abs(a2 - d2 - (d2 - h2));
  out.squares_vs_c = std::abs(d2 - h2 - (r.a * r.c - r.h * r.c));
  out.squares_sum = std::abs(a2 + h2 - 2.0 * d2);
  out.product_bg = std::abs(r.b * r.g - r.c * r.c);
  out.unitarity = unitarity_residuals(r);
  out.tie_ed = std::abs(r.e - r.d);
  out.tie_fc = std::abs(r.f - r.c);
  return out;
}

namespace {

// Unknowns: a=0, b=1, c=2 (also f), d=3 (also e), g=4, h=5.
ConstraintSystem case4_system() { return ConstraintSystem(ConditionSet::kCase4, {0, 1, 2, 3, 3, 2, 4, 5}); }

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  // splitmix64 step so neighbouring seeds do not share streams
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(restart) + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool acceptable_case4(const EightVertexGate& g, double constraint_residual) {
  if (!(constraint_residual <= kCase4ResidualTol)) return false;
  const auto v = entries(g);
  if (std::any_of(v.begin(), v.end(), [](Complex z) { return !(std::abs(z) > kCase4MinModulus); })) {
    return false;
  }
  const SquareMatrix m = to_matrix(g);
  return braided_ybe_residual(m) <= kCase4OracleTol && is_unitary(m, kCase4OracleTol);
}

Case4Solution run_case4(const ConstraintSystem& system, Eigen::VectorXd start, int restart) {
  const SolverOutcome out = system.minimize(std::move(start));
  return {out.gate, restart, case4_residual(out.gate).max()};
}

}  // namespace

Case4Solution refine_case4(const EightVertexGate& start) {
  const ConstraintSystem system = case4_system();
  Eigen::VectorXd x(system.parameters());
  const std::array<Complex, 6> unknowns{start.a, start.b, start.c, start.d, start.g, start.h};
  for (int u = 0; u < 6; ++u) {
    x(2 * u) = unknowns[u].real();
    x(2 * u + 1) = unknowns[u].imag();
  }
  return run_case4(system, x, 0);
}

Case4Search solve_case4_all(std::uint64_t seed, int restarts) {
  if (restarts < 1) throw std::invalid_argument("solve_case4: restarts must be >= 1");
  const ConstraintSystem system = case4_system();
  Case4Search search;
  search.restarts = restarts;
  search.best_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    Case4Solution s = run_case4(system, system.random_start(restart_seed(seed, k)), k);
    search.best_residual = std::min(search.best_residual, s.constraint_residual);
    if (acceptable_case4(s.gate, s.constraint_residual)) search.solutions.push_back(s);
  }
  return search;
}

std::variant<EightVertexGate, Infeasible> solve_case4(std::uint64_t seed, int restarts) {
  if (restarts < 1) throw std::invalid_argument("solve_case4: restarts must be >= 1");
  const ConstraintSystem system = case4_system();
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    const Case4Solution s = run_case4(system, system.random_start(restart_seed(seed, k)), k);
    best = std::min(best, s.constraint_residual);
    if (acceptable_case4(s.gate, s.constraint_residual)) return s.gate;
  }
  return Infeasible{best, restarts};
}

std::string to_string(ProbeBranch branch) {
  switch (branch) {
    case ProbeBranch::kCase2AhZero:
      return "case2_ah_zero";
    case ProbeBranch::kCase4DeZeroDense:
      return "case4_dezero_dense";
  }
  return "unknown";
}

ProbeReport infeasibility_probe(ProbeBranch branch, int restarts, const ProbeOptions& options) {
  if (restarts < kMinProbeRestarts) {
    throw std::invalid_argument("infeasibility_probe: at least 100 restarts required");
  }
  constexpr int z = ConstraintSystem::kPinnedZero;
  ConstraintSystem system =
      branch == ProbeBranch::kCase2AhZero
          // unknowns b, d, e, g
          ? ConstraintSystem(ConditionSet::kFull, {z, 0, z, 1, 2, z, 3, z})
          // unknowns a, b, c, f, g, h
          : ConstraintSystem(ConditionSet::kFull, {0, 1, 2, z, z, 3, 4, 5});
  if (branch == ProbeBranch::kCase4DeZeroDense && options.modulus_floor > 0.0) {
    system.with_modulus_floor(options.modulus_floor,
                              {true, true, false, false, false, false, true, true});
  }

  ProbeReport report;
  report.branch = branch;
  report.restarts = restarts;
  report.best_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    const SolverOutcome out = system.minimize(system.random_start(restart_seed(options.seed, k)));
    if (out.max_residual < report.best_residual) {
      report.best_residual = out.max_residual;
      report.best_gate = out.gate;
    }
  }
  report.corroborates_infeasibility = report.best_residual > kProbeSeparation;
  return report;
}

}  // namespace yb
