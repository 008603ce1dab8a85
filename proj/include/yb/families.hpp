#pragma once

// The four families of entangling-capable unitary eight-vertex Yang-Baxter
// solutions, a numeric solver for the implicitly defined fourth family, and
// numeric probes of the zero patterns that admit no solution.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "yb/eight_vertex.hpp"

namespace yb {

/// a, d, e, h unit phases; b = c = f = g = 0.
EightVertexGate gen_case1(double phase_a, double phase_d, double phase_e, double phase_h);

/// b, c = f, g unit phases; a = d = e = h = 0.
EightVertexGate gen_case2(double phase_b, double phase_c, double phase_g);

/// a = c = f = h = e^{i alpha}/sqrt2, d = sign*a, e = -sign*a,
/// b = e^{i beta}/sqrt2, g = -e^{i(2 alpha - beta)}/sqrt2, hence bg = -a^2.
/// sign must be +1 or -1.
EightVertexGate gen_case3(double alpha, double beta, int sign);

/// The Bell matrix (1/sqrt2) [[1,0,0,1],[0,1,-1,0],[0,1,1,0],[-1,0,0,1]].
EightVertexGate bell_gate();

/// Residuals of the fourth family's defining relations at a gate.
struct Case4Constraints {
  double squares_balance = 0.0;  // |a^2 - d^2 - (d^2 - h^2)|
  double squares_vs_c = 0.0;     // |d^2 - h^2 - (ac - hc)|
  double squares_sum = 0.0;      // |a^2 + h^2 - 2d^2|
  double product_bg = 0.0;       // |bg - c^2|
  std::array<double, kUnitarityConditionCount> unitarity{};
  double tie_ed = 0.0;           // |e - d|
  double tie_fc = 0.0;           // |f - c|

  std::vector<double> as_vector() const;
  double max() const;
};

Case4Constraints case4_residual(const EightVertexGate& gate);

/// Reported when no restart reached an acceptable solution.
struct Infeasible {
  double best_residual = 0.0;
  int restarts = 0;
};

struct Case4Solution {
  EightVertexGate gate;
  int restart = 0;
  double constraint_residual = 0.0;
};

/// Acceptance thresholds for a restart's output.
inline constexpr double kCase4ResidualTol = 1e-10;
inline constexpr double kCase4OracleTol = 1e-9;
inline constexpr double kCase4MinModulus = 1e-6;

/// Random-restart Levenberg-Marquardt on the fourth family's relations over
/// the twelve real unknowns of (a, b, c, d, g, h), with e = d and f = c.
/// Returns the first restart whose output reaches kCase4ResidualTol, has every
/// entry modulus above kCase4MinModulus, and passes the 8x8 oracle and the
/// unitarity check at kCase4OracleTol. Throws std::invalid_argument if
/// restarts < 1.
std::variant<EightVertexGate, Infeasible> solve_case4(std::uint64_t seed, int restarts);

/// Every accepted restart, in restart order.
struct Case4Search {
  std::vector<Case4Solution> solutions;
  double best_residual = 0.0;
  int restarts = 0;
};
Case4Search solve_case4_all(std::uint64_t seed, int restarts);

/// LM from an explicit starting gate (only a, b, c, d, g, h are read).
Case4Solution refine_case4(const EightVertexGate& start);

enum class ProbeBranch {
  /// c = f = 0 together with a = h = 0.
  kCase2AhZero,
  /// d = e = 0 with a, b, g, h all bounded away from zero.
  kCase4DeZeroDense,
};

std::string to_string(ProbeBranch branch);

struct ProbeOptions {
  std::uint64_t seed = 0;
  /// Modulus floor on a, b, g, h in the dense branch; 0 disables it.
  double modulus_floor = 0.05;
};

struct ProbeReport {
  ProbeBranch branch{};
  int restarts = 0;
  /// Smallest max-modulus over all 32 Yang-Baxter and six unitarity
  /// conditions reached by any restart.
  double best_residual = 0.0;
  EightVertexGate best_gate;
  /// best_residual > kProbeSeparation.
  bool corroborates_infeasibility = false;
};

inline constexpr double kProbeSeparation = 1e-3;
inline constexpr int kMinProbeRestarts = 100;

/// Runs the full-condition solver restricted to the branch's zero pattern.
/// Throws std::invalid_argument if restarts < kMinProbeRestarts.
ProbeReport infeasibility_probe(ProbeBranch branch, int restarts, const ProbeOptions& options = {});

}  // namespace yb
