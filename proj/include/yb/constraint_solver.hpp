#pragma once

// Least-squares search over eight-vertex gates restricted to a zero/alias
// pattern. Entries are bound to complex unknowns (or pinned to zero); the
// residual vector stacks real and imaginary parts of complex polynomial
// conditions, and the Jacobian is exact.

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "yb/eight_vertex.hpp"

namespace yb {

/// Which polynomial conditions a ConstraintSystem drives to zero.
enum class ConditionSet {
  /// Case-4 relations (e = d and f = c structurally) plus the six unitarity
  /// relations.
  kCase4,
  /// All 32 Yang-Baxter conditions plus the six unitarity relations.
  kFull,
};

/// A complex condition value with its Wirtinger derivatives with respect to
/// each of the eight entries and their conjugates.
struct WirtingerValue {
  Complex value{};
  std::array<Complex, 8> dz{};
  std::array<Complex, 8> dzbar{};
};

/// Forward-mode derivative carrier for holomorphic polynomials in the eight
/// entries.
struct HoloJet {
  Complex v{};
  Eigen::Matrix<Complex, 8, 1> d = Eigen::Matrix<Complex, 8, 1>::Zero();

  static HoloJet variable(Complex value, int index) {
    HoloJet j{value};
    j.d(index) = 1.0;
    return j;
  }

  friend HoloJet operator+(const HoloJet& l, const HoloJet& r) { return {l.v + r.v, l.d + r.d}; }
  friend HoloJet operator-(const HoloJet& l, const HoloJet& r) { return {l.v - r.v, l.d - r.d}; }
  friend HoloJet operator*(const HoloJet& l, const HoloJet& r) {
    return {l.v * r.v, r.v * l.d + l.v * r.d};
  }
};

/// Conditions of the chosen set evaluated with derivatives.
std::vector<WirtingerValue> condition_values(ConditionSet set, const EightVertexGate& gate);

struct SolverOutcome {
  EightVertexGate gate;
  /// Max modulus over the condition set (after projecting onto the modulus
  /// floor, when one is set).
  double max_residual = 0.0;
  int evaluations = 0;
};

class ConstraintSystem {
 public:
  static constexpr int kPinnedZero = -1;

  /// binding[k] is the complex unknown feeding entry k, or kPinnedZero.
  ConstraintSystem(ConditionSet set, std::array<int, 8> binding);

  /// Entries in `floored` are kept at modulus >= floor by a hinge penalty
  /// during the search and projected onto the floor before scoring.
  ConstraintSystem& with_modulus_floor(double floor, std::array<bool, 8> floored);

  int unknowns() const { return unknowns_; }
  int parameters() const { return 2 * unknowns_; }
  int values() const;

  EightVertexGate gate(const Eigen::VectorXd& params) const;
  Eigen::VectorXd residuals(const Eigen::VectorXd& params) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& params) const;

  /// Max modulus of the condition set at gate.
  double score(const EightVertexGate& gate) const;

  /// Entries with modulus in (0, floor) scaled up to the floor; zeros get the
  /// floor on the real axis.
  EightVertexGate project_to_floor(const EightVertexGate& gate) const;

  /// Unknowns drawn uniformly from the complex unit disk.
  Eigen::VectorXd random_start(std::uint64_t seed) const;

  SolverOutcome minimize(Eigen::VectorXd start) const;

 private:
  ConditionSet set_;
  std::array<int, 8> binding_;
  int unknowns_ = 0;
  double floor_ = 0.0;
  std::array<bool, 8> floored_{};
};

}  // namespace yb
