#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yb/eight_vertex.hpp"

namespace yb {

enum class Family { kCase1, kCase2, kCase3, kCase4, kNonEntanglingScalar, kNone };

std::string to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct ClassificationReport {
  bool is_eight_vertex = false;
  std::optional<EightVertexGate> gate;
  bool is_unitary = false;
  bool satisfies_ybe = false;
  Family family = Family::kNone;
  bool entangling = false;
  /// A two-qubit unitary is universal iff it is entangling.
  bool universal = false;
  /// Present iff is_eight_vertex.
  std::optional<ConditionReport> residuals;
  double oracle_residual = 0.0;
  std::vector<std::string> notes;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// The closed-form entangling criterion disagreed with the product-state
/// search on an unambiguous input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome concurrence threshold used by the search cross-check.
inline constexpr double kSearchTol = 1e-8;

/// Full verdict for a 4x4 matrix. Zero tests and entry comparisons use
/// moduli against tol. Families are assigned only to unitary Yang-Baxter
/// solutions of eight-vertex form:
///   b, g, d, e ~ 0 and a ~ c ~ f ~ h  -> NonEntanglingScalar
///   b, g, c, f ~ 0                   -> Case1
///   a, h, d, e ~ 0                   -> Case2
///   no zeros, e ~ -d, a ~ c ~ f ~ h  -> Case3
///   no zeros, e ~ d, f ~ c           -> Case4
/// Any other solution gets family None with a note.
/// Throws DimensionError for non-4x4 input.
ClassificationReport classify(const SquareMatrix& m, double tol = kDefaultTol);

/// Key-ordered JSON, byte-identical for equal reports.
std::string report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(std::string_view text);

}  // namespace yb
