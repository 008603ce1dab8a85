#include "yb/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "yb/entanglement.hpp"
#include "yb/oracle.hpp"

namespace yb {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 6> kFamilyNames = {{
    {Family::kCase1, "Case1"},
    {Family::kCase2, "Case2"},
    {Family::kCase3, "Case3"},
    {Family::kCase4, "Case4"},
    {Family::kNonEntanglingScalar, "NonEntanglingScalar"},
    {Family::kNone, "None"},
}};

// Closed-form coefficients this small give outcome concurrences that the
// search cannot resolve at kSearchTol; the cross-check is skipped there.
constexpr double kAmbiguousCoefficient = 1e-6;

double max_coefficient(const EightVertexGate& gate) {
  const auto det = OutcomeDeterminant::of(gate);
  return std::max({std::abs(det.x2z2), std::abs(det.y2w2), std::abs(det.x2w2),
                   std::abs(det.y2z2), std::abs(det.xyzw)});
}

Family match_family(const EightVertexGate& r, double tol) {
  const auto zero = [tol](Complex z) { return std::abs(z) <= tol; };
  const auto near = [tol](Complex x, Complex y) { return std::abs(x - y) <= tol; };
  const bool diagonal_equal = near(r.a, r.c) && near(r.a, r.f) && near(r.a, r.h);
  const auto v = entries(r);
  const bool none_zero = std::none_of(v.begin(), v.end(), zero);

  if (zero(r.b) && zero(r.g) && zero(r.d) && zero(r.e) && diagonal_equal) {
    return Family::kNonEntanglingScalar;
  }
  if (zero(r.b) && zero(r.g) && zero(r.c) && zero(r.f)) return Family::kCase1;
  if (zero(r.a) && zero(r.h) && zero(r.d) && zero(r.e)) return Family::kCase2;
  if (none_zero && near(r.e, -r.d) && diagonal_equal) return Family::kCase3;
  if (none_zero && near(r.e, r.d) && near(r.f, r.c)) return Family::kCase4;
  return Family::kNone;
}

}  // namespace

std::string to_string(Family family) {
  for (const auto& f : kFamilyNames) {
    if (f.family == family) return std::string(f.name);
  }
  return "None";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& f : kFamilyNames) {
    if (f.name == name) return f.family;
  }
  return std::nullopt;
}

ClassificationReport classify(const SquareMatrix& m, double tol) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("classify: expected a 4x4 matrix");
  require_finite(m, "classify");

  ClassificationReport report;
  report.is_unitary = is_unitary(m, tol);
  report.oracle_residual = braided_ybe_residual(m);
  report.is_eight_vertex = eight_vertex_violations(m, tol).empty();

  if (report.is_eight_vertex) {
    const EightVertexGate gate = from_matrix(m, tol);
    report.gate = gate;
    report.residuals = condition_report(gate);
    report.satisfies_ybe = report.residuals->max_ybe() <= tol;
    if (report.satisfies_ybe != (report.oracle_residual <= tol)) {
      report.notes.push_back("entry conditions and 8x8 oracle straddle the tolerance");
    }

    report.entangling = entangling_closed_form(gate);
    const bool searched = max_outcome_concurrence(m) > kSearchTol;
    if (searched != report.entangling) {
      if (max_coefficient(gate) >= kAmbiguousCoefficient || searched) {
        std::ostringstream os;
        os << "closed-form entangling verdict " << report.entangling
           << " contradicts product-state search";
        throw InternalInconsistency(os.str());
      }
      report.notes.push_back("entangling coefficients below search resolution; closed form used");
    }
  } else {
    report.notes.push_back("not of eight-vertex form");
    report.satisfies_ybe = report.oracle_residual <= tol;
    report.entangling = entangling_by_search(m, kSearchTol);
  }

  report.universal = report.is_unitary && report.entangling;

  if (!report.is_eight_vertex) return report;
  if (!report.is_unitary || !report.satisfies_ybe) {
    report.notes.push_back("not a unitary Yang-Baxter solution");
    return report;
  }
  report.family = match_family(*report.gate, tol);
  switch (report.family) {
    case Family::kNone:
      report.notes.push_back("unitary eight-vertex solution outside the known families");
      break;
    case Family::kCase3:
    case Family::kCase4:
      if (!report.entangling) report.notes.push_back("dense family member reported non-entangling");
      break;
    default:
      break;
  }
  return report;
}

}  // namespace yb
