#include "yb/eight_vertex.hpp"

#include <algorithm>
#include <sstream>

namespace yb {

std::array<Complex, kUnitarityConditionCount> unitarity_differences(const EightVertexGate& r) {
  return {{
      std::norm(r.a) + std::norm(r.b) - 1.0,
      std::norm(r.c) + std::norm(r.d) - 1.0,
      std::norm(r.e) + std::norm(r.f) - 1.0,
      std::norm(r.g) + std::norm(r.h) - 1.0,
      r.a * std::conj(r.g) + r.b * std::conj(r.h),
      r.c * std::conj(r.e) + r.d * std::conj(r.f),
  }};
}

double ConditionReport::max_ybe() const {
  return *std::max_element(ybe_residuals.begin(), ybe_residuals.end());
}

double ConditionReport::max_unitarity() const {
  return *std::max_element(unitarity_residuals.begin(), unitarity_residuals.end());
}

namespace {

std::string describe(const std::vector<NotEightVertex::Offender>& offenders) {
  std::ostringstream os;
  os << "matrix is not of eight-vertex form; nonzero structural entries:";
  for (const auto& o : offenders) {
    os << " (" << o.row << "," << o.col << ")=" << o.modulus;
  }
  return os.str();
}

bool is_live(int row, int col) {
  return std::any_of(kLivePositions.begin(), kLivePositions.end(),
                     [&](const auto& p) { return p.first == row && p.second == col; });
}

}  // namespace

NotEightVertex::NotEightVertex(std::vector<Offender> offenders)
    : std::runtime_error(describe(offenders)), offenders_(std::move(offenders)) {}

SquareMatrix to_matrix(const EightVertexGate& gate) {
  SquareMatrix m = SquareMatrix::Zero(4, 4);
  const auto v = entries(gate);
  for (std::size_t k = 0; k < v.size(); ++k) {
    m(kLivePositions[k].first, kLivePositions[k].second) = v[k];
  }
  return m;
}

std::vector<NotEightVertex::Offender> eight_vertex_violations(const SquareMatrix& m, double tol) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError("eight-vertex form requires a 4x4 matrix");
  }
  std::vector<NotEightVertex::Offender> offenders;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (is_live(i, j)) continue;
      const double mod = std::abs(m(i, j));
      if (!(mod <= tol)) offenders.push_back({i, j, mod});
    }
  }
  return offenders;
}

EightVertexGate from_matrix(const SquareMatrix& m, double tol) {
  auto offenders = eight_vertex_violations(m, tol);
  if (!offenders.empty()) throw NotEightVertex(std::move(offenders));
  std::array<Complex, 8> v;
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = m(kLivePositions[k].first, kLivePositions[k].second);
  }
  return gate_from_entries(v);
}

std::array<double, kYbeConditionCount> ybe_residuals(const EightVertexGate& gate) {
  const auto diff = ybe_differences(gate);
  std::array<double, kYbeConditionCount> out;
  std::transform(diff.begin(), diff.end(), out.begin(), [](Complex z) { return std::abs(z); });
  return out;
}

std::array<double, kUnitarityConditionCount> unitarity_residuals(const EightVertexGate& gate) {
  const auto diff = unitarity_differences(gate);
  std::array<double, kUnitarityConditionCount> out;
  std::transform(diff.begin(), diff.end(), out.begin(), [](Complex z) { return std::abs(z); });
  return out;
}

ConditionReport condition_report(const EightVertexGate& gate) {
  return {ybe_residuals(gate), unitarity_residuals(gate)};
}

bool satisfies_ybe_conditions(const EightVertexGate& gate, double tol) {
  return condition_report(gate).max_ybe() <= tol;
}

bool satisfies_unitarity_conditions(const EightVertexGate& gate, double tol) {
  return condition_report(gate).max_unitarity() <= tol;
}

bool zero_pattern_ok(const EightVertexGate& gate, double tol) {
  const auto zero = [tol](Complex z) { return std::abs(z) <= tol; };
  const bool za = zero(gate.a), zb = zero(gate.b), zc = zero(gate.c), zd = zero(gate.d);
  const bool ze = zero(gate.e), zf = zero(gate.f), zg = zero(gate.g), zh = zero(gate.h);
  return zb == zg && zc == zf && ze == zd && za == zh &&  //
         !(zb && za) && !(zc && zd) && !(ze && zf) && !(zg && zh);
}

EightVertexGate phase_deform(const EightVertexGate& gate, double phi) {
  EightVertexGate out = gate;
  out.b *= std::polar(1.0, phi);
  out.g *= std::polar(1.0, -phi);
  return out;
}

bool all_finite(const EightVertexGate& gate) {
  const auto v = entries(gate);
  return std::all_of(v.begin(), v.end(),
                     [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

}  // namespace yb
