#include "yb/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace yb {

TwoQubitState product_state(Complex p0, Complex p1, Complex q0, Complex q1) {
  return {p0 * q0, p0 * q1, p1 * q0, p1 * q1};
}

double concurrence(const TwoQubitState& s) {
  const double n = s.norm();
  if (!(n > 1e-300)) throw ZeroState();
  const double scale = std::abs(n - 1.0) > 1e-12 ? 1.0 / (n * n) : 1.0;
  return 2.0 * std::abs(s.x * s.w - s.y * s.z) * scale;
}

bool is_product(const TwoQubitState& s, double tol) { return concurrence(s) <= tol; }

TwoQubitState apply_gate(const SquareMatrix& m, const TwoQubitState& s) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("apply: expected 4x4 matrix");
  return TwoQubitState::from_vector(m * s.vector());
}

OutcomeDeterminant OutcomeDeterminant::of(const EightVertexGate& r) {
  return {r.a * r.g, r.b * r.h, -r.c * r.e, -r.d * r.f, r.a * r.h + r.b * r.g - r.c * r.f - r.d * r.e};
}

Complex OutcomeDeterminant::evaluate(const TwoQubitState& p) const {
  // For a product state p = (x z, x w, y z, y w) the monomials are
  // x^2z^2 = p0^2, y^2w^2 = p3^2, x^2w^2 = p1^2, y^2z^2 = p2^2, xyzw = p0 p3.
  return x2z2 * p.x * p.x + y2w2 * p.w * p.w + x2w2 * p.y * p.y + y2z2 * p.z * p.z +
         xyzw * p.x * p.w;
}

bool entangling_closed_form(const EightVertexGate& gate) {
  const auto det = OutcomeDeterminant::of(gate);
  const auto small = [](Complex z) { return std::abs(z) <= kCoefficientEpsilon; };
  return !(small(det.x2z2) && small(det.y2w2) && small(det.x2w2) && small(det.y2z2) &&
           small(det.xyzw));
}

namespace {

// Calls visit(product_state) for every search point until it returns true.
template <typename Visitor>
bool for_each_search_state(std::uint64_t seed, Visitor&& visit) {
  constexpr double pi = std::numbers::pi;
  for (int ia = 0; ia < 8; ++ia) {
    for (int ib = 0; ib < 8; ++ib) {
      for (int ig = 0; ig < 8; ++ig) {
        for (int id = 0; id < 8; ++id) {
          const double alpha = ia * pi / 8, beta = ib * pi / 8;
          const Complex first1 = std::polar(std::sin(alpha), ig * pi / 4);
          const Complex second1 = std::polar(std::sin(beta), id * pi / 4);
          if (visit(product_state(std::cos(alpha), first1, std::cos(beta), second1))) return true;
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto qubit = [&] {
    Complex u(normal(rng), normal(rng)), v(normal(rng), normal(rng));
    const double n = std::sqrt(std::norm(u) + std::norm(v));
    return std::pair{u / n, v / n};
  };
  for (int k = 0; k < 200; ++k) {
    const auto [p0, p1] = qubit();
    const auto [q0, q1] = qubit();
    if (visit(product_state(p0, p1, q0, q1))) return true;
  }
  return false;
}

}  // namespace

bool entangling_by_search(const SquareMatrix& m, double tol, std::uint64_t seed) {
  return for_each_search_state(seed, [&](const TwoQubitState& p) {
    const TwoQubitState out = apply_gate(m, p);
    return out.norm() > 1e-300 && concurrence(out) > tol;
  });
}

double max_outcome_concurrence(const SquareMatrix& m, std::uint64_t seed) {
  double best = 0.0;
  for_each_search_state(seed, [&](const TwoQubitState& p) {
    const TwoQubitState out = apply_gate(m, p);
    if (out.norm() > 1e-300) best = std::max(best, concurrence(out));
    return false;
  });
  return best;
}

}  // namespace yb
