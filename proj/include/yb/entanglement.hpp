#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "yb/eight_vertex.hpp"
#include "yb/linalg.hpp"

namespace yb {

/// Pure two-qubit state x|00> + y|01> + z|10> + w|11>, not necessarily
/// normalized.
struct TwoQubitState {
  Complex x{}, y{}, z{}, w{};

  Vector4 vector() const { return {x, y, z, w}; }
  static TwoQubitState from_vector(const Vector4& v) { return {v(0), v(1), v(2), v(3)}; }
  double norm() const { return vector().norm(); }
};

class ZeroState : public std::invalid_argument {
 public:
  ZeroState() : std::invalid_argument("state has zero norm") {}
};

/// (p0, p1) (x) (q0, q1).
TwoQubitState product_state(Complex p0, Complex p1, Complex q0, Complex q1);

/// 2|xw - yz| of the normalized state. Inputs whose norm differs from one by
/// more than 1e-12 are normalized first.
double concurrence(const TwoQubitState& s);

bool is_product(const TwoQubitState& s, double tol = kDefaultTol);

TwoQubitState apply_gate(const SquareMatrix& m, const TwoQubitState& s);

/// Coefficients of the outcome determinant XW - YZ of R((x,y)(x)(z,w)),
/// viewed as a polynomial in the input amplitudes:
///   ag x^2z^2 + bh y^2w^2 - ce x^2w^2 - df y^2z^2 + (ah + bg - cf - de) xyzw.
struct OutcomeDeterminant {
  Complex x2z2;    // ag
  Complex y2w2;    // bh
  Complex x2w2;    // -ce
  Complex y2z2;    // -df
  Complex xyzw;    // ah + bg - cf - de

  static OutcomeDeterminant of(const EightVertexGate& gate);
  Complex evaluate(const TwoQubitState& input_product) const;
};

inline constexpr double kCoefficientEpsilon = 1e-12;

/// True iff some product state is mapped to an entangled state: the outcome
/// determinant is a nonzero polynomial, i.e. one of its five coefficients
/// exceeds kCoefficientEpsilon in modulus.
bool entangling_closed_form(const EightVertexGate& gate);

/// Searches a fixed grid of product states (Bloch angles in steps of pi/8,
/// relative phases in steps of pi/4) plus 200 seeded random product states
/// for an outcome with concurrence above tol. Outcomes of zero norm are
/// skipped.
bool entangling_by_search(const SquareMatrix& m, double tol = 1e-8, std::uint64_t seed = 0);

/// Largest outcome concurrence seen by the same search.
double max_outcome_concurrence(const SquareMatrix& m, std::uint64_t seed = 0);

}  // namespace yb
