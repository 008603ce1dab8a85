#pragma once

// Eight-vertex gates
//
//     | a 0 0 b |
//     | 0 c d 0 |
//     | 0 e f 0 |
//     | g 0 0 h |
//
// and their entrywise characterization as unitary braided Yang-Baxter
// solutions.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "yb/linalg.hpp"

namespace yb {

/// Entry storage for an eight-vertex gate, generic in the entry type so the
/// same polynomial conditions can be evaluated on plain complex numbers or on
/// forward-mode derivative carriers.
template <typename T>
struct BasicEightVertexGate {
  T a{}, b{}, c{}, d{}, e{}, f{}, g{}, h{};

  friend bool operator==(const BasicEightVertexGate&, const BasicEightVertexGate&) = default;
};

using EightVertexGate = BasicEightVertexGate<Complex>;

/// Entry names in storage order.
inline constexpr std::array<char, 8> kEntryNames = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};

/// Matrix position (row, col) of each live entry, in storage order.
inline constexpr std::array<std::pair<int, int>, 8> kLivePositions = {
    {{0, 0}, {0, 3}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 0}, {3, 3}}};

template <typename T>
std::array<T, 8> entries(const BasicEightVertexGate<T>& r) {
  return {r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h};
}

template <typename T>
BasicEightVertexGate<T> gate_from_entries(const std::array<T, 8>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

inline constexpr int kYbeConditionCount = 32;
inline constexpr int kUnitarityConditionCount = 6;

/// LHS - RHS of the 32 Yang-Baxter conditions on the entries, numbered 1..32
/// in storage index 0..31. Several conditions repeat one another (1, 11, 16,
/// 17, 22 and 32 are the same polynomial; so are 4, 13, 15, 28 and 5, 18, 20,
/// 29 and 6, 27); each one is kept so residuals stay indexable by number.
/// Every condition is an entry of the 8x8 braid-relation difference, so
/// together they vanish iff the gate solves the braided equation.
template <typename T>
std::array<T, kYbeConditionCount> ybe_differences(const BasicEightVertexGate<T>& r) {
  const T& a = r.a;
  const T& b = r.b;
  const T& c = r.c;
  const T& d = r.d;
  const T& e = r.e;
  const T& f = r.f;
  const T& g = r.g;
  const T& h = r.h;
  return {{
      b * f * g - b * c * g,                                // 1
      a * b * c + b * e * e - (a * a * b + b * c * h),      // 2
      a * a * c + b * h * g - (a * c * c + d * c * e),      // 3
      b * g * e - d * c * f,                                // 4
      f * c * e - b * d * g,                                // 5
      c * f * f - c * c * f,                                // 6
      g * a * a + h * c * g - (c * g * a + d * d * g),      // 7
      g * a * b + c * h * h - (c * c * h + d * c * e),      // 8
      a * b * d + b * e * f - (a * b * e + b * d * c),      // 9
      a * a * b + b * f * h - (a * b * f + b * d * d),      // 10
      b * g * f - c * b * g,                                // 11
      a * c * b + b * h * h - (c * b * h + d * d * b),      // 12
      c * f * d - e * b * g,                                // 13
      c * e * b + d * b * h - (e * b * h + f * d * b),      // 14
      d * c * f - g * b * e,                                // 15
      c * g * b - g * b * f,                                // 16
      f * b * g - b * g * c,                                // 17
      e * f * c - b * g * d,                                // 18
      e * g * a + f * d * g - (c * e * g + d * g * a),      // 19
      f * c * e - d * g * b,                                // 20
      g * a * a + h * f * g - (e * e * g + f * g * a),      // 21
      g * b * c - f * g * b,                                // 22
      g * c * a + h * h * g - (g * e * e + h * g * c),      // 23
      g * d * c + h * g * e - (g * e * f + h * g * d),      // 24
      e * f * d + f * f * a - (a * a * f + b * h * g),      // 25
      e * e * b + f * b * h - (a * f * b + b * h * h),      // 26
      f * f * c - f * c * c,                                // 27
      e * g * b - c * f * d,                                // 28
      g * b * d - e * f * c,                                // 29
      g * d * d + h * g * f - (g * f * a + h * h * g),      // 30
      g * a * b + h * h * f - (e * f * d + h * f * f),      // 31
      g * c * b - g * f * b,                                // 32
  }};
}

/// The six unitarity relations as (value - target): |a|^2+|b|^2-1,
/// |c|^2+|d|^2-1, |e|^2+|f|^2-1, |g|^2+|h|^2-1, a conj(g) + b conj(h),
/// c conj(e) + d conj(f).
std::array<Complex, kUnitarityConditionCount> unitarity_differences(const EightVertexGate& r);

struct ConditionReport {
  std::array<double, kYbeConditionCount> ybe_residuals{};
  std::array<double, kUnitarityConditionCount> unitarity_residuals{};

  double max_ybe() const;
  double max_unitarity() const;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Raised when a matrix has a structural-zero position above tolerance.
class NotEightVertex : public std::runtime_error {
 public:
  struct Offender {
    int row;
    int col;
    double modulus;
  };

  explicit NotEightVertex(std::vector<Offender> offenders);

  const std::vector<Offender>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<Offender> offenders_;
};

SquareMatrix to_matrix(const EightVertexGate& gate);

/// Reads the eight live entries of a 4x4 matrix. Every other entry must have
/// modulus <= tol or NotEightVertex is thrown listing the offending positions.
EightVertexGate from_matrix(const SquareMatrix& m, double tol = kDefaultTol);

/// Structural-zero positions of m whose modulus exceeds tol (empty iff m has
/// eight-vertex form at tol).
std::vector<NotEightVertex::Offender> eight_vertex_violations(const SquareMatrix& m, double tol);

std::array<double, kYbeConditionCount> ybe_residuals(const EightVertexGate& gate);
std::array<double, kUnitarityConditionCount> unitarity_residuals(const EightVertexGate& gate);
ConditionReport condition_report(const EightVertexGate& gate);

bool satisfies_ybe_conditions(const EightVertexGate& gate, double tol = kDefaultTol);
bool satisfies_unitarity_conditions(const EightVertexGate& gate, double tol = kDefaultTol);

/// Zero-pattern consequences of unitarity: b~0 <=> g~0, c~0 <=> f~0,
/// e~0 <=> d~0, a~0 <=> h~0, and b~0 => a nonzero, c~0 => d nonzero,
/// e~0 => f nonzero, g~0 => h nonzero. "~0" means modulus <= tol.
bool zero_pattern_ok(const EightVertexGate& gate, double tol = kDefaultTol);

/// b -> b e^{i phi}, g -> g e^{-i phi}.
EightVertexGate phase_deform(const EightVertexGate& gate, double phi);

bool all_finite(const EightVertexGate& gate);

}  // namespace yb
