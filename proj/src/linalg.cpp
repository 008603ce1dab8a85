#include "yb/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace yb {

namespace {

void require_same_square(const SquareMatrix& lhs, const SquareMatrix& rhs, const char* op) {
  if (lhs.rows() != lhs.cols() || rhs.rows() != rhs.cols() || lhs.rows() != rhs.rows()) {
    throw DimensionError(std::string(op) + ": expected square matrices of equal size, got " +
                         std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " and " +
                         std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
}

}  // namespace

SquareMatrix identity(Eigen::Index dim) { return SquareMatrix::Identity(dim, dim); }

SquareMatrix swap_gate() {
  SquareMatrix s = SquareMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

SquareMatrix matmul(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  require_same_square(lhs, rhs, "matmul");
  return lhs * rhs;
}

SquareMatrix kron(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  return Eigen::kroneckerProduct(lhs, rhs).eval();
}

SquareMatrix dagger(const SquareMatrix& m) { return m.adjoint(); }

double frobenius_distance(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError("frobenius_distance: shape mismatch");
  }
  return (lhs - rhs).norm();
}

bool is_unitary(const SquareMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return frobenius_distance(m * m.adjoint(), identity(m.rows())) <= tol;
}

void require_finite(const SquareMatrix& m, const std::string& what) {
  if (!m.allFinite()) throw std::invalid_argument(what + ": non-finite entry");
}

}  // namespace yb
