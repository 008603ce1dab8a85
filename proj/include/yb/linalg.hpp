#pragma once

// Dense complex linear algebra on small square matrices.
//
// Index convention: row-major, and the two-qubit computational basis is
// ordered |00>, |01>, |10>, |11>. For a Kronecker product A (x) B the entry
// (i * B.rows() + k, j * B.cols() + l) equals A(i, j) * B(k, l), so the
// left factor is the most significant qubit.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace yb {

using Complex = std::complex<double>;

template <typename Scalar>
using SquareMatrixT =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using SquareMatrix = SquareMatrixT<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4, Eigen::RowMajor>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;

/// Absolute tolerance used by every verdict unless the caller passes one.
inline constexpr double kDefaultTol = 1e-10;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SquareMatrix identity(Eigen::Index dim);

/// The two-qubit swap gate exchanging |01> and |10>.
SquareMatrix swap_gate();

/// Product A*B. Throws DimensionError unless both are square with equal size.
SquareMatrix matmul(const SquareMatrix& lhs, const SquareMatrix& rhs);

SquareMatrix kron(const SquareMatrix& lhs, const SquareMatrix& rhs);

/// Conjugate transpose.
SquareMatrix dagger(const SquareMatrix& m);

/// sqrt(sum |A_ij - B_ij|^2). Throws DimensionError on shape mismatch.
double frobenius_distance(const SquareMatrix& lhs, const SquareMatrix& rhs);

/// ||A A^dagger - I||_F <= tol.
bool is_unitary(const SquareMatrix& m, double tol = kDefaultTol);

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const SquareMatrix& m, const std::string& what);

}  // namespace yb
