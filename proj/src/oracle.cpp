#include "yb/oracle.hpp"

namespace yb {

namespace {

void require_4x4(const SquareMatrix& m, const char* op) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError(std::string(op) + ": expected 4x4");
}

}  // namespace

double braided_ybe_residual(const SquareMatrix& m) {
  require_4x4(m, "braided_ybe_residual");
  const SquareMatrix left = kron(m, identity(2));
  const SquareMatrix right = kron(identity(2), m);
  return frobenius_distance(left * right * left, right * left * right);
}

double algebraic_ybe_residual(const SquareMatrix& m) {
  require_4x4(m, "algebraic_ybe_residual");
  const SquareMatrix r12 = kron(m, identity(2));
  const SquareMatrix r23 = kron(identity(2), m);
  const SquareMatrix p23 = kron(identity(2), swap_gate());
  const SquareMatrix r13 = p23 * r12 * p23;
  return frobenius_distance(r12 * r13 * r23, r23 * r13 * r12);
}

SquareMatrix swap_compose(const SquareMatrix& m) {
  require_4x4(m, "swap_compose");
  return swap_gate() * m;
}

}  // namespace yb
