#pragma once

// Brute-force Yang-Baxter checks: build the 8x8 products on V (x) V (x) V and
// compare both sides. Works for any 4x4 matrix, eight-vertex or not.

#include "yb/linalg.hpp"

namespace yb {

/// ||(R(x)I)(I(x)R)(R(x)I) - (I(x)R)(R(x)I)(I(x)R)||_F.
double braided_ybe_residual(const SquareMatrix& m);

/// ||R12 R13 R23 - R23 R13 R12||_F with R13 = P23 R12 P23 and
/// P23 = I (x) S swapping the second and third tensor factors.
double algebraic_ybe_residual(const SquareMatrix& m);

/// S * M.
SquareMatrix swap_compose(const SquareMatrix& m);

}  // namespace yb
