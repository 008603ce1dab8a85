#pragma once

// Braid group representations from a 4x4 Yang-Baxter solution: generator i
// on n strands acts as I_{2^{i-1}} (x) R (x) I_{2^{n-i-1}}, and its inverse
// as the inverse of that placement.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yb/linalg.hpp"

namespace yb {

inline constexpr int kMaxStrands = 10;

struct BraidLetter {
  int index = 1;  // 1-based generator index in [1, strands - 1]
  int sign = 1;   // +1 over-crossing, -1 under-crossing

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class BraidRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses whitespace-separated letters "s<i>" (positive) and "S<i>"
/// (inverse), e.g. "s1 s2 S1". Throws BraidRangeError for indices outside
/// [1, strands-1] or strands outside [2, kMaxStrands], and
/// std::invalid_argument for malformed tokens.
BraidWord parse_braid_word(std::string_view text, int strands);

std::string to_string(const BraidWord& word);

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs);

SquareMatrix generator_matrix(const SquareMatrix& m, int strands, int index);

/// Product of the letters' matrices, leftmost letter leftmost factor.
/// Inverse letters use the adjoint when m is unitary and an LU inverse
/// otherwise (SingularMatrix if m is not invertible).
SquareMatrix evaluate(const BraidWord& word, const SquareMatrix& m);

/// ||s1 s2 s1 - s2 s1 s2||_F on `strands` strands; at three strands this is
/// the braided Yang-Baxter residual.
double braid_relation_residual(const SquareMatrix& m, int strands = 3);

/// ||s1 s3 - s3 s1||_F on `strands` >= 4 strands.
double far_commutation_residual(const SquareMatrix& m, int strands = 4);

}  // namespace yb
