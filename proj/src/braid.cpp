#include "yb/braid.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace yb {

namespace {

void require_strands(int strands) {
  if (strands < 2 || strands > kMaxStrands) {
    throw BraidRangeError("strand count " + std::to_string(strands) + " outside [2, " +
                          std::to_string(kMaxStrands) + "]");
  }
}

void require_index(int strands, int index) {
  if (index < 1 || index > strands - 1) {
    throw BraidRangeError("generator index " + std::to_string(index) + " outside [1, " +
                          std::to_string(strands - 1) + "]");
  }
}

SquareMatrix inverse_of(const SquareMatrix& m) {
  if (is_unitary(m)) return m.adjoint();
  Eigen::FullPivLU<SquareMatrix> lu(m);
  if (!lu.isInvertible()) throw SingularMatrix("inverse letter requires an invertible matrix");
  return lu.inverse();
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  require_strands(strands);
  BraidWord word{strands, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) {
      throw std::invalid_argument("malformed braid letter '" + token + "'");
    }
    int index = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed braid letter '" + token + "'");
    }
    require_index(strands, index);
    word.letters.push_back({index, token[0] == 's' ? 1 : -1});
  }
  return word;
}

std::string to_string(const BraidWord& word) {
  std::string out;
  for (const auto& l : word.letters) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? 's' : 'S');
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands != rhs.strands) throw std::invalid_argument("concat: strand counts differ");
  BraidWord out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

SquareMatrix generator_matrix(const SquareMatrix& m, int strands, int index) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("generator_matrix: expected 4x4");
  require_strands(strands);
  require_index(strands, index);
  const Eigen::Index before = Eigen::Index{1} << (index - 1);
  const Eigen::Index after = Eigen::Index{1} << (strands - index - 1);
  return kron(identity(before), kron(m, identity(after)));
}

SquareMatrix evaluate(const BraidWord& word, const SquareMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("evaluate: expected 4x4");
  require_strands(word.strands);
  SquareMatrix out = identity(Eigen::Index{1} << word.strands);
  if (word.letters.empty()) return out;

  bool needs_inverse = false;
  for (const auto& l : word.letters) needs_inverse |= l.sign < 0;
  const SquareMatrix inv = needs_inverse ? inverse_of(m) : SquareMatrix();

  for (const auto& l : word.letters) {
    out = out * generator_matrix(l.sign > 0 ? m : inv, word.strands, l.index);
  }
  return out;
}

double braid_relation_residual(const SquareMatrix& m, int strands) {
  if (strands < 3) throw BraidRangeError("braid relation needs at least 3 strands");
  const SquareMatrix s1 = generator_matrix(m, strands, 1);
  const SquareMatrix s2 = generator_matrix(m, strands, 2);
  return frobenius_distance(s1 * s2 * s1, s2 * s1 * s2);
}

double far_commutation_residual(const SquareMatrix& m, int strands) {
  if (strands < 4) throw BraidRangeError("far commutation needs at least 4 strands");
  const SquareMatrix s1 = generator_matrix(m, strands, 1);
  const SquareMatrix s3 = generator_matrix(m, strands, 3);
  return frobenius_distance(s1 * s3, s3 * s1);
}

}  // namespace yb
