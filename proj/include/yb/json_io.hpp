#pragma once

// JSON encodings shared by the CLI and the report serializer.
//
// Complex numbers are [re, im] pairs (a bare number is read as a real).
// A 4x4 input document is either
//   {"matrix": [[[re, im], x4] x4]}
// or the eight-vertex shorthand
//   {"gate": {"a": [re, im], ..., "h": [re, im]}}
// where omitted gate entries are zero.

#include <stdexcept>
#include <string_view>

#include "json.hpp"
#include "yb/eight_vertex.hpp"

namespace yb {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json gate_to_json(const EightVertexGate& gate);
EightVertexGate gate_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& rows);

/// Reads a {"matrix": ...} or {"gate": ...} document. Throws InputError on
/// malformed text, unknown layout, non-square or non-finite matrices.
SquareMatrix parse_matrix_document(std::string_view text);

nlohmann::json condition_report_to_json(const ConditionReport& report);

}  // namespace yb
