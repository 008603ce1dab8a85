#include "yb/json_io.hpp"

#include <algorithm>

#include "yb/classifier.hpp"

namespace yb {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError("expected a complex number as [re, im], got " + j.dump());
}

json gate_to_json(const EightVertexGate& gate) {
  json out = json::object();
  const auto v = entries(gate);
  for (std::size_t k = 0; k < v.size(); ++k) out[std::string(1, kEntryNames[k])] = complex_to_json(v[k]);
  return out;
}

EightVertexGate gate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("gate must be an object of entries a..h");
  std::array<Complex, 8> v{};
  for (const auto& [key, value] : j.items()) {
    const auto it = key.size() == 1 ? std::find(kEntryNames.begin(), kEntryNames.end(), key[0])
                                    : kEntryNames.end();
    if (it == kEntryNames.end()) throw InputError("unknown gate entry '" + key + "'");
    v[static_cast<std::size_t>(it - kEntryNames.begin())] = complex_from_json(value);
  }
  return gate_from_entries(v);
}

json matrix_to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SquareMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  SquareMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

SquareMatrix parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("expected a JSON object with \"matrix\" or \"gate\"");
  SquareMatrix m;
  if (doc.contains("matrix")) {
    m = matrix_from_json(doc["matrix"]);
  } else if (doc.contains("gate")) {
    m = to_matrix(gate_from_json(doc["gate"]));
  } else {
    throw InputError("expected a JSON object with \"matrix\" or \"gate\"");
  }
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
  return m;
}

json condition_report_to_json(const ConditionReport& report) {
  return json{{"ybe", report.ybe_residuals}, {"unitarity", report.unitarity_residuals}};
}

std::string report_to_json(const ClassificationReport& r) {
  json out;
  out["is_eight_vertex"] = r.is_eight_vertex;
  out["gate"] = r.gate ? gate_to_json(*r.gate) : json(nullptr);
  out["is_unitary"] = r.is_unitary;
  out["satisfies_ybe"] = r.satisfies_ybe;
  out["family"] = to_string(r.family);
  out["entangling"] = r.entangling;
  out["universal"] = r.universal;
  out["residuals"] = r.residuals ? condition_report_to_json(*r.residuals) : json(nullptr);
  out["oracle_residual"] = r.oracle_residual;
  out["notes"] = r.notes;
  return out.dump(2);
}

ClassificationReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ClassificationReport r;
    r.is_eight_vertex = j.at("is_eight_vertex").get<bool>();
    if (!j.at("gate").is_null()) r.gate = gate_from_json(j.at("gate"));
    r.is_unitary = j.at("is_unitary").get<bool>();
    r.satisfies_ybe = j.at("satisfies_ybe").get<bool>();
    const auto family = family_from_string(j.at("family").get<std::string>());
    if (!family) throw InputError("unknown family " + j.at("family").dump());
    r.family = *family;
    r.entangling = j.at("entangling").get<bool>();
    r.universal = j.at("universal").get<bool>();
    if (!j.at("residuals").is_null()) {
      ConditionReport c;
      c.ybe_residuals = j.at("residuals").at("ybe").get<std::array<double, kYbeConditionCount>>();
      c.unitarity_residuals =
          j.at("residuals").at("unitarity").get<std::array<double, kUnitarityConditionCount>>();
      r.residuals = c;
    }
    r.oracle_residual = j.at("oracle_residual").get<double>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace yb
