#include "contractkit/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace contractkit::io {

namespace {

Rational entry_from_json(const json& e, const std::string& where) {
  try {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return parse_rational(e.dump());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(where + ": " + ex.what());
  }
  throw ParseError(where + ": entries must be rational strings or integers, got " + e.dump());
}

const json& require_field(const json& j, const char* key, const std::string& context) {
  if (!j.is_object()) throw ParseError(context + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(context + ": missing field '" + key + "'");
  return *it;
}

Matrix parse_rows(const json& j, const std::string& label, std::optional<std::size_t> width) {
  if (!j.is_array()) throw ParseError("matrix " + label + ": expected an array of rows");
  if (j.empty()) return Matrix();
  std::vector<Vector> rows;
  const std::size_t cols = width ? *width : (j[0].is_array() ? j[0].size() : 0);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    const std::string where = "matrix " + label + " row " + std::to_string(r + 1);
    if (!row.is_array()) throw ParseError(where + ": expected an array");
    if (row.size() != cols)
      throw ParseError(where + ": has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    Vector v;
    v.reserve(cols);
    for (std::size_t c = 0; c < row.size(); ++c)
      v.push_back(entry_from_json(row[c], where + " col " + std::to_string(c + 1)));
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, cols);
}

// Matrix with an explicit column count when the JSON array is empty.
Matrix matrix_or_empty(const json& j, const std::string& label, std::size_t empty_rows,
                       std::size_t empty_cols, std::optional<std::size_t> width = std::nullopt) {
  if (j.is_array() && j.empty()) return Matrix(empty_rows, empty_cols);
  return parse_rows(j, label, width);
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& label) { return parse_rows(j, label, std::nullopt); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DVSystem system_from_json(const json& j) {
  const std::string context = "system";
  DVSystem sys;
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("system: 'name' must be a string");
    sys.name = j["name"].get<std::string>();
  }
  const std::string ctx = sys.name.empty() ? context : "system '" + sys.name + "'";
  sys.A = matrix_from_json(require_field(j, "A", ctx), "A");
  const std::size_t n = sys.A.rows();
  sys.G = matrix_or_empty(require_field(j, "G", ctx), "G", n, 0);
  sys.C = matrix_or_empty(require_field(j, "C", ctx), "C", 0, n, n);
  sys.H = j.contains("H") ? matrix_or_empty(j["H"], "H", 0, n, n) : Matrix(0, n);
  try {
    validate(sys);
  } catch (const DimensionMismatch& e) {
    throw ParseError(ctx + ": " + e.what());
  }
  return sys;
}

json system_to_json(const DVSystem& sys) {
  json j;
  if (!sys.name.empty()) j["name"] = sys.name;
  j["A"] = matrix_to_json(sys.A);
  j["G"] = matrix_to_json(sys.G);
  j["C"] = matrix_to_json(sys.C);
  j["H"] = matrix_to_json(sys.H);
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

DVSystem load_system(const std::filesystem::path& path) {
  try {
    return system_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Contract contract_from_json(const json& j, const std::filesystem::path& base_dir) {
  auto side = [&](const char* key) -> DVSystem {
    const json& s = require_field(j, key, "contract");
    if (s.is_string()) return load_system(base_dir / s.get<std::string>());
    return system_from_json(s);
  };
  DVSystem a = side("assumptions");
  DVSystem g = side("guarantees");
  if (a.external_dim() != g.external_dim())
    throw ParseError("contract: assumptions have " + std::to_string(a.external_dim()) +
                     " external variables, guarantees have " + std::to_string(g.external_dim()));
  return Contract(std::move(a), std::move(g));
}

json contract_to_json(const Contract& c) {
  return json{{"assumptions", system_to_json(c.assumptions)},
              {"guarantees", system_to_json(c.guarantees)}};
}

Contract load_contract(const std::filesystem::path& path) {
  try {
    return contract_from_json(read_json_file(path), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json subspace_to_json(const Subspace& v) {
  return json{{"ambient_dim", v.ambient_dim()}, {"dim", v.dim()}, {"basis", matrix_to_json(v.basis())}};
}

json relation_to_json(const SimulationRelation& rel) {
  json j = subspace_to_json(rel.relation);
  j["left_dim"] = rel.left_dim;
  j["right_dim"] = rel.right_dim;
  j["left_projection_dim"] = rel.left_projection().dim();
  return j;
}

json verdict_to_json(const SimulationVerdict& v) {
  json j;
  j["verdict"] = v.holds ? "HOLDS" : "FAILS";
  j["reason"] = v.failure_reason ? json(std::string(to_string(*v.failure_reason))) : json(nullptr);
  j["witness"] = v.witness ? relation_to_json(*v.witness) : json(nullptr);
  return j;
}

json refinement_to_json(const RefinementVerdict& v) {
  return json{{"verdict", v.holds ? "HOLDS" : "FAILS"},
              {"env_part", verdict_to_json(v.env_part)},
              {"guar_part", verdict_to_json(v.guar_part)}};
}

}  // namespace contractkit::io
