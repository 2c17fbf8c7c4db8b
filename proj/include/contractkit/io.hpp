#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "contractkit/contracts.hpp"
#include "contractkit/dv_system.hpp"
#include "contractkit/simulation.hpp"

namespace contractkit::io {

using nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// System documents look like
//
//   {"name": "guarantees",
//    "A": [["1","0"],["0","1"]], "G": [...], "C": [...], "H": [["-1","1/2"]]}
//
// Entries are rational strings ("3", "-1/2", "0.8") or JSON integers. An
// empty H (or C) array means zero rows; an empty G array means zero columns.

Matrix matrix_from_json(const json& j, const std::string& label);
json matrix_to_json(const Matrix& m);

DVSystem system_from_json(const json& j);
json system_to_json(const DVSystem& sys);

/// Contract documents hold "assumptions" and "guarantees", each either an
/// inline system object or a path relative to `base_dir`.
Contract contract_from_json(const json& j, const std::filesystem::path& base_dir);
json contract_to_json(const Contract& c);

json read_json_file(const std::filesystem::path& path);
DVSystem load_system(const std::filesystem::path& path);
Contract load_contract(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);

json subspace_to_json(const Subspace& v);
json relation_to_json(const SimulationRelation& rel);
json verdict_to_json(const SimulationVerdict& v);
json refinement_to_json(const RefinementVerdict& v);

}  // namespace contractkit::io
