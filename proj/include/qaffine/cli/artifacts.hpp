#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qaffine/boundary/boundary.hpp"
#include "qaffine/spinchain/spinchain.hpp"

namespace qaffine {

// Readers for the JSON artifacts written by RMatrix/KMatrix::to_json and
// chain_to_json. Malformed input raises Error("parse-error") naming the
// offending entry. Matrix entries are taken from the file as written, so a
// hand-edited artifact is verified as edited.
RMatrix rmatrix_from_json(const nlohmann::json& j);
KMatrix kmatrix_from_json(const nlohmann::json& j);

// {rmatrix, sites, inhomogeneities, spectral} plus the exact transfer matrix
// when it has been materialized.
nlohmann::json chain_to_json(const TransferObjects& c);
TransferObjects chain_from_json(const nlohmann::json& j);

nlohmann::json hamiltonian_to_json(const Hamiltonian& h, int sites);

// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace qaffine
