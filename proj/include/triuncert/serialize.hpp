#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "triuncert/bounds.hpp"
#include "triuncert/keyrate.hpp"
#include "triuncert/measurement.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

using Json = nlohmann::ordered_json;

// Density matrices: { "dims": [2,2,2], "re": [[...], ...], "im": [[...], ...] }
Json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const Json& j);

// Bases: { "label": "x", "vectors": [ { "re": [...], "im": [...] }, ... ] }
Json to_json(const MeasurementBasis& basis);
MeasurementBasis basis_from_json(const Json& j);

/// Parses text into JSON; ParseError carries the byte offset of the failure.
Json parse_json(std::string_view text);

/// Reads and parses a file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

/// Structural errors (missing keys, wrong types, ragged rows) surface as
/// ParseError; a well-formed matrix that is not a state raises DomainError.
DensityMatrix parse_density_matrix(std::string_view text);
MeasurementBasis parse_basis(std::string_view text);

/// Column order for flat BoundReport rows: seed, purity, u_left, u_right,
/// delta, q_mu, renes, s_xb, s_zc, s_zb, s_xc, i_ab, i_ac, i_zb, i_xc, h_x,
/// h_z, s_a. The seed column is supplied by the caller.
const std::vector<std::string>& bound_report_columns();
std::vector<double> bound_report_row(double seed, const BoundReport& r);
Json to_json(const BoundReport& r);

/// Column order: k_berta, k_improved, k_measured, s_xb, s_zb, s_xx, s_zz,
/// delta, symmetric (0/1).
const std::vector<std::string>& key_report_columns();
std::vector<double> key_report_row(const KeyRateReport& k);
Json to_json(const KeyRateReport& k);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace triuncert
