#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "netperf/types.hpp"

namespace netperf::io {

/// Text format: first line n, then n rows of n whitespace-separated finite
/// reals. Throws InvalidInput on anything else.
Matrix read_matrix_text(std::istream& in);

/// JSON format: either a plain array of row arrays, or
/// {"n": int, "entries": [[..], ..]}.
Matrix read_matrix_json(const nlohmann::json& j);

/// Dispatches on as_json; "-" reads standard input.
Matrix read_matrix_file(const std::string& path, bool as_json = false);

void write_matrix_text(std::ostream& out, const Matrix& m);

}  // namespace netperf::io
