#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "opent/choi.hpp"
#include "opent/types.hpp"

namespace opent {

/// Matrix JSON format: {"rows": r, "cols": c, "entries": [[re, im], ...]}
/// with entries row-major. Parsing rejects mismatched lengths.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Kraus-map JSON: {"d": d, "trace_preserving": bool, "kraus": [matrix, ...]}.
nlohmann::json kraus_to_json(const KrausMap& t);
KrausMap kraus_from_json(const nlohmann::json& j);

Matrix load_matrix(const std::string& path);
KrausMap load_kraus(const std::string& path);

}  // namespace opent
