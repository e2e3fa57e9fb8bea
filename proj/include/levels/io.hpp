#pragma once

#include <string>

#include <json.hpp>

#include "levels/config.hpp"
#include "levels/faces.hpp"
#include "levels/gmatrix.hpp"
#include "levels/motion.hpp"
#include "levels/relations.hpp"
#include "levels/span.hpp"

namespace levels {

using Json = nlohmann::ordered_json;

/// {"r": r, "n": n, "vectors": [[rat, ...], ...]}, one inner list per column.
Json config_to_json(const VectorConfig& v);
/// Throws ParseError naming the offending field.
VectorConfig config_from_json(const Json& j);

/// Reads a whole JSON document; ParseError carries the path and position.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
VectorConfig read_config(const std::string& path);

Json patterns_to_json(const PatternSet& patterns);

/// {"d": d, "n": n, "rows": [[...], ...]}, row s, column t.
Json fmatrix_to_json(const FMatrix& f);
FMatrix fmatrix_from_json(const Json& j);

/// {"r": r, "n": n, "rows": [[...], ...]}, (n+1) x (n+1).
Json fstar_to_json(const FStarMatrix& f);

/// {"r": r, "n": n, "g": [[...], ...]} with the full matrix.
Json gmatrix_to_json(const GMatrix& g);
/// {"r": r, "n": n, "small_g": [[...], ...]}.
Json small_g_to_json(const GMatrix& g);

/// {"R": [1-based], "interval": [lo, hi], "type": [j, k], "flip": "+-"}.
Json event_to_json(const MutationEvent& e);

Json report_to_json(const RelationReport& report);
Json span_report_to_json(const SpanReport& report);

Json int_matrix_to_json(const IntMatrix& m);
/// Indented JSON text in which arrays of scalars stay on one line, so a
/// matrix prints one row per line. Ends with a newline.
std::string to_text(const Json& j);

/// Comma-separated rows, no header.
std::string int_matrix_to_csv(const IntMatrix& m);

}  // namespace levels
