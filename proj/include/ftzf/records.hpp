#pragma once

// Machine-readable records written by the command line tool.

#include "ftzf/forcing.hpp"
#include "ftzf/search.hpp"
#include "ftzf/trees.hpp"
#include "ftzf/verify.hpp"

#include <json.hpp>

namespace ftzf {

/// {parameter, k, value | "not_exists", witnesses, truncated, elapsed_ms}.
/// With timing off, elapsed_ms is written as 0 so output is byte-stable.
nlohmann::json to_json(const ParamResult & r, bool timing = true);

/// {base, rows: [{op, operand, value | "not_exists", delta | null}]}
nlohmann::json to_json(const DeltaReport & report);

/// {initial, layers, forces: [[source, target]], final, forcing}
nlohmann::json to_json(const ForcingTrace & trace, const Graph & g);

nlohmann::json to_json(const PathCover & cover);

nlohmann::json to_json(const std::vector<verify::ClaimReport> & reports, bool timing = true);

nlohmann::json to_json(VertexSet s);

} // namespace ftzf
