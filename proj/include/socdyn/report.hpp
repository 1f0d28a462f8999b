#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "socdyn/basins.hpp"
#include "socdyn/classify.hpp"

namespace socdyn {

using Json = nlohmann::json;

Json to_json(const Params& p);
Json to_json(const ValidationReport& v);
Json to_json(const StationaryState& s);
Json to_json(const EdgeRegime& e);
Json to_json(const WelfareReport& w);
Json to_json(const BasinReport& b);

/// Full regime report. Top-level keys: params, validation, branch, nash,
/// degenerate, edges[4]{edge, pp, figure, attractors[]}, global{case, attractors[], welfare}.
Json to_json(const RegimeReport& r);

/// What is known when classification stops early: params, validation, branch
/// (or null), degenerate flag, and the offending quantities.
Json partial_report(const Params& p, const ValidationReport& v,
                    const std::vector<std::string>& degenerate_quantities);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
/// Parsing the output and dumping it again reproduces it byte for byte.
std::string canonical_dump(const Json& j);

}  // namespace socdyn
