#pragma once

#include <string>
#include <vector>

#include "mvgeo/polytope.hpp"
#include "mvgeo/valuation.hpp"
#include "mvgeo/verify.hpp"
#include "mvgeo/zonotope.hpp"

namespace mvgeo {

/// 17-significant-digit decimal form (round-trips doubles exactly).
std::string format_double(double x);

/// {"dim": n, "vertices": [[...], ...]}; redundant points are accepted and
/// canonicalized on read. Throws ParseError with context on malformed input.
Polytope polytope_from_json(const std::string& text);
std::string polytope_to_json(const Polytope& K);

/// {"dim": n, "generators": [[...], ...]} in canonical order.
Zonotope zonotope_from_json(const std::string& text);
std::string zonotope_to_json(const Zonotope& z);

/// {"dim": n, "atoms": [{"u": [...], "w": ...}, ...]}, atoms sorted.
std::string measure_to_json(const DiscreteSphericalMeasure& m);

std::string report_to_json(const CheckReport& r);
std::string reports_to_jsonl(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string read_file(const std::string& path);
/// Write via a temporary sibling file and rename, so readers never see a
/// half-written document.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace mvgeo
