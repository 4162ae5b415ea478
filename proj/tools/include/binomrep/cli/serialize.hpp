#pragma once

// JSON and CSV encodings of core results. Any value that may exceed 64 bits
// is written as a decimal string.

#include <string>
#include <vector>

#include <json.hpp>

#include "binomrep/census.hpp"
#include "binomrep/curve.hpp"
#include "binomrep/search.hpp"

namespace binomrep::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Solution& s);
Json to_json(const MultiplicityRecord& r);
Json to_json(const Certificate& c);
Json to_json(const Interval& iv);
Json coefficients_to_json(const UniPoly& p);

/// Parses a Solution object and re-verifies it; throws std::runtime_error
/// with the reason on schema or verification failure.
Solution solution_from_json(const Json& j);

/// "y,x" header followed by one row per (y, branch); x is the enclosure
/// midpoint with 12 decimal places.
std::string plot_csv(const std::vector<Branches>& branches);

}  // namespace binomrep::cli
