#pragma once

// JSON encoding of terms and matchings:
//
//   TERM     = {"rho":{"id":string,"degree":int},"deligne":int,"arthur":int}
//   MATCHING = {"pairs":[{"left":TERM,"right":TERM,"family":"F1|F2|F3|F4"}],
//               "dropped_left":[TERM],"dropped_right":[TERM]}

#include <json.hpp>

#include "arthur/relevance.hpp"
#include "arthur/types.hpp"

namespace arthur::json_io {

using Json = nlohmann::ordered_json;

Json term_to_json(const SpehDatum& s);
Json terms_to_json(std::span<const SpehDatum> terms);
Json matching_to_json(const Matching& m);

/// Strict decoders; throw std::invalid_argument on any schema violation
/// (missing or extra keys, wrong types, unknown family, invalid dimensions).
SpehDatum term_from_json(const Json& j);
Matching matching_from_json(const Json& j);

}  // namespace arthur::json_io
