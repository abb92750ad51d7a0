#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "circlebound/bounds.hpp"
#include "circlebound/circle_extrema.hpp"
#include "circlebound/polynomial.hpp"
#include "circlebound/verify.hpp"

namespace circlebound {

using Json = nlohmann::ordered_json;

/// Polynomial file format:
///   {"coefficients": [[re, im], ...]}   ascending order
///   [c0, c1, ...]                       real shorthand
/// Entries of "coefficients" may also be bare reals. Parse failures throw
/// Error(parse) whose message carries line and column.
Polynomial parse_polynomial(std::string_view text);
Json to_json(const Polynomial& p);

Json to_json(const CircleExtremum& e);
CircleExtremum circle_extremum_from_json(const Json& j);

Json to_json(const BoundResult& b);
BoundResult bound_result_from_json(const Json& j);

/// {"bounds": [...], "best", "measured", "gap"}; absent optionals are null.
Json to_json(const BoundSummary& s);
BoundSummary bound_summary_from_json(const Json& j);

Json to_json(const GenConfig& c);
Json to_json(const FuzzReport& r);

}  // namespace circlebound
