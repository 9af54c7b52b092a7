#pragma once

#include <json.hpp>

#include "fourstate/report.hpp"
#include "fourstate/t4.hpp"

namespace fourstate {

using Json = nlohmann::ordered_json;

// All rationals travel as strings so documents stay exact.
Json dataset_to_json(const LargeT4Data& data);
LargeT4Data dataset_from_json(const Json& j); // throws ParseError

Json family_to_json(const OperatorFamily& F);
OperatorFamily family_from_json(const Json& j); // throws ParseError

Json report_to_json(const Report& rep);

LargeT4Data load_dataset(const std::string& path); // throws ParseError

} // namespace fourstate
