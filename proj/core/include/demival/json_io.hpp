#pragma once

// JSON forms of the value-group and factorization types:
//   {"infinity": true} | {"entries": [{"label": "p:2", "exp": 2}, ...]}
//   {"unit": "6", "factors": [{"poly": "X-1", "exp": 1}, ...]}

#include <nlohmann/json.hpp>

#include "demival/kronecker_factor.hpp"
#include "demival/value_group.hpp"

namespace demival {

using Json = nlohmann::ordered_json;

Json to_json(const ValueVector& v);
Json to_json(const ExtendedValue& v);
Json to_json(const FactorizationResult& r);

ExtendedValue extended_value_from_json(const Json& j);

}  // namespace demival
