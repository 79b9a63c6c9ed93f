#include "demival/json_io.hpp"

#include "demival/error.hpp"

namespace demival {

Json to_json(const ValueVector& v) {
  Json entries = Json::array();
  for (const auto& [label, exp] : v.entries()) entries.push_back({{"label", label_string(label)}, {"exp", exp}});
  return Json{{"entries", std::move(entries)}};
}

Json to_json(const ExtendedValue& v) {
  if (v.is_infinity()) return Json{{"infinity", true}};
  return to_json(v.finite());
}

Json to_json(const FactorizationResult& r) {
  Json factors = Json::array();
  for (const auto& [g, e] : r.factors) factors.push_back({{"poly", to_string(g, true)}, {"exp", e}});
  return Json{{"unit", to_string(r.unit)}, {"factors", std::move(factors)}};
}

ExtendedValue extended_value_from_json(const Json& j) {
  try {
    if (j.contains("infinity")) {
      if (!j.at("infinity").get<bool>()) throw Error("parse", "\"infinity\" must be true");
      return ExtendedValue::infinity();
    }
    std::vector<ValueVector::Entry> entries;
    std::optional<PrimeLabel> previous;
    for (const auto& e : j.at("entries")) {
      PrimeLabel label = parse_label(e.at("label").get<std::string>());
      const auto exp = e.at("exp").get<std::int64_t>();
      if (exp == 0) throw Error("parse", "zero exponent in value vector");
      if (previous && !label_less(*previous, label)) throw Error("parse", "value vector labels out of order");
      previous = label;
      entries.emplace_back(std::move(label), exp);
    }
    return ValueVector(std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw Error("parse", std::string("malformed value JSON: ") + ex.what());
  }
}

}  // namespace demival
