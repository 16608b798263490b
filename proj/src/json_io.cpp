#include "djkm/json_io.hpp"

#include "djkm/error.hpp"

namespace djkm {

void to_json(nlohmann::json& j, const Rational& r) {
  j = nlohmann::json::array({r.numerator_str(), r.denominator_str()});
}

void from_json(const nlohmann::json& j, Rational& r) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw Error(ErrorCode::Parse, "rational must be [\"num\",\"den\"], got " + j.dump());
  }
  r = Rational::from_parts(j[0].get<std::string>(), j[1].get<std::string>());
}

void to_json(nlohmann::json& j, const RationalPoly& p) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c);
  j = nlohmann::json{{"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, RationalPoly& p) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::Parse, "polynomial must be {\"coeffs\": [...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(c.get<Rational>());
  p = RationalPoly(std::move(coeffs));
}

void to_json(nlohmann::json& j, const LaurentSeries& s) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c);
  j = nlohmann::json{{"lowest_order", s.lowest_order()},
                     {"truncation_order", s.truncation_order()},
                     {"coeffs", std::move(coeffs)}};
}

LaurentSeries laurent_series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lowest_order") || !j.contains("truncation_order") || !j.contains("coeffs")) {
    throw Error(ErrorCode::Parse, "series needs lowest_order, truncation_order and coeffs");
  }
  std::vector<RationalPoly> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(c.get<RationalPoly>());
  return LaurentSeries(j["lowest_order"].get<int>(), std::move(coeffs), j["truncation_order"].get<int>());
}

}  // namespace djkm
