#pragma once

#include "json.hpp"

#include "djkm/laurent_series.hpp"
#include "djkm/rational.hpp"
#include "djkm/rational_poly.hpp"

namespace djkm {

// Wire format, degree-ascending with decimal-string big integers:
//   RationalPoly   {"coeffs": [["num","den"], ...]}
//   LaurentSeries  {"lowest_order": int, "truncation_order": int, "coeffs": [RationalPoly, ...]}

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const RationalPoly& p);
void from_json(const nlohmann::json& j, RationalPoly& p);

void to_json(nlohmann::json& j, const LaurentSeries& s);
LaurentSeries laurent_series_from_json(const nlohmann::json& j);

}  // namespace djkm
