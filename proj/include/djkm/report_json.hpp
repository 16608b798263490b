#pragma once

#include "json.hpp"

#include "djkm/cocycle.hpp"
#include "djkm/diffops.hpp"
#include "djkm/json_io.hpp"
#include "djkm/ortho.hpp"
#include "djkm/series_oracle.hpp"

namespace djkm {

// {"w0": poly, "w-1": poly, "w-2": poly, "w-3": poly, "w-4": poly}
void to_json(nlohmann::json& j, const OmegaVector& v);
void to_json(nlohmann::json& j, const OracleResult& r);
void to_json(nlohmann::json& j, const OdeCheck& c);
void to_json(nlohmann::json& j, const CocycleReport& r);
void to_json(nlohmann::json& j, const GramReport& r);
void to_json(nlohmann::json& j, const NonclassicalWitness& w);

/// Polynomial as {"coeffs": ..., "text": "..."} for human-facing reports.
nlohmann::json poly_entry(const RationalPoly& p);

}  // namespace djkm
