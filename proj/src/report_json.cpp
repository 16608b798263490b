#include "djkm/report_json.hpp"

namespace djkm {

nlohmann::json poly_entry(const RationalPoly& p) {
  nlohmann::json j = p;
  j["text"] = p.to_string();
  return j;
}

void to_json(nlohmann::json& j, const OmegaVector& v) {
  j = nlohmann::json::object();
  j["w0"] = v.w0();
  for (int k = -1; k >= -4; --k) j["w" + std::to_string(k)] = v.w(k);
}

void to_json(nlohmann::json& j, const OracleResult& r) {
  j = nlohmann::json{{"family", family_name(r.family)},
                     {"truncation", r.truncation},
                     {"matched", r.matched},
                     {"first_mismatch", r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json()},
                     {"series", r.series}};
}

void to_json(nlohmann::json& j, const OdeCheck& c) {
  j = nlohmann::json{{"n", c.n},
                     {"original_index", c.original_index},
                     {"member_zero", c.member_zero},
                     {"status", c.passed() ? "pass" : "fail"}};
  if (!c.passed()) j["residual"] = poly_entry(c.residual);
}

void to_json(nlohmann::json& j, const CocycleReport& r) {
  auto psi_bad = nlohmann::json::array();
  for (const auto& f : r.psi_failures) {
    psi_bad.push_back({{"i", f.i}, {"j", f.j}, {"engine", f.engine}, {"table", f.table}});
  }
  auto uu_bad = nlohmann::json::array();
  for (const auto& [i, jj] : r.uu_failures) uu_bad.push_back({{"i", i}, {"j", jj}});
  auto anti_bad = nlohmann::json::array();
  for (const auto& [f, g] : r.antisymmetry_failures) {
    anti_bad.push_back({{"f", {{"exponent", f.exponent}, {"u", f.has_u}}}, {"g", {{"exponent", g.exponent}, {"u", g.has_u}}}});
  }
  j = nlohmann::json{{"bound", r.bound},
                     {"psi_checked", r.psi_checked},
                     {"uu_checked", r.uu_checked},
                     {"antisymmetry_checked", r.antisymmetry_checked},
                     {"relation_consistent", r.relation_consistent},
                     {"psi_failures", std::move(psi_bad)},
                     {"uu_failures", std::move(uu_bad)},
                     {"antisymmetry_failures", std::move(anti_bad)},
                     {"status", r.passed() ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const GramReport& r) {
  auto diag = nlohmann::json::array();
  for (std::size_t i = 0; i < r.gram.size(); ++i) diag.push_back(r.gram[i][i]);
  j = nlohmann::json{{"family", ortho_family_name(r.family)},
                     {"n", r.n},
                     {"orthogonal", r.orthogonal},
                     {"positive", r.positive},
                     {"diagonal", std::move(diag)},
                     {"status", r.passed() ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const NonclassicalWitness& w) {
  auto chain = nlohmann::json::array();
  for (const auto& s : w.chain) chain.push_back({{"constraint", s.constraint}, {"through_n", s.through_n}, {"implied", s.implied}});
  j = nlohmann::json{{"family", ortho_family_name(w.family)},
                     {"rule", w.rule == EigenRule::AsPrinted ? "printed" : "leading"},
                     {"max_n", w.max_n},
                     {"unknowns", w.unknowns},
                     {"equation_count", w.equations.size()},
                     {"rank", w.rank},
                     {"solution_space_dim", w.solution_space_dim},
                     {"solution_basis", w.solution_basis},
                     {"constants_only", w.constants_only},
                     {"chain", std::move(chain)}};
}

}  // namespace djkm
