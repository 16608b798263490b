#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "djkm/acceptance.hpp"
#include "djkm/cocycle.hpp"
#include "djkm/diffops.hpp"
#include "djkm/error.hpp"
#include "djkm/families.hpp"
#include "djkm/ortho.hpp"
#include "djkm/parallel.hpp"
#include "djkm/report_json.hpp"
#include "djkm/series_oracle.hpp"

namespace djkm::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  std::string family;
  std::string view = "shifted";
  int max = 12;
  int max_n = -1;
  int order = 120;
  int nodes = 20;
  int max_deg = 8;
  int hankel = 14;
  int gram = 8;
  int i = 0;
  int j = 0;
  std::string shape = "psi";
  bool verify = false;
  int bound = 12;
  bool no_antisymmetry = false;
  std::string rule = "printed";
  std::string profile = "desk";
  bool with_series = false;
  bool json_flag = false;
  bool csv = false;
  std::string out_file;
  unsigned threads = 0;
  bool no_timing = false;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
  return s;
}

FamilyId require_family(const Options& o, const std::vector<std::string>& allowed) {
  if (o.family.empty()) throw UsageError("--family", "required, one of " + join(allowed));
  if (std::find(allowed.begin(), allowed.end(), o.family) == allowed.end()) {
    throw UsageError("--family", "'" + o.family + "' is not one of " + join(allowed));
  }
  return *parse_family(o.family);
}

OrthoFamily require_ortho(const Options& o) {
  if (o.family != "q" && o.family != "qbar") throw UsageError("--family", "'" + o.family + "' is not one of q, qbar");
  return *parse_ortho_family(o.family);
}

RunReport cmd_gen(const Options& o) {
  const FamilyId id = require_family(o, {"P-4", "P-3", "P-2", "P-1"});
  const auto view = parse_view(o.view);
  if (!view) throw UsageError("--view", "'" + o.view + "' is not one of original, shifted, q, qbar");
  RunReport r{"gen", {{"family", o.family}, {"view", o.view}, {"max", o.max}}};
  const FamilyTable t = generate(id, *view, o.max);
  for (int n = t.first; n <= t.last(); ++n) {
    r.items.push_back({{"n", n}, {"original_index", to_original(*view, n)}, {"poly", poly_entry(t.at(n))}});
  }
  return r;
}

RunReport cmd_verify_ode(const Options& o) {
  const auto target = parse_ode_target(o.family);
  if (!target) throw UsageError("--family", "'" + o.family + "' is not one of P-4, P-3, P-2, P-1, q, qbar");
  const int max_n = o.max_n < 0 ? 100 : o.max_n;
  if (max_n < ode_first_index(*target)) {
    throw UsageError("--max-n", "must be at least " + std::to_string(ode_first_index(*target)) + " for " + o.family);
  }
  RunReport r{"verify-ode", {{"family", o.family}, {"max_n", max_n}}};
  const OdeSweep s = verify_ode(*target, max_n, o.threads);
  r.parameters["operator"] = s.operator_name;
  std::vector<bool> outcomes;
  for (const OdeCheck& c : s.checks) {
    r.items.push_back(c);
    outcomes.push_back(c.passed());
  }
  r.settle(outcomes);
  return r;
}

RunReport cmd_oracle_compare(const Options& o) {
  const FamilyId id = require_family(o, {"P-4", "P-3", "P-2", "P-1"});
  RunReport r{"oracle-compare", {{"family", o.family}, {"order", o.order}}};
  std::vector<std::pair<std::string, std::function<OracleResult()>>> runs;
  if (id == FamilyId::P4) {
    runs.emplace_back("elliptic1", [&] { return expand_elliptic1(o.order); });
    runs.emplace_back("gegenbauer-sum", [&] { return expand_gegenbauer_sum(o.order); });
  } else if (id == FamilyId::P2) {
    runs.emplace_back("elliptic2", [&] { return expand_elliptic2(o.order); });
  }
  std::vector<bool> outcomes;
  for (const auto& [name, run] : runs) {
    const OracleResult res = run();
    json item = res;
    if (!o.with_series) item.erase("series");
    item["oracle"] = name;
    item["status"] = res.matched ? "pass" : "fail";
    r.items.push_back(std::move(item));
    outcomes.push_back(res.matched);
  }
  const bool funde = check_funde(o.order, id);
  r.items.push_back({{"oracle", "funde"}, {"family", o.family}, {"truncation", o.order}, {"status", funde ? "pass" : "fail"}});
  outcomes.push_back(funde);
  r.settle(outcomes);
  return r;
}

json monomial_json(const RMonomial& m) { return {{"exponent", m.exponent}, {"u", m.has_u}}; }

RunReport cmd_cocycle(const Options& o) {
  if (o.verify) {
    RunReport r{"cocycle", {{"verify", true}, {"bound", o.bound}}};
    const CocycleReport rep = verify_psi_table(o.bound, o.threads);
    r.items.push_back(rep);
    r.settle({rep.passed()});
    return r;
  }
  RunReport r{"cocycle", {{"i", o.i}, {"j", o.j}, {"shape", o.shape}}};
  RMonomial f{o.i, false}, g{o.j, false};
  std::optional<OmegaVector> expected;
  if (o.shape == "psi") {
    f = {o.i - 1, true};
    expected = psi(o.i, o.j) * RationalPoly::constant(Rational(o.j));
  } else if (o.shape == "uu") {
    f = {o.i - 1, true};
    g = {o.j - 1, true};
    const int s = o.i + o.j;
    RationalPoly w0;
    if (s == -2) w0 = RationalPoly::constant(Rational(o.j + 1));
    if (s == 0) w0 = RationalPoly::variable() * Rational(-2 * o.j);
    if (s == 2) w0 = RationalPoly::constant(Rational(o.j - 1));
    expected = OmegaVector::omega(0) * w0;
  } else if (o.shape == "up") {
    f.has_u = true;
  } else if (o.shape == "pu") {
    g.has_u = true;
  } else if (o.shape == "uu-raw") {
    f.has_u = g.has_u = true;
  } else if (o.shape != "pp") {
    throw UsageError("--shape", "'" + o.shape + "' is not one of psi, uu, pp, up, pu, uu-raw");
  }
  const OmegaVector value = cocycle(f, g, !o.no_antisymmetry);
  json item{{"f", monomial_json(f)}, {"g", monomial_json(g)}, {"value", value}, {"text", value.to_string()}};
  bool ok = true;
  if (expected) {
    ok = value == *expected;
    item["expected"] = *expected;
    item["status"] = ok ? "pass" : "fail";
  }
  r.items.push_back(std::move(item));
  r.settle({ok});
  return r;
}

RunReport cmd_orthogonality(const Options& o) {
  const OrthoFamily f = require_ortho(o);
  RunReport r{"orthogonality", {{"family", o.family}, {"hankel", o.hankel}, {"gram", o.gram}}};
  std::vector<bool> outcomes;
  const auto h = hankel(f, o.hankel);
  for (std::size_t n = 0; n < h.size(); ++n) {
    const bool positive = h[n].sign() > 0;
    r.items.push_back({{"check", "hankel"}, {"N", n + 1}, {"delta", h[n]}, {"status", positive ? "pass" : "fail"}});
    outcomes.push_back(positive);
  }
  const GramReport g = gram_check(f, o.gram);
  json gj = g;
  gj["check"] = "gram";
  r.items.push_back(std::move(gj));
  outcomes.push_back(g.passed());
  r.settle(outcomes);
  return r;
}

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunReport cmd_quadrature(const Options& o) {
  const OrthoFamily f = require_ortho(o);
  if (o.nodes < 1) throw UsageError("--nodes", "must be positive");
  if (o.max_deg >= o.nodes) throw UsageError("--max-deg", "must be below --nodes");
  RunReport r{"quadrature", {{"family", o.family}, {"nodes", o.nodes}, {"max_deg", o.max_deg}}};
  const Quadrature q = golub_welsch(f, o.nodes);
  const QuadOrthogonality orth = quad_orthogonality(f, o.nodes, o.max_deg);
  double total = 0.0;
  for (double w : q.weights) total += w;
  const bool ok = orth.max_offdiag <= 1e-10 && std::abs(total - 1.0) <= 1e-12;
  json nodes = json::array();
  for (std::size_t k = 0; k < q.nodes.size(); ++k) nodes.push_back({{"node", fixed17(q.nodes[k])}, {"weight", fixed17(q.weights[k])}});
  r.items.push_back({{"check", "rule"},
                     {"rule", std::move(nodes)},
                     {"max_eigen_residual", fixed17(q.max_residual)},
                     {"weight_sum_error", fixed17(std::abs(total - 1.0))},
                     {"max_offdiag", fixed17(orth.max_offdiag)},
                     {"min_diag", fixed17(orth.min_diag)},
                     {"status", ok ? "pass" : "fail"}});
  r.settle({ok});
  return r;
}

RunReport cmd_nonclassical(const Options& o) {
  const OrthoFamily f = require_ortho(o);
  EigenRule rule;
  if (o.rule == "printed") rule = EigenRule::AsPrinted;
  else if (o.rule == "leading") rule = EigenRule::LeadingCoefficient;
  else throw UsageError("--rule", "'" + o.rule + "' is not one of printed, leading");
  const int max_n = o.max_n < 0 ? 6 : o.max_n;
  RunReport r{"nonclassical", {{"family", o.family}, {"max_n", max_n}, {"rule", o.rule}}};
  const NonclassicalWitness w = nonclassical_check(f, max_n, rule);
  const bool ok = w.constants_only && w.solution_space_dim == 1;
  json item = w;
  item["status"] = ok ? "pass" : "fail";
  r.items.push_back(std::move(item));
  r.settle({ok});
  return r;
}

RunReport cmd_all(const Options& o) {
  RunReport r{"all", {{"profile", o.profile}}};
  std::vector<bool> outcomes;
  for (const CriterionResult& c : run_acceptance(o.threads)) {
    r.items.push_back(criterion_json(c, !o.no_timing));
    outcomes.push_back(c.passed);
  }
  r.settle(outcomes);
  return r;
}

std::string quadrature_csv(const Options& o) {
  const Quadrature q = golub_welsch(*parse_ortho_family(o.family), o.nodes);
  std::string s = "node,weight\n";
  for (std::size_t k = 0; k < q.nodes.size(); ++k) s += fixed17(q.nodes[k]) + "," + fixed17(q.weights[k]) + "\n";
  return s;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json_flag, "JSON report (default)");
  sub->add_option("--out", o.out_file, "write the report to FILE");
  sub->add_option("--threads", o.threads, "worker threads (default DJKM_THREADS)")->check(CLI::PositiveNumber);
  sub->add_flag("--no-timing", o.no_timing, "report wall_time_ms as 0");
}

int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out_file.empty()) {
    out << text;
    return kPass;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: --out: cannot write " << o.out_file << "\n";
    return kUsage;
  }
  return kPass;
}

}  // namespace

void RunReport::settle(const std::vector<bool>& outcomes) {
  const auto good = std::count(outcomes.begin(), outcomes.end(), true);
  if (good == static_cast<long>(outcomes.size())) status = "pass";
  else if (good == 0) status = "fail";
  else status = "partial";
}

void to_json(nlohmann::json& j, const RunReport& r) {
  j = nlohmann::json{{"command", r.command},
                     {"parameters", r.parameters},
                     {"status", r.status},
                     {"items", r.items},
                     {"wall_time_ms", r.wall_time_ms}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_threads();
  CLI::App app{"Exact generation and verification of the P-4 .. P-1 coefficient families", "djkm"};
  app.require_subcommand(1);
  std::function<RunReport(const Options&)> action;

  auto* gen = app.add_subcommand("gen", "family members in a chosen index view");
  gen->add_option("--family", o.family, "P-4, P-3, P-2 or P-1")->required();
  gen->add_option("--view", o.view, "original, shifted, q or qbar");
  gen->add_option("--max", o.max, "last index in the chosen view");
  gen->callback([&] { action = cmd_gen; });

  auto* ode = app.add_subcommand("verify-ode", "apply the matching differential operator to each member");
  ode->add_option("--family", o.family, "P-4, P-3, P-2, P-1, q or qbar")->required();
  ode->add_option("--max-n", o.max_n, "last n (default 100)")->check(CLI::NonNegativeNumber);
  ode->callback([&] { action = cmd_verify_ode; });

  auto* oracle = app.add_subcommand("oracle-compare", "series expansions against the recurrence");
  oracle->add_option("--family", o.family, "P-4, P-3, P-2 or P-1")->required();
  oracle->add_option("--order", o.order, "truncation order (default 120)")->check(CLI::Range(4, 100000));
  oracle->add_flag("--series", o.with_series, "include the expanded series");
  oracle->callback([&] { action = cmd_oracle_compare; });

  auto* coc = app.add_subcommand("cocycle", "central cocycle values and the psi table check");
  coc->add_option("--i", o.i, "first exponent");
  coc->add_option("--j", o.j, "second exponent");
  coc->add_option("--shape", o.shape, "psi, uu, pp, up, pu or uu-raw (default psi)");
  coc->add_flag("--no-antisymmetry", o.no_antisymmetry, "do not rewrite plain-u pairs");
  coc->add_flag("--verify", o.verify, "check the whole table for |i|,|j| <= bound");
  coc->add_option("--bound", o.bound, "table bound (default 12)")->check(CLI::Range(0, 200));
  coc->callback([&] { action = cmd_cocycle; });

  auto* orth = app.add_subcommand("orthogonality", "Hankel determinants and Gram matrix");
  orth->add_option("--family", o.family, "q or qbar")->required();
  orth->add_option("--hankel", o.hankel, "largest Hankel order (default 14)")->check(CLI::Range(1, 200));
  orth->add_option("--gram", o.gram, "largest degree in the Gram matrix (default 8)")->check(CLI::Range(0, 200));
  orth->callback([&] { action = cmd_orthogonality; });

  auto* quad = app.add_subcommand("quadrature", "Gauss rule from the Jacobi matrix");
  quad->add_option("--family", o.family, "q or qbar")->required();
  quad->add_option("--nodes", o.nodes, "number of nodes (default 20)");
  quad->add_option("--max-deg", o.max_deg, "degree bound for the orthogonality check (default 8)")
      ->check(CLI::NonNegativeNumber);
  quad->add_flag("--csv", o.csv, "node,weight table instead of JSON");
  quad->callback([&] { action = cmd_quadrature; });

  auto* nonc = app.add_subcommand("nonclassical", "order <= 2 eigenoperator system");
  nonc->add_option("--family", o.family, "q or qbar")->required();
  nonc->add_option("--max-n", o.max_n, "last member used (default 6)")->check(CLI::NonNegativeNumber);
  nonc->add_option("--rule", o.rule, "eigenvalue rule: printed or leading (default printed)");
  nonc->callback([&] { action = cmd_nonclassical; });

  auto* all = app.add_subcommand("all", "full acceptance suite");
  all->add_option("--profile", o.profile, "desk")->check(CLI::IsMember({"desk"}));
  all->callback([&] { action = cmd_all; });

  for (auto* sub : {gen, ode, oracle, coc, orth, quad, nonc, all}) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }
  if (o.json_flag && o.csv) {
    err << "error: --csv: cannot be combined with --json\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = action(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    report.command = app.get_subcommands().front()->get_name();
    report.status = "fail";
    report.parameters["error"] = error_code_name(e.code());
    report.items.push_back({{"error", e.what()}, {"status", "fail"}});
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.wall_time_ms = o.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  const bool csv = o.csv && report.status != "fail" && report.command == "quadrature";
  const int written = emit(csv ? quadrature_csv(o) : json(report).dump(2) + "\n", o, out, err);
  if (written != kPass) return written;
  return report.status == "pass" ? kPass : kFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("djkm");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace djkm::cli
