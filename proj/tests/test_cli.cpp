#include "catch_amalgamated.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "djkm/families.hpp"
#include "djkm/json_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = djkm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen reproduces the family table", "[cli]") {
  const Run r = run({"gen", "--family", "P-4", "--view", "shifted", "--max", "12", "--no-timing"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "gen");
  CHECK(j["status"] == "pass");
  CHECK(j["wall_time_ms"] == 0);
  CHECK(j["parameters"]["family"] == "P-4");
  const djkm::FamilyTable t = djkm::generate(djkm::FamilyId::P4, djkm::IndexView::Shifted, 12);
  REQUIRE(j["items"].size() == 13);
  for (int n = 0; n <= 12; ++n) {
    const json& item = j["items"][static_cast<std::size_t>(n)];
    CHECK(item["n"] == n);
    CHECK(item["poly"].get<djkm::RationalPoly>() == t.at(n));
  }
}

TEST_CASE("verification commands report pass and fail through the exit code", "[cli]") {
  const Run ode = run({"verify-ode", "--family", "P-2", "--max-n", "100"});
  CHECK(ode.code == 0);
  CHECK(json::parse(ode.out)["items"].size() == 101);

  CHECK(run({"verify-ode", "--family", "qbar", "--max-n", "30", "--threads", "3"}).code == 0);
  CHECK(run({"oracle-compare", "--family", "P-4", "--order", "40"}).code == 0);
  CHECK(run({"oracle-compare", "--family", "P-3", "--order", "40"}).code == 0);
  CHECK(run({"cocycle", "--verify", "--bound", "6"}).code == 0);
  CHECK(run({"cocycle", "--i", "1", "--j", "-1", "--shape", "uu"}).code == 0);
  CHECK(run({"orthogonality", "--family", "qbar", "--hankel", "14", "--gram", "8", "--json"}).code == 0);
  CHECK(run({"nonclassical", "--family", "q", "--max-n", "6", "--rule", "leading"}).code == 0);

  // Two members leave more than the constants in the solution space.
  const Run weak = run({"nonclassical", "--family", "qbar", "--max-n", "1"});
  CHECK(weak.code == 1);
  CHECK(json::parse(weak.out)["status"] == "fail");

  // A plain-u pair without the antisymmetric rewrite is reported, not thrown.
  const Run unsupported = run({"cocycle", "--i", "2", "--j", "3", "--shape", "pu", "--no-antisymmetry"});
  CHECK(unsupported.code == 1);
  CHECK(json::parse(unsupported.out)["parameters"]["error"] == "UNSUPPORTED_PAIR");
}

TEST_CASE("usage errors exit with 2 and name the flag", "[cli]") {
  const Run bad_family = run({"gen", "--family", "P-9"});
  CHECK(bad_family.code == 2);
  CHECK(bad_family.err.find("--family") != std::string::npos);
  CHECK(bad_family.out.empty());

  const Run bad_view = run({"gen", "--family", "P-2", "--view", "diagonal"});
  CHECK(bad_view.code == 2);
  CHECK(bad_view.err.find("--view") != std::string::npos);

  const Run unknown = run({"gen", "--family", "P-4", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("--bogus") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"orthogonality", "--family", "q", "--csv"}).code == 2);
  CHECK(run({"quadrature", "--family", "q", "--csv", "--json"}).code == 2);
  CHECK(run({"quadrature", "--family", "P-4"}).code == 2);
  CHECK(run({"quadrature", "--family", "q", "--nodes", "5"}).err.find("--max-deg") != std::string::npos);
  CHECK(run({"verify-ode", "--family", "P-3", "--max-n", "1"}).err.find("--max-n") != std::string::npos);
  CHECK(run({"verify-ode", "--family", "P-3", "--max-n", "-4"}).code == 2);
  CHECK(run({"nonclassical", "--family", "q", "--rule", "guess"}).err.find("--rule") != std::string::npos);
  CHECK(run({"cocycle", "--shape", "triangle"}).err.find("--shape") != std::string::npos);
  CHECK(run({"all", "--profile", "cluster"}).code == 2);
  CHECK(run({"gen", "--family", "P-4", "--threads", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical flags give identical bytes", "[cli][property]") {
  const std::vector<std::vector<std::string>> cases = {
      {"gen", "--family", "P-1", "--view", "original", "--max", "30", "--no-timing"},
      {"verify-ode", "--family", "P-4", "--max-n", "60", "--no-timing"},
      {"cocycle", "--verify", "--bound", "5", "--no-timing"},
      {"orthogonality", "--family", "q", "--no-timing"},
      {"quadrature", "--family", "qbar", "--nodes", "12", "--no-timing"},
      {"nonclassical", "--family", "qbar", "--no-timing"},
  };
  for (const auto& args : cases) {
    INFO(args.front());
    const Run a = run(args);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--threads", "4"});
    const Run b = run(threaded);
    REQUIRE(a.code == b.code);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    REQUIRE(ja == jb);
    REQUIRE(run(args).out == a.out);
  }
}

TEST_CASE("quadrature csv and --out", "[cli]") {
  const Run csv = run({"quadrature", "--family", "qbar", "--nodes", "20", "--csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "node,weight");
  int rows = 0;
  double total = 0.0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double node = std::stod(line.substr(0, comma));
    const double weight = std::stod(line.substr(comma + 1));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", node);
    CHECK(line.substr(0, comma) == buf);
    CHECK(weight > 0.0);
    total += weight;
  }
  CHECK(rows == 20);
  CHECK(std::abs(total - 1.0) <= 1e-12);

  const auto path = std::filesystem::temp_directory_path() / "djkm_cli_out_test.json";
  const Run to_file = run({"nonclassical", "--family", "q", "--out", path.string(), "--no-timing"});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["command"] == "nonclassical");
  CHECK(j["items"][0]["solution_space_dim"] == 1);
  std::filesystem::remove(path);

  CHECK(run({"gen", "--family", "P-4", "--out", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("all runs every criterion", "[cli]") {
  const Run r = run({"all", "--profile", "desk", "--no-timing", "--threads", "2"});
  const json j = json::parse(r.out);
  REQUIRE(j["items"].size() == 11);
  int passed = 0;
  for (const json& item : j["items"]) {
    CHECK(!item.contains("seconds"));
    if (item["status"] == "pass") ++passed;
  }
  CHECK((j["status"] == "pass") == (passed == 11));
  CHECK(r.code == (passed == 11 ? 0 : 1));
}
