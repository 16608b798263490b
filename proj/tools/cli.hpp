#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace djkm::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string status = "pass";  // pass | fail | partial
  nlohmann::json items = nlohmann::json::array();
  long long wall_time_ms = 0;

  /// pass when every item passed, fail when none did, partial otherwise.
  void settle(const std::vector<bool>& outcomes);
};

void to_json(nlohmann::json& j, const RunReport& r);

/// Parses argv and runs one subcommand. Reports go to `out` (or --out FILE),
/// diagnostics to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace djkm::cli
