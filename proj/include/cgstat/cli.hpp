#pragma once

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cgstat::cli {

inline constexpr const char* kSchema = "cgstat-report/1";

enum ExitCode : int { kPass = 0, kAssertionFailed = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  std::string command;
  std::string family;
  int n = 0;
  int q = 0;
  int t = 0;  // 0: not given
  int coset = -1;
  std::string method = "enumeration";
  long long samples = 100000;
  std::optional<std::uint64_t> seed;
  int order = 20;
  double tol = 1e-9;
  std::string output;
  std::string format;
  std::string suite;
  std::string action;
  bool tau = false;
  int eps = 0;
  std::string group;
  std::string preset;
  std::string presets_file;
};

nlohmann::json config_json(const RunConfig& c);

// Loads the named entry of a preset file into c, leaving explicitly given
// fields alone.
void apply_preset(RunConfig& c, const std::string& file, const std::string& name, const std::vector<std::string>& given);

// Parses and runs one command; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgstat::cli
