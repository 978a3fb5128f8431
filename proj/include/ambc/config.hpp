#pragma once

#include "ambc/params.hpp"
#include "ambc/simkit.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ambc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key = value text; '#' starts a comment. Unknown keys are rejected so
// typos surface immediately.
std::map<std::string, std::string> read_kv_file(const std::string& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text);

struct RunConfig {
  SimParams params;
  Scenario scenario;
  std::string scenario_name = "custom";
  std::string output = "ambscatter.csv";
  bool trace = false;
};

// Applies config keys over Table-style defaults and validates every value;
// throws ConfigError naming the key, the given value, and the legal domain.
RunConfig make_run_config(const std::map<std::string, std::string>& kv);

// The effective (post-default) configuration as config-file text, one
// sorted key per line.
std::string effective_config_text(const RunConfig& rc);

}  // namespace ambc
