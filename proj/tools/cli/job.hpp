#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gharmonics/gharmonics.h"

namespace cli {

using json = nlohmann::json;

inline constexpr const char* kSchema = "gharmonics/1";

// Malformed input; the process exits with status 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct Mode {
  int m = 0;
  gh_complex k{0.0, 0.0};
};

struct Io {
  std::string input;
  std::string output;    // empty: standard output
  std::string manifest;  // synth + csv only
  Format format = Format::Json;
};

struct Job {
  std::string command;
  gh_params params{};
  gh_eval_config eval{};
  std::optional<gh_grid> grid;
  std::optional<std::vector<Mode>> modes;
  Io io;
  json doc;  // the full config, for command-specific sections
};

gh_complex parse_complex(const json& j, const std::string& where);
json to_json(gh_complex z);
gh_params parse_params(const json& j);
json to_json(const gh_params& p);
std::vector<Mode> parse_modes(const json& j);

bool known_command(const std::string& command);

// Reads a JobConfig from a parsed JSON document. Validation of
// command-specific fields happens when the command runs.
Job parse_job(const json& doc);

// Throws ConfigError carrying gh_last_error() unless status is GH_OK.
void check(gh_status status, const char* what);

}  // namespace cli
