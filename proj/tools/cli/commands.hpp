#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cli/job.hpp"

namespace cli {

struct Output {
  json doc;
  std::string csv;
  int exit_code = 0;
  // (path, contents) pairs written alongside the main output.
  std::vector<std::pair<std::string, std::string>> side_files;
};

Output run(const Job& job);

// "%.17g": round-trips every double and is byte-stable.
std::string fmt17(double v);

}  // namespace cli
