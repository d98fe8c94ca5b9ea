#include "cli/job.hpp"

#include <cmath>
#include <set>

namespace cli {

namespace {

const std::set<std::string> kCommands{"eval", "synth", "decompose", "verify", "limit", "algebra"};

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(where + ": value is not finite");
  return v;
}

}  // namespace

gh_complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {finite_number(j, where), 0.0};
  if (j.is_array() && j.size() == 2)
    return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
  throw ConfigError(where + ": expected a number or a [re, im] pair");
}

json to_json(gh_complex z) { return json::array({z.re, z.im}); }

gh_params parse_params(const json& j) {
  if (!j.is_object()) throw ConfigError("params: expected an object with s, t, r");
  gh_params p{};
  p.s = parse_complex(j.value("s", json(0.0)), "params.s");
  p.t = parse_complex(j.value("t", json(0.0)), "params.t");
  p.r = parse_complex(j.value("r", json(0.0)), "params.r");
  return p;
}

json to_json(const gh_params& p) {
  return {{"s", to_json(p.s)}, {"t", to_json(p.t)}, {"r", to_json(p.r)}};
}

std::vector<Mode> parse_modes(const json& j) {
  if (!j.is_array()) throw ConfigError("modes: expected an array of {m, k}");
  std::vector<Mode> modes;
  std::set<int> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "modes[" + std::to_string(i) + "]";
    const json& e = j[i];
    if (!e.is_object() || !e.contains("m") || !e.contains("k"))
      throw ConfigError(where + ": expected {\"m\": int, \"k\": complex}");
    if (!e["m"].is_number_integer()) throw ConfigError(where + ".m: expected an integer");
    Mode mode{e["m"].get<int>(), parse_complex(e["k"], where + ".k")};
    if (!seen.insert(mode.m).second)
      throw ConfigError(where + ": duplicate mode index " + std::to_string(mode.m));
    modes.push_back(mode);
  }
  return modes;
}

Job parse_job(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchema)
    throw ConfigError(std::string("config: unsupported schema, expected ") + kSchema);

  Job job;
  job.doc = doc;
  job.eval = gh_default_eval_config();
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) throw ConfigError("command: expected a string");
    job.command = doc["command"].get<std::string>();
  }
  if (doc.contains("params")) job.params = parse_params(doc["params"]);

  if (doc.contains("eval")) {
    const json& e = doc["eval"];
    if (!e.is_object()) throw ConfigError("eval: expected an object");
    if (e.contains("tol")) job.eval.tol = finite_number(e["tol"], "eval.tol");
    if (e.contains("max_terms")) {
      if (!e["max_terms"].is_number_integer())
        throw ConfigError("eval.max_terms: expected an integer");
      job.eval.max_terms = e["max_terms"].get<int>();
    }
    if (e.contains("fd_step")) job.eval.fd_step = finite_number(e["fd_step"], "eval.fd_step");
  }

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) throw ConfigError("grid: expected an object");
    gh_grid grid{0.8, 41, -1.0};
    if (g.contains("radius")) grid.radius = finite_number(g["radius"], "grid.radius");
    if (g.contains("n")) {
      if (!g["n"].is_number_integer()) throw ConfigError("grid.n: expected an integer");
      grid.n = g["n"].get<int>();
    }
    if (g.contains("exclude_origin_radius"))
      grid.exclude_origin_radius =
          finite_number(g["exclude_origin_radius"], "grid.exclude_origin_radius");
    job.grid = grid;
  }

  if (doc.contains("modes")) job.modes = parse_modes(doc["modes"]);

  if (doc.contains("io")) {
    const json& io = doc["io"];
    if (!io.is_object()) throw ConfigError("io: expected an object");
    job.io.input = io.value("input", "");
    job.io.output = io.value("output", "");
    job.io.manifest = io.value("manifest", "");
    const std::string fmt = io.value("format", "json");
    if (fmt == "json") job.io.format = Format::Json;
    else if (fmt == "csv") job.io.format = Format::Csv;
    else throw ConfigError("io.format: expected \"json\" or \"csv\"");
  }
  return job;
}

void check(gh_status status, const char* what) {
  if (status == GH_OK) return;
  throw ConfigError(std::string(what) + ": " + gh_status_string(status) + ": " + gh_last_error());
}

bool known_command(const std::string& c) { return kCommands.count(c) != 0; }

}  // namespace cli
