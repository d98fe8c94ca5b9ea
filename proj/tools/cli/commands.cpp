#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>

namespace cli {

namespace {

using C = std::complex<double>;

C cx(gh_complex z) { return {z.re, z.im}; }

struct SolutionDeleter {
  void operator()(gh_solution* s) const { gh_solution_destroy(s); }
};
using Solution = std::unique_ptr<gh_solution, SolutionDeleter>;

Solution make_solution(const Job& job) {
  if (!job.modes) throw ConfigError(job.command + ": config needs \"modes\"");
  gh_solution* raw = nullptr;
  check(gh_solution_create(&job.params, &job.eval, &raw), "solution");
  Solution sol(raw);
  for (const Mode& mode : *job.modes)
    check(gh_solution_add_mode(sol.get(), mode.m, mode.k), "modes");
  return sol;
}

json modes_json(const std::vector<Mode>& modes) {
  json out = json::array();
  for (const Mode& mode : modes) out.push_back({{"m", mode.m}, {"k", to_json(mode.k)}});
  return out;
}

json header(const Job& job) {
  return {{"schema", kSchema}, {"command", job.command}, {"params", to_json(job.params)}};
}

std::string csv_complex(gh_complex z) { return fmt17(z.re) + "," + fmt17(z.im); }

int integer_field(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ConfigError(std::string(key) + ": expected an integer");
  return j[key].get<int>();
}

double number_field(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string(key) + ": expected a number");
  return j[key].get<double>();
}

std::vector<int> int_list(const json& j, const char* key, std::vector<int> fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j[key];
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) throw ConfigError(std::string(key) + ": expected an integer or a list");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ConfigError(std::string(key) + ": expected a list of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

gh_operator parse_operator(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4)
    throw ConfigError(where + ": expected four coefficients [a1, a2, a3, a4]");
  return {parse_complex(j[0], where + "[0]"), parse_complex(j[1], where + "[1]"),
          parse_complex(j[2], where + "[2]"), parse_complex(j[3], where + "[3]")};
}

json operator_json(const gh_operator& d) {
  return json::array({to_json(d.a1), to_json(d.a2), to_json(d.a3), to_json(d.a4)});
}

gh_operator require_operator(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("algebra: config needs \"") + key + "\"");
  return parse_operator(doc[key], key);
}

// ---- eval ---------------------------------------------------------------

Output run_eval(const Job& job) {
  const json& doc = job.doc;
  if (!doc.contains("points") || !doc["points"].is_array())
    throw ConfigError("eval: config needs \"points\", a list of complex numbers");
  std::vector<gh_complex> points;
  for (std::size_t i = 0; i < doc["points"].size(); ++i)
    points.push_back(parse_complex(doc["points"][i], "points[" + std::to_string(i) + "]"));
  const std::vector<int> ms = int_list(doc, "m", {0});

  std::vector<std::string> functions{"P"};
  if (doc.contains("functions")) {
    functions.clear();
    for (const json& f : doc["functions"]) {
      const std::string name = f.is_string() ? f.get<std::string>() : "";
      if (name != "P" && name != "Phi" && name != "Theta" && name != "I")
        throw ConfigError("eval.functions: entries must be \"P\", \"Phi\", \"Theta\" or \"I\"");
      functions.push_back(name);
    }
  }
  gh_complex ka{}, kb{};
  if (std::find(functions.begin(), functions.end(), "Phi") != functions.end()) {
    if (!doc.contains("kummer") || !doc["kummer"].is_object())
      throw ConfigError("eval: \"Phi\" needs \"kummer\": {\"a\": .., \"b\": ..}");
    ka = parse_complex(doc["kummer"].value("a", json()), "kummer.a");
    kb = parse_complex(doc["kummer"].value("b", json()), "kummer.b");
  }

  Output out;
  out.doc = header(job);
  out.doc["functions"] = functions;
  json rows = json::array();
  std::string csv = "m,re_z,im_z";
  for (const auto& f : functions) csv += ",re_" + f + ",im_" + f;
  csv += "\n";
  for (int m : ms) {
    for (const gh_complex z : points) {
      json row{{"m", m}, {"z", to_json(z)}};
      csv += std::to_string(m) + "," + csv_complex(z);
      for (const auto& f : functions) {
        gh_complex v{};
        if (f == "P") check(gh_eval_p(&job.params, m, z, &job.eval, &v), "eval P");
        else if (f == "Phi") check(gh_eval_kummer(ka, kb, z, &job.eval, &v), "eval Phi");
        else if (f == "Theta") check(gh_eval_theta(m, z, &job.eval, &v), "eval Theta");
        else check(gh_eval_bessel_i(m, z, &job.eval, &v), "eval I");
        row[f] = to_json(v);
        csv += "," + csv_complex(v);
      }
      rows.push_back(row);
      csv += "\n";
    }
  }
  out.doc["rows"] = rows;
  out.csv = csv;
  return out;
}

// ---- synth --------------------------------------------------------------

Output run_synth(const Job& job) {
  const Solution sol = make_solution(job);
  const json& doc = job.doc;
  const json sampling = doc.value("sampling", json::object());
  const std::string kind =
      sampling.value("kind", doc.contains("sampling") || !job.grid ? "circle" : "grid");

  std::vector<gh_complex> points;
  json sampling_out{{"kind", kind}};
  if (kind == "circle") {
    const double rho = number_field(sampling, "rho", 0.5);
    const int n = integer_field(sampling, "n", 256);
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("sampling.rho: must lie in (0, 1)");
    if (n < 1) throw ConfigError("sampling.n: must be positive");
    for (int j = 0; j < n; ++j) {
      const C z = std::polar(rho, 2.0 * std::numbers::pi * j / n);
      points.push_back({z.real(), z.imag()});
    }
    sampling_out["rho"] = rho;
    sampling_out["n"] = n;
  } else if (kind == "grid") {
    if (!job.grid) throw ConfigError("synth: grid sampling needs \"grid\"");
    std::size_t count = 0;
    check(gh_grid_points(&*job.grid, job.eval.fd_step, nullptr, 0, &count), "grid");
    points.resize(count);
    check(gh_grid_points(&*job.grid, job.eval.fd_step, points.data(), count, &count), "grid");
    sampling_out["grid"] = {{"radius", job.grid->radius},
                            {"n", job.grid->n},
                            {"exclude_origin_radius", job.grid->exclude_origin_radius}};
  } else {
    throw ConfigError("sampling.kind: expected \"circle\" or \"grid\"");
  }

  json manifest{{"schema", kSchema},
                {"kind", "mode_manifest"},
                {"params", to_json(job.params)},
                {"modes", modes_json(*job.modes)}};

  Output out;
  out.doc = header(job);
  out.doc["modes"] = manifest["modes"];
  out.doc["sampling"] = sampling_out;
  json samples = json::array();
  std::string csv = "re_z,im_z,re_u,im_u\n";
  for (const gh_complex z : points) {
    gh_complex u{};
    check(gh_solution_eval(sol.get(), z, &u), "synth");
    samples.push_back({{"z", to_json(z)}, {"u", to_json(u)}});
    csv += csv_complex(z) + "," + csv_complex(u) + "\n";
  }
  out.doc["samples"] = samples;
  out.csv = csv;

  if (job.io.format == Format::Csv) {
    std::string path = job.io.manifest;
    if (path.empty() && !job.io.output.empty()) path = job.io.output + ".modes.json";
    if (!path.empty()) out.side_files.emplace_back(path, manifest.dump() + "\n");
  }
  return out;
}

// ---- decompose ----------------------------------------------------------

struct SampleFile {
  std::vector<gh_complex> z;
  std::vector<gh_complex> u;
};

SampleFile read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("decompose: cannot open sample file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("decompose: sample file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "re_z,im_z,re_u,im_u")
    throw ConfigError("decompose: sample file header must be re_z,im_z,re_u,im_u");
  SampleFile file;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    double v[4];
    bool ok = cells.size() == 4;
    for (std::size_t i = 0; ok && i < 4; ++i) {
      char* end = nullptr;
      v[i] = std::strtod(cells[i].c_str(), &end);
      ok = end != cells[i].c_str() && *end == '\0' && std::isfinite(v[i]);
    }
    if (!ok) throw ConfigError("decompose: malformed sample row " + std::to_string(row));
    file.z.push_back({v[0], v[1]});
    file.u.push_back({v[2], v[3]});
  }
  if (file.z.empty()) throw ConfigError("decompose: sample file has no rows");
  return file;
}

Output run_decompose(const Job& job) {
  const json& doc = job.doc;
  if (job.io.input.empty()) throw ConfigError("decompose: config needs \"io\": {\"input\": ..}");
  const SampleFile samples = read_samples(job.io.input);
  const std::size_t n = samples.z.size();

  // Rows must be rho e^{2 pi i j / n}, j = 0..n-1.
  const double rho = std::abs(cx(samples.z[0]));
  for (std::size_t j = 0; j < n; ++j) {
    const C expected = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                           static_cast<double>(n));
    if (std::abs(cx(samples.z[j]) - expected) > 1e-9 * std::max(rho, 1e-300))
      throw ConfigError("decompose: row " + std::to_string(j + 2) +
                        " is not at rho e^{2 pi i j/N}; samples must be equispaced on one "
                        "circle, starting at angle 0");
  }

  const int half = static_cast<int>(n / 2);
  int m_lo = -(half - 1), m_hi = half - 1;
  if (n == 1) m_lo = m_hi = 0;
  if (doc.contains("m_range")) {
    const json& r = doc["m_range"];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw ConfigError("m_range: expected [m_lo, m_hi]");
    m_lo = r[0].get<int>();
    m_hi = r[1].get<int>();
    if (m_lo > m_hi) throw ConfigError("m_range: m_lo must not exceed m_hi");
  }
  std::vector<gh_complex> k(static_cast<std::size_t>(m_hi - m_lo + 1));
  int alias = 0;
  check(gh_extract_from_samples(&job.params, samples.u.data(), n, rho, m_lo, m_hi, &job.eval,
                                k.data(), &alias),
        "decompose");

  std::vector<Mode> modes;
  std::string csv = "m,re_k,im_k\n";
  for (int m = m_lo; m <= m_hi; ++m) {
    const gh_complex km = k[static_cast<std::size_t>(m - m_lo)];
    modes.push_back({m, km});
    csv += std::to_string(m) + "," + csv_complex(km) + "\n";
  }
  Output out;
  out.doc = header(job);
  out.doc["rho"] = rho;
  out.doc["n"] = n;
  out.doc["alias_warning"] = alias != 0;
  out.doc["modes"] = modes_json(modes);
  out.csv = csv;
  return out;
}

// ---- verify -------------------------------------------------------------

struct Check {
  std::string name;
  double max_abs = 0.0;
  double threshold = 0.0;
  json extra = json::object();
};

gh_params swapped(const gh_params& p) { return {p.t, p.s, p.r}; }

Output run_verify(const Job& job) {
  const json& doc = job.doc;
  if (!job.grid) throw ConfigError("verify: config needs \"grid\"");
  const Solution sol = make_solution(job);

  std::vector<std::string> checks{"pde"};
  if (doc.contains("checks")) {
    checks.clear();
    for (const json& c : doc["checks"]) {
      const std::string name = c.is_string() ? c.get<std::string>() : "";
      if (name != "pde" && name != "ode" && name != "wronskian")
        throw ConfigError("verify.checks: entries must be \"pde\", \"ode\" or \"wronskian\"");
      checks.push_back(name);
    }
  }
  const json thresholds = doc.value("thresholds", json::object());
  const double h = job.eval.fd_step;

  std::vector<Check> results;
  for (const auto& name : checks) {
    Check c{name};
    if (name == "pde") {
      c.threshold = number_field(thresholds, "pde", 1e-4);
      gh_residual_report rep{};
      check(gh_residual_solution(&job.params, sol.get(), &*job.grid, h, &rep), "verify pde");
      c.max_abs = rep.max_abs;
      c.extra = {{"argmax_point", to_json(rep.argmax_point)},
                 {"points_checked", rep.points_checked},
                 {"fd_step", rep.fd_step}};
    } else if (name == "ode") {
      c.threshold = number_field(thresholds, "ode", 1e-12);
      const int count = integer_field(doc.value("ode", json::object()), "coefficients", 40);
      if (count < 1) throw ConfigError("ode.coefficients: must be positive");
      std::vector<gh_complex> f(static_cast<std::size_t>(count));
      for (const Mode& mode : *job.modes) {
        const gh_params p = mode.m >= 0 ? job.params : swapped(job.params);
        const int am = std::abs(mode.m);
        check(gh_p_coefficients(&p, am, f.size(), f.data()), "verify ode");
        double res = 0.0, scale = 0.0;
        check(gh_ode_recurrence_residual(&p, am, f.data(), f.size(), &res), "verify ode");
        for (const auto& v : f) scale = std::max(scale, std::abs(cx(v)));
        c.max_abs = std::max(c.max_abs, res / scale);
      }
      c.extra = {{"relative", true}, {"coefficients", count}};
    } else {
      c.threshold = number_field(thresholds, "wronskian", 1e-6);
      const json w = doc.value("wronskian", json::object());
      const double x0 = number_field(w, "x0", 0.5), x1 = number_field(w, "x1", 1.5);
      const int steps = integer_field(w, "steps", 10000);
      std::set<std::pair<int, bool>> done;
      for (const Mode& mode : *job.modes) {
        if (!done.insert({std::abs(mode.m), mode.m < 0}).second) continue;
        const gh_params p = mode.m >= 0 ? job.params : swapped(job.params);
        double dev = 0.0;
        check(gh_wronskian_check(&p, std::abs(mode.m), x0, x1, steps, &dev), "verify wronskian");
        c.max_abs = std::max(c.max_abs, dev);
      }
      c.extra = {{"x0", x0}, {"x1", x1}, {"steps", steps}};
    }
    results.push_back(c);
  }

  Output out;
  out.doc = header(job);
  json reports = json::array();
  std::string csv = "check,max_abs,threshold,pass\n";
  bool all = true;
  for (const Check& c : results) {
    const bool pass = c.max_abs <= c.threshold;
    all = all && pass;
    json r{{"check", c.name}, {"max_abs", c.max_abs}, {"threshold", c.threshold}, {"pass", pass}};
    r.update(c.extra);
    reports.push_back(r);
    csv += c.name + "," + fmt17(c.max_abs) + "," + fmt17(c.threshold) + "," +
           (pass ? "true" : "false") + "\n";
  }
  out.doc["reports"] = reports;
  out.doc["pass"] = all;
  out.csv = csv;
  out.exit_code = all ? 0 : 2;
  return out;
}

// ---- limit --------------------------------------------------------------

Output run_limit(const Job& job) {
  const json& doc = job.doc;
  const std::vector<int> ms = int_list(doc, "m", {2, 20, 200});
  const double radius = number_field(doc, "radius", 1.0);
  const int n_grid = integer_field(doc, "n_grid", 41);

  Output out;
  out.doc = header(job);
  out.doc["radius"] = radius;
  out.doc["n_grid"] = n_grid;
  json rows = json::array();
  std::string csv = "m,gap\n";
  bool decreasing = true;
  double prev = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    double gap = 0.0;
    check(gh_asymptotic_gap(&job.params, ms[i], radius, n_grid, &job.eval, &gap), "limit");
    if (i > 0 && !(gap < prev)) decreasing = false;
    prev = gap;
    rows.push_back({{"m", ms[i]}, {"gap", gap}});
    csv += std::to_string(ms[i]) + "," + fmt17(gap) + "\n";
  }
  out.doc["rows"] = rows;
  out.doc["strictly_decreasing"] = decreasing;
  out.csv = csv;
  return out;
}

// ---- algebra ------------------------------------------------------------

void csv_operator(std::string& csv, const gh_operator& d) {
  const gh_complex* parts[] = {&d.a1, &d.a2, &d.a3, &d.a4};
  for (int i = 0; i < 4; ++i)
    csv += "a" + std::to_string(i + 1) + "," + csv_complex(*parts[i]) + "\n";
}

Output run_algebra(const Job& job) {
  const json& doc = job.doc;
  if (!doc.contains("op") || !doc["op"].is_string())
    throw ConfigError("algebra: needs an operation (bracket, lambda, kernel, equivalent, "
                      "from_params, rescale)");
  const std::string op = doc["op"].get<std::string>();

  Output out;
  out.doc = {{"schema", kSchema}, {"command", "algebra"}, {"op", op}};
  std::string csv = "field,re,im\n";

  if (op == "bracket") {
    const gh_operator v = require_operator(doc, "v"), w = require_operator(doc, "w");
    gh_operator b{};
    check(gh_bracket(&v, &w, &b), "bracket");
    out.doc["gamma"] = to_json(b.a4);
    out.doc["element"] = operator_json(b);
    csv += "gamma," + csv_complex(b.a4) + "\n";
    csv_operator(csv, b);
  } else if (op == "lambda") {
    const gh_operator v = require_operator(doc, "v");
    const int m = integer_field(doc, "m", 0);
    gh_ode_operator t{};
    check(gh_lambda_map(&v, m, &t), "lambda");
    out.doc["m"] = m;
    out.doc["ode"] = {{"q2", to_json(t.q2)},
                      {"q1c", to_json(t.q1c)},
                      {"q1l", to_json(t.q1l)},
                      {"q0", to_json(t.q0)}};
    csv += "q2," + csv_complex(t.q2) + "\nq1c," + csv_complex(t.q1c) + "\nq1l," +
           csv_complex(t.q1l) + "\nq0," + csv_complex(t.q0) + "\n";
  } else if (op == "kernel") {
    const int m = integer_field(doc, "m", 0);
    gh_operator k{};
    check(gh_kernel_basis(m, &k), "kernel");
    out.doc["m"] = m;
    out.doc["element"] = operator_json(k);
    csv_operator(csv, k);
  } else if (op == "equivalent") {
    const gh_operator v = require_operator(doc, "v"), w = require_operator(doc, "w");
    const int m = integer_field(doc, "m", 0);
    int eq = 0;
    gh_complex mu{};
    check(gh_equivalent(&v, &w, m, &eq, &mu), "equivalent");
    out.doc["m"] = m;
    out.doc["equivalent"] = eq != 0;
    out.doc["mu"] = to_json(mu);
    csv += std::string("equivalent,") + (eq ? "1" : "0") + ",0\nmu," + csv_complex(mu) + "\n";
  } else if (op == "from_params") {
    gh_operator d{};
    check(gh_from_params(&job.params, &d), "from_params");
    out.doc["params"] = to_json(job.params);
    out.doc["element"] = operator_json(d);
    csv_operator(csv, d);
  } else if (op == "rescale") {
    const double rho = number_field(doc, "rho", 1.0);
    gh_params q{};
    check(gh_rescale_params(&job.params, rho, &q), "rescale");
    out.doc["rho"] = rho;
    out.doc["params"] = to_json(q);
    csv += "s," + csv_complex(q.s) + "\nt," + csv_complex(q.t) + "\nr," + csv_complex(q.r) + "\n";
  } else {
    throw ConfigError("algebra: unknown operation '" + op + "'");
  }
  out.csv = csv;
  return out;
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Output run(const Job& job) {
  if (job.command == "eval") return run_eval(job);
  if (job.command == "synth") return run_synth(job);
  if (job.command == "decompose") return run_decompose(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "limit") return run_limit(job);
  if (job.command == "algebra") return run_algebra(job);
  if (job.command.empty()) throw ConfigError("no command given (config \"command\" or argument)");
  throw ConfigError("unknown command '" + job.command + "'");
}

}  // namespace cli
