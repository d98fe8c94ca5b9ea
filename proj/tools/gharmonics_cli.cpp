// gharmonics: batch front end for the gharmonics library.
//
//   gharmonics [command [op]] --config job.json [--out path] [--format json|csv]
//              [--tol x] [--max-terms n] [--fd-step h]
//
// Exit status: 0 success, 1 malformed input, 2 a verification exceeded its
// threshold.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/job.hpp"

namespace {

constexpr int kConfigError = 1;

cli::json load_config(const std::string& path) {
  if (path.empty()) return cli::json::object();
  std::ifstream in(path);
  if (!in) throw cli::ConfigError("cannot open config '" + path + "'");
  try {
    return cli::json::parse(in);
  } catch (const cli::json::parse_error& e) {
    throw cli::ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cli::ConfigError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw cli::ConfigError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised harmonic functions: evaluate, synthesize, decompose, verify"};
  std::string command, op, config_path, out_path, format;
  std::optional<double> tol, fd_step;
  std::optional<int> max_terms;
  app.add_option("command", command, "eval, synth, decompose, verify, limit or algebra");
  app.add_option("op", op, "algebra operation: bracket, lambda, kernel, equivalent, "
                           "from_params, rescale");
  app.add_option("--config", config_path, "JSON job configuration");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol, "series tail tolerance");
  app.add_option("--max-terms", max_terms, "series term cap");
  app.add_option("--fd-step", fd_step, "finite-difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    cli::json doc = load_config(config_path);
    if (!command.empty()) doc["command"] = command;
    if (!op.empty()) doc["op"] = op;
    cli::Job job = cli::parse_job(doc);
    if (tol) job.eval.tol = *tol;
    if (max_terms) job.eval.max_terms = *max_terms;
    if (fd_step) job.eval.fd_step = *fd_step;
    if (!out_path.empty()) job.io.output = out_path;
    if (!format.empty()) job.io.format = format == "csv" ? cli::Format::Csv : cli::Format::Json;
    else if (!doc.contains("io") || !doc["io"].contains("format")) {
      const auto& o = job.io.output;
      if (o.size() > 4 && o.compare(o.size() - 4, 4, ".csv") == 0) job.io.format = cli::Format::Csv;
    }
    if (!job.command.empty() && !cli::known_command(job.command))
      throw cli::ConfigError("unknown command '" + job.command + "'");

    const cli::Output result = cli::run(job);
    const std::string body =
        job.io.format == cli::Format::Csv ? result.csv : result.doc.dump() + "\n";
    if (job.io.output.empty()) std::fwrite(body.data(), 1, body.size(), stdout);
    else write_file(job.io.output, body);
    for (const auto& [path, contents] : result.side_files) write_file(path, contents);
    if (result.exit_code == 2) std::cerr << "gharmonics: verification threshold exceeded\n";
    return result.exit_code;
  } catch (const cli::ConfigError& e) {
    std::cerr << "gharmonics: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "gharmonics: " << e.what() << "\n";
    return kConfigError;
  }
}
