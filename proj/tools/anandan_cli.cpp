// Command-line front end: anandan <command> -c config.json [options]

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "anandan/errors.hpp"
#include "anandan/runner.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::string suite;
  std::string param;
  std::optional<double> from, to;
  std::optional<std::size_t> steps;
};

anandan::RunSpec load(const std::string& command, const Overrides& o) {
  anandan::RunSpec spec;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path, std::ios::binary);
    if (!in) throw anandan::ParseError("cannot read config file '" + o.config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    spec = anandan::parse_config(text.str());
  } else if (command != "check") {
    throw anandan::SchemaError("--config", "a config file is required for '" + command + "'");
  }
  spec.command = command;
  if (!o.format.empty())
    spec.options.format = o.format == "csv" ? anandan::OutputFormat::Csv : anandan::OutputFormat::Json;
  if (o.seed) spec.options.seed = *o.seed;
  if (!o.suite.empty()) spec.options.suite = o.suite;
  if (command == "sweep" && (!o.param.empty() || o.from || o.to || o.steps)) {
    anandan::SweepSpec sw = spec.options.sweep.value_or(anandan::SweepSpec{});
    if (!o.param.empty()) sw.param = o.param;
    if (o.from) sw.from = *o.from;
    if (o.to) sw.to = *o.to;
    if (o.steps) sw.steps = *o.steps;
    if (sw.param.empty()) throw anandan::SchemaError("--param", "sweep needs a parameter name");
    if (sw.steps < 1) throw anandan::SchemaError("--steps", "must be >= 1");
    spec.options.sweep = sw;
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric phases and classical dynamics of neutral particles with electric and "
               "magnetic dipole moments"};
  app.require_subcommand(1);

  Overrides o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"phase", "line integral of the dipole connection along a path"},
      {"force", "classical force (with canonical momentum and potential energy) at a state"},
      {"torque", "torque on the dipole moments at a state"},
      {"trajectory", "fixed-step RK4 trajectory"},
      {"interfere", "two-arm interferometer phase difference and fringe intensity"},
      {"sweep", "phase over a range of one numeric config value"},
      {"check", "packaged property checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", o.config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_path, "write the result here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "RNG seed for checks");
    if (name == "check")
      sub->add_option("--suite", o.suite, "all, null_force, topological, closed_forms, duality");
    if (name == "sweep") {
      sub->add_option("--param", o.param, "dotted key path, e.g. field.lambda_e");
      sub->add_option("--from", o.from, "first value");
      sub->add_option("--to", o.to, "last value");
      sub->add_option("--steps", o.steps, "number of points")->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? anandan::kExitOk : anandan::kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  anandan::RunOutput result;
  try {
    result = anandan::run(load(command, o));
  } catch (const anandan::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return anandan::kExitConfigError;
  }

  std::cerr << result.diagnostics;
  if (!result.document.empty()) {
    if (o.out_path.empty()) {
      std::cout << result.document;
    } else {
      std::ofstream out(o.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << o.out_path << "'\n";
        return anandan::kExitConfigError;
      }
      out << result.document;
    }
  }
  return result.exit_code;
}
