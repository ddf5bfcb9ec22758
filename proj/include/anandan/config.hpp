#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "anandan/dynamics.hpp"
#include "anandan/fields.hpp"
#include "anandan/holonomy.hpp"
#include "anandan/interferometer.hpp"
#include "anandan/path.hpp"

#include <json.hpp>

namespace anandan {

struct SweepSpec {
  /// Dotted key path of a numeric config value, e.g. "field.lambda_e" or "particle.d[2]".
  std::string param;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 1;

  double value(std::size_t i) const {
    if (steps <= 1) return from;
    return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

enum class OutputFormat { Json, Csv };

struct RunOptions {
  double tol_quad = kDefaultQuadTolerance;
  double dt = kDefaultTimeStep;
  std::size_t steps = 1000;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::optional<SweepSpec> sweep;
};

/// A fully parsed configuration document. Sections are optional at parse time;
/// validate() checks that the command has what it needs.
struct RunSpec {
  std::string command;
  std::optional<DipoleParticle> particle;
  std::optional<FieldConfig> field;
  std::optional<PathSpec> path;
  std::optional<KinematicState> state;
  std::optional<CasellaParams> interferometer;
  RunOptions options;

  /// Throws SchemaError naming the missing or invalid key.
  void validate() const;
};

inline constexpr std::string_view kCommands[] = {"phase",     "force", "torque", "trajectory",
                                                 "interfere", "sweep", "check"};

/// Parses a JSON configuration document. Throws ParseError for malformed JSON and
/// SchemaError (naming the key, e.g. "particle.mass") for schema violations.
RunSpec parse_config(std::string_view text);
RunSpec parse_config_json(const nlohmann::ordered_json& doc);

/// Resolved document with every default filled in; parse_config(to_json(s)) == s.
nlohmann::ordered_json to_json(const RunSpec& spec);

}  // namespace anandan
