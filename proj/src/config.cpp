#include "anandan/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>

#include "anandan/errors.hpp"
#include "overloaded.hpp"

namespace anandan {

using json = nlohmann::ordered_json;
using detail::overloaded;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where.empty() ? "<root>" : where, "expected an object");
}

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw SchemaError(join(where, key), "unknown key");
  }
}

const json& required(const json& j, const std::string& where, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(where, key), "missing required key");
  return *it;
}

double as_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw SchemaError(key, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(key, "expected a finite number");
  return v;
}

double number(const json& j, const std::string& where, const std::string& key) {
  return as_number(required(j, where, key), join(where, key));
}

double number_or(const json& j, const std::string& where, const std::string& key, double fallback) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : as_number(*it, join(where, key));
}

double positive(double v, const std::string& key) {
  if (!(v > 0.0)) throw SchemaError(key, "must be > 0");
  return v;
}

long long as_integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw SchemaError(key, "expected an integer");
  return j.get<long long>();
}

std::string as_string(const json& j, const std::string& key) {
  if (!j.is_string()) throw SchemaError(key, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& key) {
  if (!j.is_boolean()) throw SchemaError(key, "expected true or false");
  return j.get<bool>();
}

Vec3 as_vec3(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3) throw SchemaError(key, "expected an array of 3 numbers");
  return {as_number(j[0], key + "[0]"), as_number(j[1], key + "[1]"),
          as_number(j[2], key + "[2]")};
}

Vec3 vec3(const json& j, const std::string& where, const std::string& key) {
  return as_vec3(required(j, where, key), join(where, key));
}

std::vector<Vec3> as_points(const json& j, const std::string& key) {
  if (!j.is_array()) throw SchemaError(key, "expected an array of [x, y, z] points");
  std::vector<Vec3> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_vec3(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

template <class F>
auto construct(const std::string& key, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(key, e.what());
  } catch (const InvalidGeometry& e) {
    throw SchemaError(key, e.what());
  }
}

// --- particle ------------------------------------------------------------------

DipoleParticle parse_particle(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"mass", "d", "mu"});
  DipoleParticle p;
  p.mass = positive(number(j, where, "mass"), join(where, "mass"));
  p.d = vec3(j, where, "d");
  p.mu = vec3(j, where, "mu");
  return p;
}

json particle_json(const DipoleParticle& p) {
  return json{{"mass", p.mass}, {"d", to_json(p.d)}, {"mu", to_json(p.mu)}};
}

// --- field ---------------------------------------------------------------------

FieldConfig parse_field(const json& j, const std::string& where) {
  require_object(j, where);
  const std::string type = as_string(required(j, where, "type"), join(where, "type"));
  if (type == "radial_line") {
    reject_unknown(j, where, {"type", "lambda_e", "lambda_m", "core_radius"});
    const double le = number(j, where, "lambda_e");
    const double lm = number(j, where, "lambda_m");
    const double core = positive(number_or(j, where, "core_radius", kDefaultCoreRadius),
                                 join(where, "core_radius"));
    return construct(where, [&] { return FieldConfig::radial_line(le, lm, core); });
  }
  if (type == "tkachuk_wire") {
    reject_unknown(j, where, {"type", "lambda", "lambda_m", "core_radius"});
    const double l = number(j, where, "lambda");
    const double lm = number(j, where, "lambda_m");
    const double core = positive(number_or(j, where, "core_radius", kDefaultCoreRadius),
                                 join(where, "core_radius"));
    return construct(where, [&] { return FieldConfig::tkachuk_wire(l, lm, core); });
  }
  if (type == "uniform_block") {
    reject_unknown(j, where, {"type", "E0", "B0", "region"});
    const Vec3 e0 = vec3(j, where, "E0");
    const Vec3 b0 = vec3(j, where, "B0");
    const std::string rwhere = join(where, "region");
    const json& region = required(j, where, "region");
    require_object(region, rwhere);
    reject_unknown(region, rwhere, {"min", "max"});
    const Box box{vec3(region, rwhere, "min"), vec3(region, rwhere, "max")};
    return construct(rwhere, [&] { return FieldConfig::uniform_block(e0, b0, box); });
  }
  if (type == "superposition") {
    reject_unknown(j, where, {"type", "members"});
    const std::string mwhere = join(where, "members");
    const json& members = required(j, where, "members");
    if (!members.is_array() || members.empty())
      throw SchemaError(mwhere, "expected a non-empty array of fields");
    std::vector<FieldConfig> out;
    for (std::size_t i = 0; i < members.size(); ++i)
      out.push_back(parse_field(members[i], mwhere + "[" + std::to_string(i) + "]"));
    return FieldConfig::superposition(std::move(out));
  }
  throw SchemaError(join(where, "type"),
                    "expected one of radial_line, tkachuk_wire, uniform_block, superposition");
}

json field_json(const FieldConfig& c) {
  return std::visit(
      overloaded{
          [](const RadialLine& f) {
            return json{{"type", "radial_line"},
                        {"lambda_e", f.lambda_e},
                        {"lambda_m", f.lambda_m},
                        {"core_radius", f.core_radius}};
          },
          [](const TkachukWire& f) {
            return json{{"type", "tkachuk_wire"},
                        {"lambda", f.lambda},
                        {"lambda_m", f.lambda_m},
                        {"core_radius", f.core_radius}};
          },
          [](const UniformBlock& f) {
            return json{{"type", "uniform_block"},
                        {"E0", to_json(f.E0)},
                        {"B0", to_json(f.B0)},
                        {"region", {{"min", to_json(f.region.lo)}, {"max", to_json(f.region.hi)}}}};
          },
          [](const Superposition& f) {
            json members = json::array();
            for (const auto& m : f.members) members.push_back(field_json(m));
            return json{{"type", "superposition"}, {"members", members}};
          },
      },
      c.variant());
}

// --- path ----------------------------------------------------------------------

PathSpec parse_path(const json& j, const std::string& where) {
  require_object(j, where);
  const std::string type = as_string(required(j, where, "type"), join(where, "type"));
  PathSpec out;
  if (type == "circle") {
    reject_unknown(j, where, {"type", "center", "radius", "normal", "winding"});
    Circle c;
    c.center = vec3(j, where, "center");
    c.radius = positive(number(j, where, "radius"), join(where, "radius"));
    if (j.contains("normal")) c.normal = as_vec3(j["normal"], join(where, "normal"));
    if (norm(c.normal) == 0.0) throw SchemaError(join(where, "normal"), "must be nonzero");
    const long long w = as_integer(required(j, where, "winding"), join(where, "winding"));
    if (w == 0) throw SchemaError(join(where, "winding"), "must be nonzero for a closed circle");
    if (w > 1'000'000 || w < -1'000'000) throw SchemaError(join(where, "winding"), "out of range");
    c.winding = static_cast<int>(w);
    out = c;
  } else if (type == "polygon") {
    reject_unknown(j, where, {"type", "vertices"});
    out = Polygon{as_points(required(j, where, "vertices"), join(where, "vertices"))};
  } else if (type == "polyline") {
    reject_unknown(j, where, {"type", "vertices"});
    out = Polyline{as_points(required(j, where, "vertices"), join(where, "vertices"))};
  } else if (type == "parametric") {
    reject_unknown(j, where, {"type", "samples", "closed"});
    Parametric p;
    p.samples = as_points(required(j, where, "samples"), join(where, "samples"));
    if (j.contains("closed")) p.closed = as_bool(j["closed"], join(where, "closed"));
    out = p;
  } else {
    throw SchemaError(join(where, "type"), "expected one of circle, polygon, polyline, parametric");
  }
  construct(where, [&] { return path_pieces(out); });
  return out;
}

json points_json(const std::vector<Vec3>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json path_json(const PathSpec& path) {
  return std::visit(overloaded{
                        [](const Circle& c) {
                          return json{{"type", "circle"},
                                      {"center", to_json(c.center)},
                                      {"radius", c.radius},
                                      {"normal", to_json(c.normal)},
                                      {"winding", c.winding}};
                        },
                        [](const Polygon& p) {
                          return json{{"type", "polygon"}, {"vertices", points_json(p.vertices)}};
                        },
                        [](const Polyline& p) {
                          return json{{"type", "polyline"}, {"vertices", points_json(p.vertices)}};
                        },
                        [](const Parametric& p) {
                          return json{{"type", "parametric"},
                                      {"samples", points_json(p.samples)},
                                      {"closed", p.closed}};
                        },
                    },
                    path);
}

// --- state / interferometer / options -----------------------------------------

KinematicState parse_state(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"r", "v", "t"});
  return {vec3(j, where, "r"), vec3(j, where, "v"), number_or(j, where, "t", 0.0)};
}

CasellaParams parse_interferometer(const json& j, const std::string& where) {
  require_object(j, where);
  const std::string type = as_string(required(j, where, "type"), join(where, "type"));
  if (type != "casella") throw SchemaError(join(where, "type"), "expected casella");
  reject_unknown(j, where, {"type", "d", "mu", "B0", "E0", "a", "w", "lead", "mass"});
  CasellaParams p;
  p.d = number(j, where, "d");
  p.mu = number(j, where, "mu");
  p.B0 = number(j, where, "B0");
  p.E0 = number(j, where, "E0");
  p.a = positive(number(j, where, "a"), join(where, "a"));
  p.w = positive(number(j, where, "w"), join(where, "w"));
  p.lead = number_or(j, where, "lead", p.w);
  if (!(p.lead > 0.0)) throw SchemaError(join(where, "lead"), "must be > 0");
  p.mass = positive(number_or(j, where, "mass", 1.0), join(where, "mass"));
  return p;
}

json interferometer_json(const CasellaParams& p) {
  return json{{"type", "casella"}, {"d", p.d},   {"mu", p.mu}, {"B0", p.B0},      {"E0", p.E0},
              {"a", p.a},          {"w", p.w},   {"lead", p.lead > 0.0 ? p.lead : p.w},
              {"mass", p.mass}};
}

std::size_t count(const json& j, const std::string& key, std::size_t min) {
  const long long v = as_integer(j, key);
  if (v < static_cast<long long>(min))
    throw SchemaError(key, "must be an integer >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

OutputFormat parse_format(const std::string& s, const std::string& key) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw SchemaError(key, "expected json or csv");
}

RunOptions parse_options(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"tol_quad", "dt", "steps", "format", "seed", "suite", "sweep"});
  RunOptions o;
  o.tol_quad = positive(number_or(j, where, "tol_quad", o.tol_quad), join(where, "tol_quad"));
  o.dt = positive(number_or(j, where, "dt", o.dt), join(where, "dt"));
  if (j.contains("steps")) o.steps = count(j["steps"], join(where, "steps"), 1);
  if (j.contains("format"))
    o.format = parse_format(as_string(j["format"], join(where, "format")), join(where, "format"));
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw SchemaError(join(where, "seed"), "expected a non-negative integer");
    o.seed = s.get<std::uint64_t>();
  }
  if (j.contains("suite")) o.suite = as_string(j["suite"], join(where, "suite"));
  if (j.contains("sweep")) {
    const std::string sw = join(where, "sweep");
    const json& s = j["sweep"];
    require_object(s, sw);
    reject_unknown(s, sw, {"param", "from", "to", "steps"});
    SweepSpec spec;
    spec.param = as_string(required(s, sw, "param"), join(sw, "param"));
    spec.from = number(s, sw, "from");
    spec.to = number(s, sw, "to");
    spec.steps = count(required(s, sw, "steps"), join(sw, "steps"), 1);
    o.sweep = spec;
  }
  return o;
}

json options_json(const RunOptions& o) {
  json j{{"tol_quad", o.tol_quad},
         {"dt", o.dt},
         {"steps", o.steps},
         {"format", o.format == OutputFormat::Json ? "json" : "csv"},
         {"seed", o.seed},
         {"suite", o.suite}};
  if (o.sweep)
    j["sweep"] = json{{"param", o.sweep->param},
                      {"from", o.sweep->from},
                      {"to", o.sweep->to},
                      {"steps", o.sweep->steps}};
  return j;
}

}  // namespace

void RunSpec::validate() const {
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
    throw SchemaError("command",
                      "expected one of phase, force, torque, trajectory, interfere, sweep, check");
  auto need = [](bool present, const char* key) {
    if (!present) throw SchemaError(key, "missing required section for this command");
  };
  if (command == "phase" || command == "sweep") {
    need(particle.has_value(), "particle");
    need(field.has_value(), "field");
    need(path.has_value(), "path");
  }
  if (command == "force" || command == "torque" || command == "trajectory") {
    need(particle.has_value(), "particle");
    need(field.has_value(), "field");
    need(state.has_value(), "state");
  }
  if (command == "interfere") need(interferometer.has_value(), "interferometer");
  if (command == "sweep") need(options.sweep.has_value(), "options.sweep");
  if (command == "check") {
    if (field.has_value() != particle.has_value())
      throw SchemaError(field ? "particle" : "field",
                        "check needs both particle and field, or neither");
  }
}

RunSpec parse_config_json(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "",
                 {"command", "particle", "field", "path", "state", "interferometer", "options"});
  RunSpec spec;
  if (doc.contains("command")) spec.command = as_string(doc["command"], "command");
  if (doc.contains("particle")) spec.particle = parse_particle(doc["particle"], "particle");
  if (doc.contains("field")) spec.field = parse_field(doc["field"], "field");
  if (doc.contains("path")) spec.path = parse_path(doc["path"], "path");
  if (doc.contains("state")) spec.state = parse_state(doc["state"], "state");
  if (doc.contains("interferometer"))
    spec.interferometer = parse_interferometer(doc["interferometer"], "interferometer");
  if (doc.contains("options")) spec.options = parse_options(doc["options"], "options");
  return spec;
}

RunSpec parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_config_json(doc);
}

json to_json(const RunSpec& spec) {
  json j;
  if (!spec.command.empty()) j["command"] = spec.command;
  if (spec.particle) j["particle"] = particle_json(*spec.particle);
  if (spec.field) j["field"] = field_json(*spec.field);
  if (spec.path) j["path"] = path_json(*spec.path);
  if (spec.state)
    j["state"] = json{{"r", to_json(spec.state->r)}, {"v", to_json(spec.state->v)},
                      {"t", spec.state->t}};
  if (spec.interferometer) j["interferometer"] = interferometer_json(*spec.interferometer);
  j["options"] = options_json(spec.options);
  return j;
}

}  // namespace anandan
