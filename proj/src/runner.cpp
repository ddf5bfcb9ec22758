#include "anandan/runner.hpp"

#include <sstream>

#include "anandan/errors.hpp"
#include "anandan/validation.hpp"

namespace anandan {

using json = nlohmann::ordered_json;

namespace {

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

// Numbers in CSV use the same shortest round-trip form as the JSON output.
std::string num(double v) { return json(v).dump(); }

std::string csv(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  out += '\n';
  return out;
}

QuadratureOptions quad_options(const RunSpec& spec) {
  QuadratureOptions q;
  q.tol = spec.options.tol_quad;
  return q;
}

json phase_json(const PhaseResult& r) {
  return json{{"gamma_total", r.gamma_total}, {"gamma_ac", r.gamma_ac},
              {"gamma_hmw", r.gamma_hmw},     {"quad_error", r.quad_error},
              {"n_evals", r.n_evals}};
}

struct Emitted {
  json result;
  std::string csv;
  int exit_code = kExitOk;
  std::string diagnostics;
};

Emitted run_phase(const RunSpec& spec) {
  const PhaseResult r = phase_line_integral(*spec.particle, *spec.field, *spec.path,
                                            quad_options(spec));
  const std::complex<double> factor = std::polar(1.0, -r.gamma_total);
  Emitted e;
  e.result = phase_json(r);
  e.result["closed_path"] = is_closed(*spec.path);
  e.result["dirac_phase_factor"] = json::array({factor.real(), factor.imag()});
  e.csv = csv({"gamma_total", "gamma_ac", "gamma_hmw", "quad_error", "n_evals"}) +
          csv({num(r.gamma_total), num(r.gamma_ac), num(r.gamma_hmw), num(r.quad_error),
               std::to_string(r.n_evals)});
  return e;
}

Emitted run_force(const RunSpec& spec) {
  const Vec3 f = force(*spec.particle, *spec.state, *spec.field);
  const Vec3 p = canonical_momentum(*spec.particle, *spec.state, *spec.field);
  const double u = potential_energy(*spec.particle, *spec.state, *spec.field);
  Emitted e;
  e.result = json{{"force", vec_json(f)}, {"canonical_momentum", vec_json(p)},
                  {"potential_energy", u}};
  e.csv = csv({"fx", "fy", "fz"}) + csv({num(f.x), num(f.y), num(f.z)});
  return e;
}

Emitted run_torque(const RunSpec& spec) {
  const Vec3 t = torque(*spec.particle, *spec.state, *spec.field);
  Emitted e;
  e.result = json{{"torque", vec_json(t)}};
  e.csv = csv({"tx", "ty", "tz"}) + csv({num(t.x), num(t.y), num(t.z)});
  return e;
}

Emitted run_trajectory(const RunSpec& spec) {
  const Trajectory traj = integrate_trajectory(*spec.particle, *spec.state, *spec.field,
                                               spec.options.dt, spec.options.steps);
  Emitted e;
  json states = json::array();
  e.csv = csv({"t", "x", "y", "z", "vx", "vy", "vz"});
  for (const auto& s : traj.states) {
    states.push_back(json{{"t", s.t}, {"r", vec_json(s.r)}, {"v", vec_json(s.v)}});
    e.csv += csv({num(s.t), num(s.r.x), num(s.r.y), num(s.r.z), num(s.v.x), num(s.v.y),
                  num(s.v.z)});
  }
  e.result = json{{"integrator", "RK4"},
                  {"dt", traj.dt},
                  {"steps_completed", traj.states.size() - 1},
                  {"complete", traj.complete()}};
  if (traj.error) {
    e.result["error"] = *traj.error;
    e.diagnostics = "trajectory stopped early: " + *traj.error;
    e.exit_code = traj.singular ? kExitSingularity : kExitNumericalFailure;
  }
  e.result["states"] = std::move(states);
  return e;
}

Emitted run_interfere(const RunSpec& spec) {
  const InterferometerSpec built = build_casella(*spec.interferometer);
  const FringeResult r = phase_difference(built, quad_options(spec));
  Emitted e;
  e.result = json{{"delta_gamma", r.delta_gamma},
                  {"intensity", r.intensity},
                  {"arm1_phase", r.arm1_phase},
                  {"arm2_phase", r.arm2_phase}};
  e.csv = csv({"delta_gamma", "intensity", "arm1_phase", "arm2_phase"}) +
          csv({num(r.delta_gamma), num(r.intensity), num(r.arm1_phase), num(r.arm2_phase)});
  return e;
}

std::string json_pointer_for(const std::string& param) {
  std::string ptr = "/";
  for (char c : param) {
    if (c == '.' || c == '[') {
      if (ptr.back() != '/') ptr += '/';
    } else if (c != ']') {
      ptr += c;
    }
  }
  return ptr;
}

Emitted run_sweep(const RunSpec& spec) {
  const SweepSpec& sw = *spec.options.sweep;
  json base = to_json(spec);
  base.erase("command");
  base["options"].erase("sweep");
  json::json_pointer ptr;
  try {
    ptr = json::json_pointer(json_pointer_for(sw.param));
  } catch (const json::exception&) {
    throw SchemaError("options.sweep.param", "not a valid key path: " + sw.param);
  }
  if (!base.contains(ptr) || !base.at(ptr).is_number())
    throw SchemaError("options.sweep.param", "does not name a numeric value: " + sw.param);

  Emitted e;
  e.csv = csv({"param_name", "param_value", "gamma_total", "gamma_ac", "gamma_hmw", "quad_error",
               "n_evals"});
  json rows = json::array();
  for (std::size_t i = 0; i < sw.steps; ++i) {
    const double value = sw.value(i);
    json doc = base;
    doc[ptr] = value;
    RunSpec point = parse_config_json(doc);
    point.command = "phase";
    point.validate();
    const PhaseResult r = phase_line_integral(*point.particle, *point.field, *point.path,
                                              quad_options(point));
    json row = json{{"param_value", value}};
    row.update(phase_json(r));
    rows.push_back(std::move(row));
    e.csv += csv({sw.param, num(value), num(r.gamma_total), num(r.gamma_ac), num(r.gamma_hmw),
                  num(r.quad_error), std::to_string(r.n_evals)});
  }
  e.result = json{{"param_name", sw.param}, {"rows", std::move(rows)}};
  return e;
}

Emitted run_check(const RunSpec& spec) {
  const FieldConfig field = spec.field.value_or(default_check_field());
  const DipoleParticle particle = spec.particle.value_or(default_check_particle());
  const auto reports = run_suite(spec.options.suite, field, particle, spec.options.seed);
  Emitted e;
  json arr = json::array();
  e.csv = csv({"name", "pass", "metric", "threshold", "n_samples", "seed"});
  bool all_pass = true;
  std::ostringstream diag;
  for (const auto& r : reports) {
    arr.push_back(json{{"name", r.name},
                       {"pass", r.pass},
                       {"metric", r.metric},
                       {"threshold", r.threshold},
                       {"n_samples", r.n_samples},
                       {"seed", r.seed}});
    e.csv += csv({r.name, r.pass ? "true" : "false", num(r.metric), num(r.threshold),
                  std::to_string(r.n_samples), std::to_string(r.seed)});
    diag << (r.pass ? "PASS " : "FAIL ") << r.name << " metric=" << r.metric
         << " threshold=" << r.threshold << '\n';
    all_pass = all_pass && r.pass;
  }
  e.result = json{{"suite", spec.options.suite}, {"all_pass", all_pass}, {"reports", arr}};
  e.diagnostics = diag.str();
  if (!all_pass) e.exit_code = kExitNumericalFailure;
  return e;
}

Emitted dispatch(const RunSpec& spec) {
  const std::string& c = spec.command;
  if (c == "phase") return run_phase(spec);
  if (c == "force") return run_force(spec);
  if (c == "torque") return run_torque(spec);
  if (c == "trajectory") return run_trajectory(spec);
  if (c == "interfere") return run_interfere(spec);
  if (c == "sweep") return run_sweep(spec);
  return run_check(spec);
}

}  // namespace

RunOutput run(const RunSpec& spec) {
  RunOutput out;
  try {
    spec.validate();
    Emitted e = dispatch(spec);
    if (spec.options.format == OutputFormat::Csv) {
      out.document = e.csv;
    } else {
      json doc{{"command", spec.command}, {"input", to_json(spec)}, {"result", e.result}};
      doc["input"]["command"] = spec.command;
      out.document = doc.dump(2) + "\n";
    }
    out.exit_code = e.exit_code;
    out.diagnostics = e.diagnostics;
  } catch (const SchemaError& e) {
    out.exit_code = kExitConfigError;
    out.diagnostics = std::string("config error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    out.exit_code = kExitConfigError;
    out.diagnostics = std::string("config error: ") + e.what() + "\n";
  } catch (const InvalidGeometry& e) {
    out.exit_code = kExitConfigError;
    out.diagnostics = std::string("invalid geometry: ") + e.what() + "\n";
  } catch (const ConfigNotApplicable& e) {
    out.exit_code = kExitConfigError;
    out.diagnostics = std::string("config error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitConfigError;
    out.diagnostics = std::string("config error: ") + e.what() + "\n";
  } catch (const SingularityViolation& e) {
    out.exit_code = kExitSingularity;
    out.diagnostics = std::string("singularity violation: ") + e.what() + "\n";
  } catch (const Error& e) {
    out.exit_code = kExitNumericalFailure;
    out.diagnostics = std::string("numerical failure: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace anandan
