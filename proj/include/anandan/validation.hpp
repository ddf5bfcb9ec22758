#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anandan/dynamics.hpp"
#include "anandan/fields.hpp"

namespace anandan {

/// Outcome of one packaged property check. pass == (metric <= threshold).
struct CheckReport {
  std::string name;
  bool pass = false;
  double metric = 0.0;
  double threshold = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Samples in-plane positions (z = 0) and arbitrary velocities around a single line
/// source. metric = max(|F|, |tau at v = 0|), threshold 1e-10.
/// Throws ConfigNotApplicable unless config is a RadialLine or TkachukWire.
CheckReport check_null_force_torque(const FieldConfig& config, const DipoleParticle& particle,
                                    std::size_t n_samples, std::uint64_t seed);

/// Compares the phase of circles (r = 1, 5), a square (side 3) and a 2:1 ellipse that
/// all wind once around the z-axis, plus a loop that does not encircle it and a
/// +1/-1 winding pair. Lengths scale up when the core radius exceeds 0.1.
CheckReport check_topological_invariance(const FieldConfig& config,
                                         const DipoleParticle& particle, std::uint64_t seed);

/// Quadrature against the radial, Tkachuk and Casella closed forms, 50 random
/// tuples each.
CheckReport check_closed_forms(std::uint64_t seed);

/// Pointwise connection change under duality_transform at 100 random points and
/// configurations. Threshold 1e-14.
CheckReport check_duality(std::uint64_t seed);

/// Runs a named suite: "null_force", "topological", "closed_forms", "duality" or "all".
/// The first two use config/particle. Throws std::invalid_argument for unknown names.
std::vector<CheckReport> run_suite(const std::string& suite, const FieldConfig& config,
                                   const DipoleParticle& particle, std::uint64_t seed);

/// RadialLine(1, 2) with d = z-hat, mu = 0.5 z-hat: the default subject of the line-source checks.
FieldConfig default_check_field();
DipoleParticle default_check_particle();

}  // namespace anandan
