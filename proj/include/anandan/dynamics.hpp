#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anandan/fields.hpp"
#include "anandan/vec3.hpp"

namespace anandan {

/// Neutral particle with constant (permanent) electric and magnetic dipole moments.
struct DipoleParticle {
  double mass = 1.0;
  Vec3 d;
  Vec3 mu;

  /// Throws std::invalid_argument unless mass > 0 and all components are finite.
  void validate() const;
};

struct KinematicState {
  Vec3 r;
  Vec3 v;
  double t = 0.0;
};

/// F = (d.grad)E + (mu.grad)B + v x curl(mu x E - d x B), with d and mu held constant
/// and the fields static.
Vec3 force(const DipoleParticle& particle, const KinematicState& state,
           const FieldConfig& config);

/// tau = d x (E + v x B) + mu x (B - v x E): each moment crossed with its comoving field.
Vec3 torque(const DipoleParticle& particle, const KinematicState& state,
            const FieldConfig& config);

/// P = m v - mu x E + d x B.
Vec3 canonical_momentum(const DipoleParticle& particle, const KinematicState& state,
                        const FieldConfig& config);

/// U = -mu.B - d.E.
double potential_energy(const DipoleParticle& particle, const KinematicState& state,
                        const FieldConfig& config);

enum class Integrator { RK4 };

inline constexpr double kDefaultTimeStep = 1e-3;

struct Trajectory {
  std::vector<KinematicState> states;
  Integrator integrator = Integrator::RK4;
  double dt = kDefaultTimeStep;
  /// Set when the run stopped early; states then holds the steps completed so far.
  std::optional<std::string> error;
  bool singular = false;

  bool complete() const { return !error.has_value(); }
};

/// Fixed-step RK4 for r' = v, v' = F / m. A step that reaches a singular core or a
/// block face ends the run and the partial trajectory is returned with error set.
/// Throws std::invalid_argument for dt <= 0 and lets errors at the initial state escape.
Trajectory integrate_trajectory(const DipoleParticle& particle, const KinematicState& initial,
                                const FieldConfig& config, double dt, std::size_t steps,
                                Integrator method = Integrator::RK4);

}  // namespace anandan
