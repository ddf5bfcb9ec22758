#include "anandan/dynamics.hpp"

#include <stdexcept>

#include "anandan/errors.hpp"

namespace anandan {

void DipoleParticle::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("particle mass must be finite and > 0");
  if (!is_finite(d) || !is_finite(mu))
    throw std::invalid_argument("particle dipole moments must be finite");
}

Vec3 force(const DipoleParticle& particle, const KinematicState& state,
           const FieldConfig& config) {
  const FieldJacobians j = eval_jacobians(config, state.r);
  // Jacobian of W = mu x E - d x B for constant moments.
  const Mat3 dW = cross_matrix(particle.mu) * j.dE - cross_matrix(particle.d) * j.dB;
  const Vec3 curl_w{dW(2, 1) - dW(1, 2), dW(0, 2) - dW(2, 0), dW(1, 0) - dW(0, 1)};
  return j.dE * particle.d + j.dB * particle.mu + cross(state.v, curl_w);
}

Vec3 torque(const DipoleParticle& particle, const KinematicState& state,
            const FieldConfig& config) {
  const FieldSample f = eval_fields(config, state.r);
  return cross(particle.d, f.E + cross(state.v, f.B)) +
         cross(particle.mu, f.B - cross(state.v, f.E));
}

Vec3 canonical_momentum(const DipoleParticle& particle, const KinematicState& state,
                        const FieldConfig& config) {
  const FieldSample f = eval_fields(config, state.r);
  return particle.mass * state.v - cross(particle.mu, f.E) + cross(particle.d, f.B);
}

double potential_energy(const DipoleParticle& particle, const KinematicState& state,
                        const FieldConfig& config) {
  const FieldSample f = eval_fields(config, state.r);
  return -dot(particle.mu, f.B) - dot(particle.d, f.E);
}

namespace {

struct Derivative {
  Vec3 dr;
  Vec3 dv;
};

Derivative rhs(const DipoleParticle& p, const FieldConfig& config, const Vec3& r, const Vec3& v) {
  return {v, force(p, KinematicState{r, v, 0.0}, config) / p.mass};
}

}  // namespace

Trajectory integrate_trajectory(const DipoleParticle& particle, const KinematicState& initial,
                                const FieldConfig& config, double dt, std::size_t steps,
                                Integrator method) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
  particle.validate();
  if (!is_finite(initial.r) || !is_finite(initial.v) || !std::isfinite(initial.t))
    throw std::invalid_argument("initial state must be finite");
  // Surface initial-state precondition violations to the caller.
  (void)eval_jacobians(config, initial.r);

  Trajectory traj;
  traj.integrator = method;
  traj.dt = dt;
  traj.states.reserve(steps + 1);
  traj.states.push_back(initial);

  Vec3 r = initial.r;
  Vec3 v = initial.v;
  try {
    for (std::size_t n = 1; n <= steps; ++n) {
      const Derivative k1 = rhs(particle, config, r, v);
      const Derivative k2 = rhs(particle, config, r + 0.5 * dt * k1.dr, v + 0.5 * dt * k1.dv);
      const Derivative k3 = rhs(particle, config, r + 0.5 * dt * k2.dr, v + 0.5 * dt * k2.dv);
      const Derivative k4 = rhs(particle, config, r + dt * k3.dr, v + dt * k3.dv);
      const Vec3 r_next = r + (dt / 6.0) * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
      const Vec3 v_next = v + (dt / 6.0) * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
      // Every stored sample must itself satisfy the field preconditions.
      (void)eval_jacobians(config, r_next);
      r = r_next;
      v = v_next;
      traj.states.push_back({r, v, initial.t + static_cast<double>(n) * dt});
    }
  } catch (const SingularityViolation& e) {
    traj.error = e.what();
    traj.singular = true;
  } catch (const BoundaryEvaluation& e) {
    traj.error = e.what();
  }
  return traj;
}

}  // namespace anandan
