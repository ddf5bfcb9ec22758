#include "anandan/interferometer.hpp"

#include <cmath>

#include "anandan/errors.hpp"

namespace anandan {

namespace {
constexpr double kEndpointTolerance = 1e-12;
}

void InterferometerSpec::validate() const {
  if (is_closed(arm1.path) || is_closed(arm2.path))
    throw InvalidGeometry("interferometer arms must be open paths");
  if (norm(path_start(arm1.path) - path_start(arm2.path)) > kEndpointTolerance ||
      norm(path_end(arm1.path) - path_end(arm2.path)) > kEndpointTolerance)
    throw InvalidGeometry("interferometer arms must share start and end points");
  particle.validate();
}

InterferometerSpec build_casella(const CasellaParams& p) {
  if (!(p.a > 0.0) || !std::isfinite(p.a)) throw InvalidGeometry("casella: a must be > 0");
  if (!(p.w > 0.0) || !std::isfinite(p.w)) throw InvalidGeometry("casella: w must be > 0");
  if (p.lead < 0.0 || !std::isfinite(p.lead)) throw InvalidGeometry("casella: lead must be >= 0");
  const double lead = p.lead > 0.0 ? p.lead : p.w;
  const double half_w = 0.5 * p.w;
  const double quarter_w = 0.25 * p.w;

  const Vec3 source{0.0, 0.0, 0.0};
  const Vec3 detector{0.0, 2.0 * lead + p.a, 0.0};

  auto arm = [&](double side, double sign) {
    const double x = side * half_w;
    // Polyline vertices sit exactly on the block faces so no piece straddles a jump.
    Polyline path{{source, {x, lead, 0.0}, {x, lead + p.a, 0.0}, detector}};
    const Box region{{x - quarter_w, lead, -quarter_w}, {x + quarter_w, lead + p.a, quarter_w}};
    return ArmSpec{path, FieldConfig::uniform_block({sign * p.E0, 0.0, 0.0},
                                                    {0.0, 0.0, sign * p.B0}, region)};
  };

  InterferometerSpec spec{arm(-1.0, 1.0), arm(1.0, -1.0),
                          DipoleParticle{p.mass, {p.d, 0.0, 0.0}, {0.0, 0.0, p.mu}}};
  spec.validate();
  return spec;
}

double arm_phase(const ArmSpec& arm, const DipoleParticle& particle,
                 const QuadratureOptions& options) {
  return phase_line_integral(particle, arm.fields, arm.path, options).gamma_total;
}

FringeResult phase_difference(const InterferometerSpec& spec, const QuadratureOptions& options) {
  spec.validate();
  FringeResult out;
  out.arm1_phase = arm_phase(spec.arm1, spec.particle, options);
  out.arm2_phase = arm_phase(spec.arm2, spec.particle, options);
  out.delta_gamma = out.arm1_phase - out.arm2_phase;
  out.intensity = (1.0 + std::cos(out.delta_gamma)) / 2.0;
  return out;
}

}  // namespace anandan
