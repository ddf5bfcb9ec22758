#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>

#include "anandan/dynamics.hpp"
#include "anandan/fields.hpp"
#include "anandan/kernels.hpp"
#include "anandan/path.hpp"

namespace anandan {

/// Geometric phase of a path, split into the electric-dipole (d x B) and
/// magnetic-dipole (-mu x E) contributions.
struct PhaseResult {
  double gamma_total = 0.0;
  double gamma_hmw = 0.0;
  double gamma_ac = 0.0;
  double quad_error = 0.0;
  std::size_t n_evals = 0;
};

inline constexpr double kDefaultQuadTolerance = 1e-10;
inline constexpr int kMaxQuadDepth = 24;

struct QuadratureOptions {
  /// Absolute tolerance on the change of a piece estimate under one bisection.
  double tol = kDefaultQuadTolerance;
  int max_depth = kMaxQuadDepth;
  /// Kernel backend; unset selects the best one for this CPU.
  std::optional<kernels::Backend> backend;
};

/// A = d x B(r) - mu x E(r).
Vec3 connection(const DipoleParticle& particle, const FieldConfig& config, const Vec3& r);

/// Line integral of the connection along the oriented path, closed or open.
///
/// Each smooth piece is integrated with 8-point Gauss-Legendre and bisected
/// recursively until the estimate changes by less than options.tol. Both dipole
/// terms are integrated over the same node set, and gamma_total is their sum.
/// Throws SingularityViolation if the path comes within a core radius of a line
/// source, QuadratureNonConvergence past options.max_depth.
PhaseResult phase_line_integral(const DipoleParticle& particle, const FieldConfig& config,
                                const PathSpec& path, const QuadratureOptions& options = {});

/// exp(-i gamma_total).
std::complex<double> dirac_phase_factor(const DipoleParticle& particle, const FieldConfig& config,
                                        const PathSpec& path,
                                        const QuadratureOptions& options = {});

/// Closed-form phases for z-aligned moments (scalars mu, d) on a loop of winding n.
struct RadialPhaseParams {
  double mu = 0.0;
  double lambda_e = 0.0;
  double d = 0.0;
  double lambda_m = 0.0;
  int winding = 1;
};

struct TkachukPhaseParams {
  double mu = 0.0;
  double lambda_e = 0.0;
  double d = 0.0;
  double lambda_m = 0.0;
  int winding = 1;
};

struct CasellaPhaseParams {
  double d = 0.0;
  double B0 = 0.0;
  double mu = 0.0;
  double E0 = 0.0;
  double a = 0.0;
};

using ClosedFormParams = std::variant<RadialPhaseParams, TkachukPhaseParams, CasellaPhaseParams>;

/// Radial:  n 2pi (d lambda_m - mu lambda_e)
/// Tkachuk: n 2pi (2 d lambda_m - mu lambda_e)
/// Casella: 2 d B0 a + 2 mu E0 a
/// Signs follow the counterclockwise orientation of phase_line_integral.
double closed_form_phase(const ClosedFormParams& params);

/// Electromagnetic duality: mu' = d, d' = -mu on the particle and B' = E, E' = -B on
/// every field variant. The connection is invariant under the pair of maps.
std::pair<DipoleParticle, FieldConfig> duality_transform(const DipoleParticle& particle,
                                                        const FieldConfig& config);

}  // namespace anandan
