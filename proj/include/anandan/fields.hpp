#pragma once

#include <variant>
#include <vector>

#include "anandan/vec3.hpp"

namespace anandan {

inline constexpr double kDefaultCoreRadius = 1e-3;
inline constexpr double kEdgeTolerance = 1e-9;

/// E = (lambda_e / rho) e_rho, B = (lambda_m / rho) e_rho about the z-axis.
struct RadialLine {
  double lambda_e = 0.0;
  double lambda_m = 0.0;
  double core_radius = kDefaultCoreRadius;
};

/// Charged ferromagnetic wire along z: B = (2 lambda_m / rho) e_rho, E = (lambda / rho) e_rho.
/// Only the far fields of a long wire are modeled, not the magnetization itself.
struct TkachukWire {
  double lambda = 0.0;
  double lambda_m = 0.0;
  double core_radius = kDefaultCoreRadius;
};

/// Closed axis-aligned box.
struct Box {
  Vec3 lo;
  Vec3 hi;

  bool contains(const Vec3& r) const {
    return r.x >= lo.x && r.x <= hi.x && r.y >= lo.y && r.y <= hi.y && r.z >= lo.z && r.z <= hi.z;
  }
  /// Euclidean distance from r to the surface of the box.
  double distance_to_surface(const Vec3& r) const;
};

/// Constant fields inside the region, zero outside.
struct UniformBlock {
  Vec3 E0;
  Vec3 B0;
  Box region;
};

class FieldConfig;

struct Superposition {
  std::vector<FieldConfig> members;
};

/// Immutable field arrangement. Construct through the factories, which enforce the
/// variant invariants (positive core radius, positive box extent, non-empty sums).
class FieldConfig {
 public:
  using Variant = std::variant<RadialLine, TkachukWire, UniformBlock, Superposition>;

  static FieldConfig radial_line(double lambda_e, double lambda_m,
                                 double core_radius = kDefaultCoreRadius);
  static FieldConfig tkachuk_wire(double lambda, double lambda_m,
                                  double core_radius = kDefaultCoreRadius);
  static FieldConfig uniform_block(const Vec3& E0, const Vec3& B0, const Box& region);
  static FieldConfig superposition(std::vector<FieldConfig> members);
  /// Validating constructor from any variant.
  static FieldConfig from(Variant v);

  const Variant& variant() const { return v_; }

  /// Largest core radius of any line source (0 if there is none).
  double max_core_radius() const;
  bool has_line_source() const { return max_core_radius() > 0.0; }

 private:
  explicit FieldConfig(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

struct FieldSample {
  Vec3 E;
  Vec3 B;
};

struct FieldJacobians {
  Mat3 dE;
  Mat3 dB;
};

/// Throws SingularityViolation when r is inside the core of a line source.
FieldSample eval_fields(const FieldConfig& config, const Vec3& r);

/// Analytic Jacobians. Throws SingularityViolation, or BoundaryEvaluation within
/// kEdgeTolerance of a uniform block face.
FieldJacobians eval_jacobians(const FieldConfig& config, const Vec3& r);

/// Central differences with step h. Independent of eval_jacobians; used to check it.
FieldJacobians finite_difference_jacobians(const FieldConfig& config, const Vec3& r, double h);

/// Field of a unit-form line source: k (x, y, 0) / rho^2.
inline Vec3 line_field(double k, const Vec3& r) {
  const double inv = 1.0 / (r.x * r.x + r.y * r.y);
  return {k * (r.x * inv), k * (r.y * inv), 0.0};
}

}  // namespace anandan
