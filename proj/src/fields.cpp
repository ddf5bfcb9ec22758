#include "anandan/fields.hpp"

#include <algorithm>
#include <sstream>

#include "anandan/errors.hpp"
#include "overloaded.hpp"

namespace anandan {

namespace {

using detail::overloaded;

void require_outside_core(const Vec3& r, double core_radius) {
  const double p = rho(r);
  if (!(p >= core_radius)) {
    std::ostringstream os;
    os << "point (" << r.x << ", " << r.y << ", " << r.z << ") at rho=" << p
       << " is inside the core radius " << core_radius;
    throw SingularityViolation(os.str());
  }
}

Mat3 line_jacobian(double k, const Vec3& r) {
  const double r2 = r.x * r.x + r.y * r.y;
  const double inv4 = 1.0 / (r2 * r2);
  Mat3 j;
  j(0, 0) = k * (r.y * r.y - r.x * r.x) * inv4;
  j(0, 1) = -2.0 * k * r.x * r.y * inv4;
  j(1, 0) = j(0, 1);
  j(1, 1) = -j(0, 0);
  return j;
}

double line_coefficient_e(const RadialLine& f) { return f.lambda_e; }
double line_coefficient_b(const RadialLine& f) { return f.lambda_m; }
double line_coefficient_e(const TkachukWire& f) { return f.lambda; }
double line_coefficient_b(const TkachukWire& f) { return 2.0 * f.lambda_m; }

}  // namespace

double Box::distance_to_surface(const Vec3& r) const {
  if (contains(r)) {
    double d = r.x - lo.x;
    d = std::min({d, hi.x - r.x, r.y - lo.y, hi.y - r.y, r.z - lo.z, hi.z - r.z});
    return d;
  }
  const double dx = std::max({lo.x - r.x, 0.0, r.x - hi.x});
  const double dy = std::max({lo.y - r.y, 0.0, r.y - hi.y});
  const double dz = std::max({lo.z - r.z, 0.0, r.z - hi.z});
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

FieldConfig FieldConfig::radial_line(double lambda_e, double lambda_m, double core_radius) {
  return from(RadialLine{lambda_e, lambda_m, core_radius});
}

FieldConfig FieldConfig::tkachuk_wire(double lambda, double lambda_m, double core_radius) {
  return from(TkachukWire{lambda, lambda_m, core_radius});
}

FieldConfig FieldConfig::uniform_block(const Vec3& E0, const Vec3& B0, const Box& region) {
  return from(UniformBlock{E0, B0, region});
}

FieldConfig FieldConfig::superposition(std::vector<FieldConfig> members) {
  return from(Superposition{std::move(members)});
}

FieldConfig FieldConfig::from(Variant v) {
  std::visit(overloaded{
                 [](const RadialLine& f) {
                   if (!std::isfinite(f.lambda_e) || !std::isfinite(f.lambda_m))
                     throw std::invalid_argument("radial_line: non-finite line density");
                   if (!(f.core_radius > 0.0) || !std::isfinite(f.core_radius))
                     throw std::invalid_argument("radial_line: core_radius must be > 0");
                 },
                 [](const TkachukWire& f) {
                   if (!std::isfinite(f.lambda) || !std::isfinite(f.lambda_m))
                     throw std::invalid_argument("tkachuk_wire: non-finite line density");
                   if (!(f.core_radius > 0.0) || !std::isfinite(f.core_radius))
                     throw std::invalid_argument("tkachuk_wire: core_radius must be > 0");
                 },
                 [](const UniformBlock& f) {
                   if (!is_finite(f.E0) || !is_finite(f.B0) || !is_finite(f.region.lo) ||
                       !is_finite(f.region.hi))
                     throw std::invalid_argument("uniform_block: non-finite component");
                   for (int i = 0; i < 3; ++i)
                     if (!(f.region.hi[i] > f.region.lo[i]))
                       throw std::invalid_argument(
                           "uniform_block: region must have positive extent on every axis");
                 },
                 [](const Superposition& f) {
                   if (f.members.empty())
                     throw std::invalid_argument("superposition: needs at least one member");
                 },
             },
             v);
  return FieldConfig(std::move(v));
}

double FieldConfig::max_core_radius() const {
  return std::visit(overloaded{
                        [](const RadialLine& f) { return f.core_radius; },
                        [](const TkachukWire& f) { return f.core_radius; },
                        [](const UniformBlock&) { return 0.0; },
                        [](const Superposition& f) {
                          double c = 0.0;
                          for (const auto& m : f.members) c = std::max(c, m.max_core_radius());
                          return c;
                        },
                    },
                    v_);
}

FieldSample eval_fields(const FieldConfig& config, const Vec3& r) {
  return std::visit(
      overloaded{
          [&](const Superposition& f) {
            FieldSample sum;
            for (const auto& m : f.members) {
              const FieldSample s = eval_fields(m, r);
              sum.E += s.E;
              sum.B += s.B;
            }
            return sum;
          },
          [&](const UniformBlock& f) {
            if (f.region.contains(r)) return FieldSample{f.E0, f.B0};
            return FieldSample{};
          },
          [&](const auto& line) {
            require_outside_core(r, line.core_radius);
            return FieldSample{line_field(line_coefficient_e(line), r),
                               line_field(line_coefficient_b(line), r)};
          },
      },
      config.variant());
}

FieldJacobians eval_jacobians(const FieldConfig& config, const Vec3& r) {
  return std::visit(
      overloaded{
          [&](const Superposition& f) {
            FieldJacobians sum;
            for (const auto& m : f.members) {
              const FieldJacobians j = eval_jacobians(m, r);
              sum.dE += j.dE;
              sum.dB += j.dB;
            }
            return sum;
          },
          [&](const UniformBlock& f) {
            if (f.region.distance_to_surface(r) < kEdgeTolerance) {
              std::ostringstream os;
              os << "jacobian requested at (" << r.x << ", " << r.y << ", " << r.z
                 << "), within " << kEdgeTolerance << " of a uniform block face";
              throw BoundaryEvaluation(os.str());
            }
            return FieldJacobians{};
          },
          [&](const auto& line) {
            require_outside_core(r, line.core_radius);
            return FieldJacobians{line_jacobian(line_coefficient_e(line), r),
                                  line_jacobian(line_coefficient_b(line), r)};
          },
      },
      config.variant());
}

FieldJacobians finite_difference_jacobians(const FieldConfig& config, const Vec3& r, double h) {
  FieldJacobians out;
  for (int j = 0; j < 3; ++j) {
    Vec3 step;
    step[j] = h;
    const FieldSample plus = eval_fields(config, r + step);
    const FieldSample minus = eval_fields(config, r - step);
    const Vec3 dE = (plus.E - minus.E) / (2.0 * h);
    const Vec3 dB = (plus.B - minus.B) / (2.0 * h);
    for (int i = 0; i < 3; ++i) {
      out.dE(i, j) = dE[i];
      out.dB(i, j) = dB[i];
    }
  }
  return out;
}

}  // namespace anandan
