#pragma once

// Test-only oracles. These evaluate fields point by point through eval_fields and
// never touch the batched kernels or the adaptive quadrature they are checking.

#include <algorithm>
#include <cmath>
#include <vector>
#include <numbers>

#include "anandan/dynamics.hpp"
#include "anandan/fields.hpp"
#include "anandan/path.hpp"
#include "anandan/random.hpp"

namespace oracle {

using anandan::Vec3;

inline Vec3 pointwise_connection(const anandan::DipoleParticle& p, const anandan::FieldConfig& c,
                       const Vec3& r) {
  const auto f = anandan::eval_fields(c, r);
  // Written out by components rather than through anandan::cross.
  const Vec3 dB{p.d.y * f.B.z - p.d.z * f.B.y, p.d.z * f.B.x - p.d.x * f.B.z,
                p.d.x * f.B.y - p.d.y * f.B.x};
  const Vec3 muE{p.mu.y * f.E.z - p.mu.z * f.E.y, p.mu.z * f.E.x - p.mu.x * f.E.z,
                 p.mu.x * f.E.y - p.mu.y * f.E.x};
  return dB - muE;
}

/// Uniform composite trapezoid of A . dR over a straight segment with n intervals.
inline double trapezoid_segment(const anandan::DipoleParticle& p, const anandan::FieldConfig& c,
                                const Vec3& a, const Vec3& b, std::size_t n) {
  const Vec3 t = b - a;
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * anandan::dot(pointwise_connection(p, c, a + s * t), t);
  }
  return sum / static_cast<double>(n);
}

/// Trapezoid over a closed vertex loop, n_total nodes split by edge length.
inline double trapezoid_loop(const anandan::DipoleParticle& p, const anandan::FieldConfig& c,
                             const std::vector<Vec3>& v, std::size_t n_total) {
  double perimeter = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) perimeter += anandan::norm(v[(i + 1) % v.size()] - v[i]);
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec3 a = v[i], b = v[(i + 1) % v.size()];
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::round(n_total * anandan::norm(b - a) / perimeter)));
    sum += trapezoid_segment(p, c, a, b, n);
  }
  return sum;
}

/// Periodic trapezoid over a circle in the plane normal to z (center c, radius R,
/// counterclockwise, winding n).
inline double trapezoid_circle(const anandan::DipoleParticle& p, const anandan::FieldConfig& c,
                               const Vec3& center, double radius, int winding, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const Vec3 r = center + Vec3{radius * std::cos(t), radius * std::sin(t), 0.0};
    const Vec3 dr{-radius * std::sin(t), radius * std::cos(t), 0.0};
    sum += anandan::dot(pointwise_connection(p, c, r), dr);
  }
  return winding * sum * 2.0 * std::numbers::pi / static_cast<double>(n);
}

/// Central differences of eval_fields, written independently of the library's version.
inline anandan::FieldJacobians central_difference(const anandan::FieldConfig& c, const Vec3& r,
                                                  double h) {
  anandan::FieldJacobians out;
  const Vec3 axes[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
  for (int j = 0; j < 3; ++j) {
    const auto fp = anandan::eval_fields(c, r + axes[j]);
    const auto fm = anandan::eval_fields(c, r - axes[j]);
    for (int i = 0; i < 3; ++i) {
      out.dE(i, j) = (fp.E[i] - fm.E[i]) / (2 * h);
      out.dB(i, j) = (fp.B[i] - fm.B[i]) / (2 * h);
    }
  }
  return out;
}

inline double rel_error(const anandan::Mat3& a, const anandan::Mat3& ref) {
  const double scale = anandan::frobenius_norm(ref);
  const double diff = anandan::frobenius_norm(a - ref);
  return scale > 0.0 ? diff / scale : diff;
}

inline Vec3 random_vec(anandan::Rng& rng, double lo, double hi) {
  const double x = rng.uniform(lo, hi);
  const double y = rng.uniform(lo, hi);
  const double z = rng.uniform(lo, hi);
  return {x, y, z};
}

/// Point with cylindrical radius in [rho_lo, rho_hi] and z in [-z_max, z_max].
inline Vec3 random_safe_point(anandan::Rng& rng, double rho_lo, double rho_hi, double z_max) {
  const double p = rng.uniform(rho_lo, rho_hi);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {p * std::cos(phi), p * std::sin(phi), rng.uniform(-z_max, z_max)};
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace oracle
