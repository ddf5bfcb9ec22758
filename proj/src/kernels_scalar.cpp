#include "anandan/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "overloaded.hpp"

namespace anandan::kernels {

namespace {

void flatten(const FieldConfig& config, FlatField& out) {
  std::visit(anandan::detail::overloaded{
                 [&](const RadialLine& f) {
                   out.has_line = true;
                   out.line_e += f.lambda_e;
                   out.line_b += f.lambda_m;
                   out.core_radius = std::max(out.core_radius, f.core_radius);
                 },
                 [&](const TkachukWire& f) {
                   out.has_line = true;
                   out.line_e += f.lambda;
                   out.line_b += 2.0 * f.lambda_m;
                   out.core_radius = std::max(out.core_radius, f.core_radius);
                 },
                 [&](const UniformBlock& f) {
                   out.blocks.push_back({f.region.lo, f.region.hi, f.E0, f.B0});
                 },
                 [&](const Superposition& f) {
                   for (const auto& m : f.members) flatten(m, out);
                 },
             },
             config.variant());
}

}  // namespace

FlatField FlatField::from(const FieldConfig& config) {
  FlatField out;
  flatten(config, out);
  return out;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return detail::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  static const Backend best = backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  return best;
}

std::size_t connection_integrand(Backend backend, const FlatField& field, const Vec3& d,
                                 const Vec3& mu, const NodeBatch& nodes, std::span<double> hmw,
                                 std::span<double> ac) {
  const std::size_t n = nodes.size();
  if (nodes.py.size() != n || nodes.pz.size() != n || nodes.tx.size() != n ||
      nodes.ty.size() != n || nodes.tz.size() != n || hmw.size() < n || ac.size() < n)
    throw std::invalid_argument("connection_integrand: mismatched batch sizes");
  if (backend == Backend::Avx2 && backend_available(Backend::Avx2))
    return detail::connection_integrand_avx2(field, d, mu, nodes, hmw, ac);
  return detail::connection_integrand_scalar(field, d, mu, nodes, hmw, ac);
}

namespace detail {

std::size_t connection_integrand_scalar(const FlatField& field, const Vec3& d, const Vec3& mu,
                                        const NodeBatch& nodes, std::span<double> hmw,
                                        std::span<double> ac) {
  const double core2 = field.core_radius * field.core_radius;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes.px[i], y = nodes.py[i], z = nodes.pz[i];
    double ex = 0.0, ey = 0.0, ez = 0.0;
    double bx = 0.0, by = 0.0, bz = 0.0;
    if (field.has_line) {
      const double r2 = x * x + y * y;
      if (!(r2 >= core2)) ++bad;
      const double inv = 1.0 / r2;
      const double ux = x * inv, uy = y * inv;
      ex = field.line_e * ux;
      ey = field.line_e * uy;
      bx = field.line_b * ux;
      by = field.line_b * uy;
    }
    for (const FlatBlock& b : field.blocks) {
      const bool inside = x >= b.lo.x && x <= b.hi.x && y >= b.lo.y && y <= b.hi.y &&
                          z >= b.lo.z && z <= b.hi.z;
      ex += inside ? b.E0.x : 0.0;
      ey += inside ? b.E0.y : 0.0;
      ez += inside ? b.E0.z : 0.0;
      bx += inside ? b.B0.x : 0.0;
      by += inside ? b.B0.y : 0.0;
      bz += inside ? b.B0.z : 0.0;
    }
    const double tx = nodes.tx[i], ty = nodes.ty[i], tz = nodes.tz[i];
    hmw[i] = tx * (d.y * bz - d.z * by) + ty * (d.z * bx - d.x * bz) + tz * (d.x * by - d.y * bx);
    ac[i] = -(tx * (mu.y * ez - mu.z * ey) + ty * (mu.z * ex - mu.x * ez) +
              tz * (mu.x * ey - mu.y * ex));
  }
  return bad;
}

}  // namespace detail

}  // namespace anandan::kernels
