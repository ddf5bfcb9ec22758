#include "anandan/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "anandan/errors.hpp"
#include "overloaded.hpp"

namespace anandan {

using detail::overloaded;

namespace {

constexpr double kCloseTolerance = 1e-12;

void require_finite(const std::vector<Vec3>& pts, const char* what) {
  for (const auto& p : pts)
    if (!is_finite(p)) throw InvalidGeometry(std::string(what) + ": non-finite vertex");
}

void require_distinct(const std::vector<Vec3>& pts, const char* what) {
  if (pts.size() < 2) throw InvalidGeometry(std::string(what) + ": needs at least 2 vertices");
  const bool any_distinct = std::any_of(pts.begin() + 1, pts.end(),
                                        [&](const Vec3& p) { return norm(p - pts.front()) > 0.0; });
  if (!any_distinct) throw InvalidGeometry(std::string(what) + ": vertices are not distinct");
}

std::vector<PathPiece> edges(const std::vector<Vec3>& pts, bool closed) {
  std::vector<PathPiece> out;
  auto add = [&](const Vec3& a, const Vec3& b) {
    if (norm(b - a) == 0.0) return;
    PathPiece p;
    p.kind = PathPiece::Kind::Segment;
    p.p0 = a;
    p.p1 = b;
    out.push_back(p);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) add(pts[i], pts[i + 1]);
  if (closed && norm(pts.back() - pts.front()) > kCloseTolerance) add(pts.back(), pts.front());
  return out;
}

void circle_basis(const Circle& c, Vec3& e1, Vec3& e2) {
  const double n_len = norm(c.normal);
  if (!(n_len > 0.0) || !std::isfinite(n_len)) throw InvalidGeometry("circle: zero normal");
  const Vec3 n = c.normal / n_len;
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  e1 = seed - dot(seed, n) * n;
  e1 = e1 / norm(e1);
  e2 = cross(n, e1);
}

double segment_axis_distance(const Vec3& a, const Vec3& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(a.x * dx + a.y * dy) / len2, 0.0, 1.0);
  return std::hypot(a.x + t * dx, a.y + t * dy);
}

}  // namespace

Vec3 PathPiece::point(double t) const {
  if (kind == Kind::Segment) return p0 + t * (p1 - p0);
  return center + radius * (std::cos(t) * e1 + std::sin(t) * e2);
}

Vec3 PathPiece::tangent(double t) const {
  if (kind == Kind::Segment) return p1 - p0;
  return radius * (-std::sin(t) * e1 + std::cos(t) * e2);
}

std::vector<PathPiece> path_pieces(const PathSpec& path) {
  return std::visit(
      overloaded{
          [](const Circle& c) {
            if (!(c.radius > 0.0) || !std::isfinite(c.radius))
              throw InvalidGeometry("circle: radius must be > 0");
            if (c.winding == 0) throw InvalidGeometry("circle: winding must be nonzero");
            if (!is_finite(c.center)) throw InvalidGeometry("circle: non-finite center");
            PathPiece base;
            base.kind = PathPiece::Kind::Arc;
            base.center = c.center;
            base.radius = c.radius;
            circle_basis(c, base.e1, base.e2);
            const int quarters = 4 * std::abs(c.winding);
            const double step = (c.winding > 0 ? 1.0 : -1.0) * std::numbers::pi / 2.0;
            std::vector<PathPiece> out;
            out.reserve(quarters);
            for (int k = 0; k < quarters; ++k) {
              PathPiece p = base;
              p.t0 = k * step;
              p.t1 = (k + 1) * step;
              out.push_back(p);
            }
            return out;
          },
          [](const Polygon& p) {
            require_finite(p.vertices, "polygon");
            require_distinct(p.vertices, "polygon");
            return edges(p.vertices, true);
          },
          [](const Polyline& p) {
            require_finite(p.vertices, "polyline");
            require_distinct(p.vertices, "polyline");
            return edges(p.vertices, false);
          },
          [](const Parametric& p) {
            require_finite(p.samples, "parametric");
            require_distinct(p.samples, "parametric");
            return edges(p.samples, p.closed);
          },
      },
      path);
}

bool is_closed(const PathSpec& path) {
  return std::visit(overloaded{
                        [](const Circle&) { return true; },
                        [](const Polygon&) { return true; },
                        [](const Polyline&) { return false; },
                        [](const Parametric& p) { return p.closed; },
                    },
                    path);
}

Vec3 path_start(const PathSpec& path) { return path_pieces(path).front().start(); }

Vec3 path_end(const PathSpec& path) {
  if (is_closed(path)) return path_start(path);
  return path_pieces(path).back().end();
}

PathSpec reversed(const PathSpec& path) {
  return std::visit(overloaded{
                        [](Circle c) -> PathSpec {
                          c.winding = -c.winding;
                          return c;
                        },
                        [](Polygon p) -> PathSpec {
                          // Keep the start vertex, traverse the other way.
                          std::reverse(p.vertices.begin() + 1, p.vertices.end());
                          return p;
                        },
                        [](Polyline p) -> PathSpec {
                          std::reverse(p.vertices.begin(), p.vertices.end());
                          return p;
                        },
                        [](Parametric p) -> PathSpec {
                          if (p.closed && p.samples.size() > 1)
                            std::reverse(p.samples.begin() + 1, p.samples.end());
                          else
                            std::reverse(p.samples.begin(), p.samples.end());
                          return p;
                        },
                    },
                    path);
}

double min_axis_distance(const PathSpec& path) {
  double best = std::numeric_limits<double>::infinity();
  for (const PathPiece& p : path_pieces(path)) {
    if (p.kind == PathPiece::Kind::Segment) {
      best = std::min(best, segment_axis_distance(p.p0, p.p1));
    } else {
      // Dense sampling; fine enough to reject paths that graze a core.
      constexpr int kSamples = 512;
      for (int i = 0; i <= kSamples; ++i) {
        const double t = p.t0 + (p.t1 - p.t0) * i / kSamples;
        best = std::min(best, rho(p.point(t)));
      }
    }
  }
  return best;
}

Parametric sampled_ellipse(const Vec3& center, double a, double b, std::size_t samples) {
  if (samples < 3) throw InvalidGeometry("ellipse: needs at least 3 samples");
  Parametric out;
  out.closed = true;
  out.samples.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
    out.samples.push_back(center + Vec3{a * std::cos(t), b * std::sin(t), 0.0});
  }
  return out;
}

Polygon square(const Vec3& center, double side) {
  const double h = 0.5 * side;
  return Polygon{{center + Vec3{-h, -h, 0.0}, center + Vec3{h, -h, 0.0}, center + Vec3{h, h, 0.0},
                  center + Vec3{-h, h, 0.0}}};
}

}  // namespace anandan
