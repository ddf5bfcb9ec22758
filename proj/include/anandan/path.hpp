#pragma once

#include <variant>
#include <vector>

#include "anandan/vec3.hpp"

namespace anandan {

/// Analytic circle. Positive winding runs counterclockwise seen from the tip of normal.
struct Circle {
  Vec3 center;
  double radius = 1.0;
  Vec3 normal{0.0, 0.0, 1.0};
  int winding = 1;
};

/// Closed polygon: the closing edge back to the first vertex is implied.
struct Polygon {
  std::vector<Vec3> vertices;
};

/// Open path through the vertices in order.
struct Polyline {
  std::vector<Vec3> vertices;
};

/// Sampled curve, integrated as the polygon through its samples.
struct Parametric {
  std::vector<Vec3> samples;
  bool closed = false;
};

using PathSpec = std::variant<Circle, Polygon, Polyline, Parametric>;

/// One smooth piece of a path, parametrized on [t0, t1].
struct PathPiece {
  enum class Kind { Segment, Arc };
  Kind kind = Kind::Segment;
  // Segment: p0 + t (p1 - p0), t in [0, 1].
  Vec3 p0, p1;
  // Arc: center + radius (cos t e1 + sin t e2).
  Vec3 center, e1, e2;
  double radius = 0.0;
  double t0 = 0.0, t1 = 1.0;

  Vec3 point(double t) const;
  /// dR/dt.
  Vec3 tangent(double t) const;
  Vec3 start() const { return point(t0); }
  Vec3 end() const { return point(t1); }
};

/// Splits a path into smooth pieces (quarter turns for circles, edges otherwise),
/// dropping zero-length edges. Throws InvalidGeometry for degenerate input.
std::vector<PathPiece> path_pieces(const PathSpec& path);

bool is_closed(const PathSpec& path);
Vec3 path_start(const PathSpec& path);
Vec3 path_end(const PathSpec& path);

/// Path with the opposite orientation.
PathSpec reversed(const PathSpec& path);

/// Smallest cylindrical radius (about z) reached anywhere on the path.
double min_axis_distance(const PathSpec& path);

/// Closed polygonal ellipse with semi-axes a (along x) and b (along y) in the plane z = center.z.
Parametric sampled_ellipse(const Vec3& center, double a, double b, std::size_t samples);

/// Axis-aligned closed square of the given side in the plane z = center.z, counterclockwise.
Polygon square(const Vec3& center, double side);

}  // namespace anandan
