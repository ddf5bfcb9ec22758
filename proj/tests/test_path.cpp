#include <doctest.h>

#include <numbers>

#include "anandan/errors.hpp"
#include "anandan/path.hpp"

using namespace anandan;

TEST_CASE("circle pieces are quarter turns oriented by winding") {
  const auto ccw = path_pieces(Circle{{}, 2.0, {0, 0, 1}, 1});
  REQUIRE(ccw.size() == 4);
  CHECK(norm(ccw.front().start() - Vec3{2, 0, 0}) < 1e-15);
  // Counterclockwise from +z: the first quarter heads toward +y.
  CHECK(ccw.front().tangent(0.0).y > 0.0);
  CHECK(norm(ccw.back().end() - ccw.front().start()) < 1e-12);

  const auto cw = path_pieces(Circle{{}, 2.0, {0, 0, 1}, -3});
  CHECK(cw.size() == 12);
  // Parameter runs downward, so the direction of travel is -dR/dt.
  CHECK(cw.front().t1 < cw.front().t0);
  CHECK((cw.front().t1 - cw.front().t0) * cw.front().tangent(0.0).y < 0.0);
}

TEST_CASE("circle basis follows an arbitrary normal") {
  const auto pieces = path_pieces(Circle{{1, 2, 3}, 1.5, {1, 1, 0}, 1});
  const Vec3 n = Vec3{1, 1, 0} / std::sqrt(2.0);
  for (const auto& p : pieces) {
    for (double s : {0.0, 0.3, 0.9}) {
      const double t = p.t0 + s * (p.t1 - p.t0);
      CHECK(std::abs(dot(p.point(t) - Vec3{1, 2, 3}, n)) < 1e-14);
      CHECK(norm(p.point(t) - Vec3{1, 2, 3}) == doctest::Approx(1.5));
      // Tangent direction agrees with n x (r - c).
      CHECK(dot(p.tangent(t), cross(n, p.point(t) - Vec3{1, 2, 3})) > 0.0);
    }
  }
}

TEST_CASE("polygons close themselves and skip repeated vertices") {
  const Polygon sq = square({0, 0, 0}, 2.0);
  const auto pieces = path_pieces(sq);
  CHECK(pieces.size() == 4);
  CHECK(norm(pieces.back().end() - pieces.front().start()) == 0.0);

  Polygon repeated = sq;
  repeated.vertices.push_back(sq.vertices.front());
  CHECK(path_pieces(repeated).size() == 4);

  const auto open = path_pieces(Polyline{{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 1, 0}}});
  CHECK(open.size() == 2);
}

TEST_CASE("degenerate paths are invalid") {
  CHECK_THROWS_AS(path_pieces(Circle{{}, 0.0, {0, 0, 1}, 1}), InvalidGeometry);
  CHECK_THROWS_AS(path_pieces(Circle{{}, 1.0, {0, 0, 1}, 0}), InvalidGeometry);
  CHECK_THROWS_AS(path_pieces(Circle{{}, 1.0, {0, 0, 0}, 1}), InvalidGeometry);
  CHECK_THROWS_AS(path_pieces(Polyline{{{1, 1, 1}}}), InvalidGeometry);
  CHECK_THROWS_AS(path_pieces(Polygon{{{1, 1, 1}, {1, 1, 1}}}), InvalidGeometry);
  CHECK_THROWS_AS(path_pieces(Parametric{{{0, 0, 0}, {NAN, 0, 0}}, false}), InvalidGeometry);
}

TEST_CASE("reversal keeps endpoints and flips orientation") {
  const Polyline line{{{0, 0, 0}, {1, 0, 0}, {1, 2, 0}}};
  const PathSpec back = reversed(line);
  CHECK(path_start(back) == Vec3{1, 2, 0});
  CHECK(path_end(back) == Vec3{0, 0, 0});
  const PathSpec loop = reversed(square({0, 0, 0}, 2.0));
  CHECK(path_start(loop) == path_start(square({0, 0, 0}, 2.0)));
  CHECK(std::get<Circle>(reversed(Circle{{}, 1, {0, 0, 1}, 2})).winding == -2);
}

TEST_CASE("axis clearance") {
  CHECK(min_axis_distance(Circle{{}, 2.0, {0, 0, 1}, 1}) == doctest::Approx(2.0));
  CHECK(min_axis_distance(Polyline{{{-1, 0.5, 0}, {1, 0.5, 7}}}) == doctest::Approx(0.5));
  CHECK(min_axis_distance(square({0, 0, 0}, 3.0)) == doctest::Approx(1.5));
  CHECK(min_axis_distance(Polyline{{{2, 2, 0}, {3, 3, 0}}}) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(min_axis_distance(Circle{{1.0, 0, 0}, 1.5, {0, 0, 1}, 1}) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("sampled ellipse") {
  const Parametric e = sampled_ellipse({0, 0, 1}, 4.0, 2.0, 64);
  CHECK(e.closed);
  CHECK(e.samples.size() == 64);
  CHECK(e.samples[0] == Vec3{4, 0, 1});
  CHECK(e.samples[16].y == doctest::Approx(2.0));
  CHECK_THROWS_AS(sampled_ellipse({}, 1, 1, 2), InvalidGeometry);
}
