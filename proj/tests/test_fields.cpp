#include <doctest.h>

#include <numbers>

#include "anandan/errors.hpp"
#include "anandan/fields.hpp"
#include "test_support.hpp"

using namespace anandan;

namespace {

void check_vec(const Vec3& got, const Vec3& want, double tol = 1e-15) {
  CHECK(got.x == doctest::Approx(want.x).epsilon(tol).scale(1.0));
  CHECK(got.y == doctest::Approx(want.y).epsilon(tol).scale(1.0));
  CHECK(got.z == doctest::Approx(want.z).epsilon(tol).scale(1.0));
}

const Box kUnitBox{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};

}  // namespace

TEST_CASE("radial line fields fall off as 1/rho") {
  const auto f = eval_fields(FieldConfig::radial_line(0.0, 1.0, 0.01), {2.0, 0.0, 0.0});
  check_vec(f.E, {0.0, 0.0, 0.0});
  check_vec(f.B, {0.5, 0.0, 0.0});
}

TEST_CASE("tkachuk wire magnetic field carries the factor two") {
  const auto f = eval_fields(FieldConfig::tkachuk_wire(0.0, 1.0, 0.01), {4.0, 0.0, 0.0});
  check_vec(f.B, {0.5, 0.0, 0.0});
  check_vec(f.E, {0.0, 0.0, 0.0});
}

TEST_CASE("uniform block is constant inside and zero outside") {
  const auto cfg = FieldConfig::uniform_block({1.0, 0.0, 0.0}, {0.0, 0.0, 2.0}, kUnitBox);
  const auto in = eval_fields(cfg, {0.1, -0.3, 0.5});
  CHECK(in.E == Vec3{1.0, 0.0, 0.0});
  CHECK(in.B == Vec3{0.0, 0.0, 2.0});
  const auto out = eval_fields(cfg, {1.5, 0.0, 0.0});
  CHECK(out.E == Vec3{});
  CHECK(out.B == Vec3{});
}

TEST_CASE("superposition of two identical lines doubles the field") {
  const auto line = FieldConfig::radial_line(1.0, 0.0);
  const auto f = eval_fields(FieldConfig::superposition({line, line}), {1.0, 0.0, 0.0});
  CHECK(f.E == Vec3{2.0, 0.0, 0.0});
}

TEST_CASE("line sources reject points inside the core") {
  const auto cfg = FieldConfig::radial_line(1.0, 1.0, 0.1);
  CHECK_THROWS_AS(eval_fields(cfg, {0.05, 0.0, 3.0}), SingularityViolation);
  CHECK_THROWS_AS(eval_jacobians(cfg, {0.0, 0.0, 0.0}), SingularityViolation);
  CHECK_NOTHROW(eval_fields(cfg, {0.1, 0.0, 0.0}));
  const auto sum = FieldConfig::superposition({FieldConfig::tkachuk_wire(1.0, 1.0, 0.5), cfg});
  CHECK(sum.max_core_radius() == 0.5);
  CHECK_THROWS_AS(eval_fields(sum, {0.3, 0.0, 0.0}), SingularityViolation);
  // The finite-difference stencil reaching into the core is also an error.
  CHECK_THROWS_AS(finite_difference_jacobians(cfg, {0.1 + 1e-6, 0.0, 0.0}, 1e-5),
                  SingularityViolation);
}

TEST_CASE("factories enforce variant invariants") {
  CHECK_THROWS_AS(FieldConfig::radial_line(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig::tkachuk_wire(1.0, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig::uniform_block({}, {}, Box{{0, 0, 0}, {1, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig::superposition({}), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig::radial_line(NAN, 1.0), std::invalid_argument);
}

TEST_CASE("analytic jacobians of a radial line") {
  // d/dx of lambda (x, y) / (x^2 + y^2) at (1, 0): diag(-1, +1) for lambda = 1.
  const auto cfg = FieldConfig::radial_line(1.0, 0.0, 0.01);
  const auto j = eval_jacobians(cfg, {1.0, 0.0, 0.0});
  CHECK(j.dE(0, 0) == doctest::Approx(-1.0));
  CHECK(j.dE(1, 1) == doctest::Approx(1.0));
  CHECK(j.dE(0, 1) == 0.0);
  CHECK(j.dE(1, 0) == 0.0);
  CHECK(j.dB == Mat3::zero());

  const auto at_y = eval_jacobians(FieldConfig::radial_line(3.0, 0.0), {0.0, 2.0, 0.0});
  CHECK(at_y.dE(1, 1) == doctest::Approx(-3.0 / 4.0));

  // Cross-check against the test-side central difference, h = 1e-5.
  for (const Vec3 r : {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 2.0, 0.0}, Vec3{-0.7, 1.3, 4.0}}) {
    const auto a = eval_jacobians(cfg, r);
    const auto fd = oracle::central_difference(cfg, r, 1e-5);
    CHECK(oracle::rel_error(fd.dE, a.dE) < 1e-8);
  }
}

TEST_CASE("uniform block jacobians") {
  const auto cfg = FieldConfig::uniform_block({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}, kUnitBox);
  const auto j = eval_jacobians(cfg, {0.2, 0.3, -0.4});
  CHECK(j.dE == Mat3::zero());
  CHECK(j.dB == Mat3::zero());
  const auto fd = finite_difference_jacobians(cfg, {0.2, 0.3, -0.4}, 1e-5);
  CHECK(frobenius_norm(fd.dE) <= 1e-12);
  CHECK(frobenius_norm(fd.dB) <= 1e-12);

  SUBCASE("faces are rejected within the edge tolerance") {
    CHECK_THROWS_AS(eval_jacobians(cfg, {1.0, 0.0, 0.0}), BoundaryEvaluation);
    CHECK_THROWS_AS(eval_jacobians(cfg, {0.0, -1.0 + 5e-10, 0.0}), BoundaryEvaluation);
    CHECK_THROWS_AS(eval_jacobians(cfg, {0.0, 0.0, 1.0 + 5e-10}), BoundaryEvaluation);
    CHECK_NOTHROW(eval_jacobians(cfg, {0.0, 0.0, 1.0 + 1e-6}));
    CHECK_NOTHROW(eval_jacobians(cfg, {5.0, 5.0, 5.0}));
  }
}

TEST_CASE("superposition is linear in fields and jacobians") {
  anandan::Rng rng(7);
  const auto a = FieldConfig::radial_line(1.3, -0.4);
  const auto b = FieldConfig::superposition(
      {FieldConfig::tkachuk_wire(-2.0, 0.7), FieldConfig::uniform_block({1, 2, 3}, {-1, 0, 2}, kUnitBox)});
  const auto sum = FieldConfig::superposition({a, b});
  for (int i = 0; i < 100; ++i) {
    const Vec3 r = oracle::random_safe_point(rng, 0.05, 3.0, 2.0);
    const auto fs = eval_fields(sum, r);
    const auto fa = eval_fields(a, r);
    const auto fb = eval_fields(b, r);
    CHECK(oracle::max_abs_diff(fs.E, fa.E + fb.E) <= 1e-15 * (1.0 + norm(fs.E)));
    CHECK(oracle::max_abs_diff(fs.B, fa.B + fb.B) <= 1e-15 * (1.0 + norm(fs.B)));

    if (kUnitBox.distance_to_surface(r) < 1e-3) continue;
    const auto js = eval_jacobians(sum, r);
    const auto ja = eval_jacobians(a, r);
    const auto jb = eval_jacobians(b, r);
    CHECK(frobenius_norm(js.dE - (ja.dE + jb.dE)) <= 1e-12 * (1.0 + frobenius_norm(js.dE)));
    CHECK(frobenius_norm(js.dB - (ja.dB + jb.dB)) <= 1e-12 * (1.0 + frobenius_norm(js.dB)));

    // Difference quotients carry rounding of order eps |f| / h on top of that.
    const double h = 1e-5;
    const auto fs_ = finite_difference_jacobians(sum, r, h);
    const auto fa_ = finite_difference_jacobians(a, r, h);
    const auto fb_ = finite_difference_jacobians(b, r, h);
    const double floor_e = 8.0 * 2.2e-16 * (1.0 + norm(fs.E)) / h;
    const double floor_b = 8.0 * 2.2e-16 * (1.0 + norm(fs.B)) / h;
    CHECK(frobenius_norm(fs_.dE - (fa_.dE + fb_.dE)) <= floor_e);
    CHECK(frobenius_norm(fs_.dB - (fa_.dB + fb_.dB)) <= floor_b);
  }
}

TEST_CASE("line fields are rotationally symmetric about z") {
  anandan::Rng rng(11);
  for (const auto& cfg : {FieldConfig::radial_line(1.7, -0.6), FieldConfig::tkachuk_wire(0.4, 2.2)}) {
    const Vec3 r0{1.5, 0.0, 0.3};
    const auto f0 = eval_fields(cfg, r0);
    for (int i = 0; i < 100; ++i) {
      const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double c = std::cos(th), s = std::sin(th);
      auto rot = [&](const Vec3& v) { return Vec3{c * v.x - s * v.y, s * v.x + c * v.y, v.z}; };
      const auto f = eval_fields(cfg, rot(r0));
      CHECK(oracle::max_abs_diff(f.E, rot(f0.E)) <= 1e-12);
      CHECK(oracle::max_abs_diff(f.B, rot(f0.B)) <= 1e-12);
      CHECK(norm(f.E) == doctest::Approx(norm(f0.E)).epsilon(1e-12));
    }
  }
}

TEST_CASE("line fields at twice the radius are exactly half") {
  anandan::Rng rng(3);
  for (const auto& cfg : {FieldConfig::radial_line(0.9, 1.1), FieldConfig::tkachuk_wire(-1.2, 3.1)}) {
    for (int i = 0; i < 100; ++i) {
      const Vec3 r = oracle::random_safe_point(rng, 0.01, 10.0, 5.0);
      const Vec3 r2{2.0 * r.x, 2.0 * r.y, r.z};
      const auto f1 = eval_fields(cfg, r);
      const auto f2 = eval_fields(cfg, r2);
      CHECK(f2.E == 0.5 * f1.E);
      CHECK(f2.B == 0.5 * f1.B);
    }
  }
}

TEST_CASE("analytic and finite-difference jacobians agree at random safe points") {
  anandan::Rng rng(2024);
  const std::vector<FieldConfig> configs = {
      FieldConfig::radial_line(1.0, -2.0), FieldConfig::tkachuk_wire(0.5, 1.5),
      FieldConfig::uniform_block({1, -1, 2}, {0.5, 0.5, -3}, kUnitBox),
      FieldConfig::superposition({FieldConfig::radial_line(2.0, 0.3),
                                  FieldConfig::tkachuk_wire(-1.0, 0.8)})};
  for (const auto& cfg : configs) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Vec3 r = oracle::random_safe_point(rng, 0.05, 10.0, 3.0);
      if (std::holds_alternative<UniformBlock>(cfg.variant()))
        r = oracle::random_vec(rng, -0.99, 0.99);
      const auto a = eval_jacobians(cfg, r);
      const auto fd = finite_difference_jacobians(cfg, r, 1e-5);
      worst = std::max({worst, oracle::rel_error(fd.dE, a.dE), oracle::rel_error(fd.dB, a.dB)});
    }
    CHECK(worst <= 1e-6);
  }
}
