#include <doctest.h>

#include "anandan/dynamics.hpp"
#include "anandan/errors.hpp"
#include "anandan/validation.hpp"

using namespace anandan;

namespace {

void check_consistent(const CheckReport& r) {
  CHECK(r.pass == (r.metric <= r.threshold));
  CHECK(r.n_samples >= 1);
}

}  // namespace

TEST_CASE("null force/torque check") {
  SUBCASE("pure Aharonov-Casher and pure HMW configurations pass") {
    const auto ac = check_null_force_torque(FieldConfig::radial_line(1.0, 0.0),
                                            {1.0, {}, {0, 0, 1}}, 1000, 5);
    CHECK(ac.pass);
    CHECK(ac.metric <= 1e-10);
    const auto hmw = check_null_force_torque(FieldConfig::tkachuk_wire(0.0, 1.0),
                                             {1.0, {0, 0, 1}, {}}, 1000, 5);
    CHECK(hmw.pass);
    check_consistent(ac);
    check_consistent(hmw);
    CHECK(ac.n_samples == 1000);
    CHECK(ac.seed == 5);
    CHECK(ac.threshold == 1e-10);
  }
  SUBCASE("combined z-aligned configuration: force vanishes, torque does not") {
    const auto cfg = FieldConfig::radial_line(1.0, 1.0);
    const DipoleParticle p{1.0, {0, 0, 1}, {0, 0, 1}};
    const auto r = check_null_force_torque(cfg, p, 1000, 9);
    check_consistent(r);
    // The comoving-field torque leaves (d lambda_e + mu lambda_m) / rho along e_phi.
    const Vec3 at{2, 0, 0};
    CHECK(norm(force(p, {at, {0.3, -1, 2}, 0}, cfg)) <= 1e-10);
    CHECK(torque(p, {at, {}, 0}, cfg).y == doctest::Approx(1.0));
    CHECK_FALSE(r.pass);
  }
  SUBCASE("tilted dipole feels a force") {
    const auto r = check_null_force_torque(FieldConfig::radial_line(1.0, 1.0), {1.0, {1, 0, 0}, {}}, 200, 1);
    CHECK_FALSE(r.pass);
    // At rho = 1 the force is (d . grad) E = d_x dE/dx, nonzero for lambda_e = 1.
    CHECK(norm(force({1.0, {1, 0, 0}, {}}, {{1, 0, 0}, {}, 0}, FieldConfig::radial_line(1.0, 1.0))) ==
          doctest::Approx(1.0));
  }
  SUBCASE("zero moments pass with metric 0") {
    const auto r = check_null_force_torque(FieldConfig::radial_line(1.0, 1.0), {1.0, {}, {}}, 100, 2);
    CHECK(r.pass);
    CHECK(r.metric == 0.0);
  }
  SUBCASE("not applicable and vacuous cases") {
    const auto block = FieldConfig::uniform_block({1, 0, 0}, {}, Box{{-1, -1, -1}, {1, 1, 1}});
    CHECK_THROWS_AS(check_null_force_torque(block, {}, 10, 1), ConfigNotApplicable);
    CHECK_THROWS_AS(check_null_force_torque(FieldConfig::superposition({FieldConfig::radial_line(1, 1)}), {}, 10, 1),
                    ConfigNotApplicable);
    CHECK_THROWS_AS(check_null_force_torque(FieldConfig::radial_line(1, 1), {}, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("topological invariance check") {
  const auto r = check_topological_invariance(default_check_field(), default_check_particle(), 11);
  check_consistent(r);
  CHECK(r.pass);
  CHECK(r.threshold == 1e-6);
  const auto t = check_topological_invariance(FieldConfig::tkachuk_wire(-0.7, 1.4, 0.5),
                                              {1.0, {0.2, 0.1, 1}, {0, 0.3, 0.8}}, 3);
  CHECK(t.pass);
  CHECK_THROWS_AS(check_topological_invariance(
                      FieldConfig::uniform_block({}, {}, Box{{0, 0, 0}, {1, 1, 1}}), {}, 1),
                  ConfigNotApplicable);
}

TEST_CASE("closed form check") {
  const auto r = check_closed_forms(21);
  check_consistent(r);
  CHECK(r.pass);
  CHECK(r.n_samples == 150);
}

TEST_CASE("duality check") {
  const auto r = check_duality(8);
  check_consistent(r);
  CHECK(r.pass);
  CHECK(r.metric <= 1e-14);
  CHECK(r.n_samples == 100);
}

TEST_CASE("checks are deterministic") {
  const auto a = run_suite("all", default_check_field(), default_check_particle(), 42);
  const auto b = run_suite("all", default_check_field(), default_check_particle(), 42);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].metric == b[i].metric);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].seed == 42);
    check_consistent(a[i]);
  }
}

TEST_CASE("suite selection") {
  CHECK(run_suite("duality", default_check_field(), default_check_particle(), 1).size() == 1);
  CHECK(run_suite("closed_forms", default_check_field(), default_check_particle(), 1)[0].name ==
        "closed_forms");
  CHECK_THROWS_AS(run_suite("bogus", default_check_field(), default_check_particle(), 1),
                  std::invalid_argument);
}
