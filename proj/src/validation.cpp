#include "anandan/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anandan/errors.hpp"
#include "anandan/holonomy.hpp"
#include "anandan/interferometer.hpp"
#include "anandan/random.hpp"

namespace anandan {

namespace {

constexpr double kNullThreshold = 1e-10;
constexpr double kTopologyThreshold = 1e-6;
constexpr double kNonEncirclingThreshold = 1e-8;
constexpr double kAntisymmetryThreshold = 1e-10;
constexpr double kLineClosedFormThreshold = 1e-8;
constexpr double kCasellaThreshold = 1e-10;
constexpr double kDualityThreshold = 1e-14;

CheckReport make_report(std::string name, double metric, double threshold, std::size_t n,
                        std::uint64_t seed) {
  return CheckReport{std::move(name), metric <= threshold, metric, threshold, n, seed};
}

bool is_single_line(const FieldConfig& c) {
  return std::holds_alternative<RadialLine>(c.variant()) ||
         std::holds_alternative<TkachukWire>(c.variant());
}

Vec3 random_vec(Rng& rng, double lo, double hi) {
  const double x = rng.uniform(lo, hi);
  const double y = rng.uniform(lo, hi);
  const double z = rng.uniform(lo, hi);
  return {x, y, z};
}

int random_winding(Rng& rng) {
  static constexpr int kChoices[] = {1, -1, 2, -2};
  return kChoices[rng.below(4)];
}

}  // namespace

CheckReport check_null_force_torque(const FieldConfig& config, const DipoleParticle& particle,
                                    std::size_t n_samples, std::uint64_t seed) {
  if (!is_single_line(config))
    throw ConfigNotApplicable("null force/torque check needs a radial_line or tkachuk_wire field");
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  particle.validate();

  Rng rng(seed);
  const double rho_lo = std::max(0.1, 10.0 * config.max_core_radius());
  const double rho_hi = rho_lo + 10.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double p = rng.uniform(rho_lo, rho_hi);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Vec3 r{p * std::cos(phi), p * std::sin(phi), 0.0};
    const Vec3 v = random_vec(rng, -5.0, 5.0);
    worst = std::max(worst, norm(force(particle, {r, v, 0.0}, config)));
    worst = std::max(worst, norm(torque(particle, {r, {}, 0.0}, config)));
  }
  return make_report("null_force_torque", worst, kNullThreshold, n_samples, seed);
}

CheckReport check_topological_invariance(const FieldConfig& config,
                                         const DipoleParticle& particle, std::uint64_t seed) {
  if (!config.has_line_source())
    throw ConfigNotApplicable("topological invariance check needs a line-source field");
  particle.validate();

  Rng rng(seed);
  const double s = std::max(1.0, 10.0 * config.max_core_radius());
  // Small random offsets keep every loop around the axis while breaking symmetry.
  auto offset = [&] {
    const double x = rng.uniform(-0.2, 0.2) * s;
    const double y = rng.uniform(-0.2, 0.2) * s;
    return Vec3{x, y, 0.0};
  };

  const std::vector<PathSpec> encircling = {
      Circle{offset(), 1.0 * s, {0.0, 0.0, 1.0}, 1},
      Circle{offset(), 5.0 * s, {0.0, 0.0, 1.0}, 1},
      square(offset(), 3.0 * s),
      sampled_ellipse(offset(), 4.0 * s, 2.0 * s, 1024),
  };
  std::vector<double> gammas;
  for (const auto& path : encircling)
    gammas.push_back(phase_line_integral(particle, config, path).gamma_total);

  double spread = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      spread = std::max(spread, std::abs(gammas[i] - gammas[j]));

  const double outside =
      std::abs(phase_line_integral(particle, config, square({6.0 * s, 0.0, 0.0}, 2.0 * s))
                   .gamma_total);

  const Circle ccw{{}, 2.0 * s, {0.0, 0.0, 1.0}, 1};
  const Circle cw{{}, 2.0 * s, {0.0, 0.0, 1.0}, -1};
  const double antisym = std::abs(phase_line_integral(particle, config, ccw).gamma_total +
                                  phase_line_integral(particle, config, cw).gamma_total);

  // Sub-checks with tighter limits are rescaled onto the shape-invariance threshold.
  const double metric = std::max({spread, outside * (kTopologyThreshold / kNonEncirclingThreshold),
                                  antisym * (kTopologyThreshold / kAntisymmetryThreshold)});
  return make_report("topological_invariance", metric, kTopologyThreshold, encircling.size() + 3,
                     seed);
}

CheckReport check_closed_forms(std::uint64_t seed) {
  constexpr std::size_t kTuples = 50;
  Rng rng(seed);
  double worst = 0.0;
  std::size_t n = 0;

  for (int kind = 0; kind < 2; ++kind) {
    for (std::size_t i = 0; i < kTuples; ++i) {
      // The first tuple of each kind is all zero.
      const bool zero = i == 0;
      const double le = zero ? 0.0 : rng.uniform(0.1, 5.0);
      const double lm = zero ? 0.0 : rng.uniform(0.1, 5.0);
      const double d = zero ? 0.0 : rng.uniform(0.1, 5.0);
      const double mu = zero ? 0.0 : rng.uniform(0.1, 5.0);
      const double radius = rng.uniform(0.5, 10.0);
      const int n_wind = random_winding(rng);

      const DipoleParticle particle{1.0, {0.0, 0.0, d}, {0.0, 0.0, mu}};
      const Circle loop{{}, radius, {0.0, 0.0, 1.0}, n_wind};
      double expected = 0.0;
      double got = 0.0;
      if (kind == 0) {
        expected = closed_form_phase(RadialPhaseParams{mu, le, d, lm, n_wind});
        got = phase_line_integral(particle, FieldConfig::radial_line(le, lm), loop).gamma_total;
      } else {
        expected = closed_form_phase(TkachukPhaseParams{mu, le, d, lm, n_wind});
        got = phase_line_integral(particle, FieldConfig::tkachuk_wire(le, lm), loop).gamma_total;
      }
      worst = std::max(worst, std::abs(std::abs(got) - std::abs(expected)));
      ++n;
    }
  }

  double worst_casella = 0.0;
  for (std::size_t i = 0; i < kTuples; ++i) {
    CasellaParams p;
    p.d = rng.uniform(0.1, 5.0);
    p.B0 = rng.uniform(0.1, 5.0);
    p.mu = rng.uniform(0.1, 5.0);
    p.E0 = rng.uniform(0.1, 5.0);
    p.a = rng.uniform(0.1, 5.0);
    const double expected = closed_form_phase(CasellaPhaseParams{p.d, p.B0, p.mu, p.E0, p.a});
    const double got = phase_difference(build_casella(p)).delta_gamma;
    worst_casella = std::max(worst_casella, std::abs(std::abs(got) - std::abs(expected)));
    ++n;
  }

  const double metric =
      std::max(worst, worst_casella * (kLineClosedFormThreshold / kCasellaThreshold));
  return make_report("closed_forms", metric, kLineClosedFormThreshold, n, seed);
}

CheckReport check_duality(std::uint64_t seed) {
  constexpr std::size_t kPoints = 100;
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < kPoints; ++i) {
    const double l1 = rng.uniform(-5.0, 5.0);
    const double l2 = rng.uniform(-5.0, 5.0);
    const Box box{{-2.0, -2.0, -2.0}, {2.0, 2.0, 2.0}};
    const Vec3 e0 = random_vec(rng, -5.0, 5.0);
    const Vec3 b0 = random_vec(rng, -5.0, 5.0);
    FieldConfig config = FieldConfig::radial_line(l1, l2);
    switch (i % 4) {
      case 1:
        config = FieldConfig::tkachuk_wire(l1, l2);
        break;
      case 2:
        config = FieldConfig::uniform_block(e0, b0, box);
        break;
      case 3:
        config = FieldConfig::superposition({FieldConfig::radial_line(l1, l2),
                                             FieldConfig::uniform_block(e0, b0, box),
                                             FieldConfig::tkachuk_wire(l2, l1)});
        break;
      default:
        break;
    }
    const DipoleParticle particle{1.0, random_vec(rng, -5.0, 5.0), random_vec(rng, -5.0, 5.0)};
    const double p = rng.uniform(0.1, 3.0);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Vec3 r{p * std::cos(phi), p * std::sin(phi), rng.uniform(-3.0, 3.0)};

    const auto [dual_particle, dual_config] = duality_transform(particle, config);
    const Vec3 before = connection(particle, config, r);
    const Vec3 after = connection(dual_particle, dual_config, r);
    worst = std::max(worst, norm(after - before));
  }
  return make_report("duality", worst, kDualityThreshold, kPoints, seed);
}

// lambda_m / lambda_e != mu / d, so the connection does not vanish identically.
FieldConfig default_check_field() { return FieldConfig::radial_line(1.0, 2.0); }

DipoleParticle default_check_particle() {
  return DipoleParticle{1.0, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.5}};
}

std::vector<CheckReport> run_suite(const std::string& suite, const FieldConfig& config,
                                   const DipoleParticle& particle, std::uint64_t seed) {
  constexpr std::size_t kNullSamples = 1000;
  std::vector<CheckReport> out;
  const bool all = suite == "all";
  bool matched = all;
  if (all || suite == "null_force") {
    out.push_back(check_null_force_torque(config, particle, kNullSamples, seed));
    matched = true;
  }
  if (all || suite == "topological") {
    out.push_back(check_topological_invariance(config, particle, seed));
    matched = true;
  }
  if (all || suite == "closed_forms") {
    out.push_back(check_closed_forms(seed));
    matched = true;
  }
  if (all || suite == "duality") {
    out.push_back(check_duality(seed));
    matched = true;
  }
  if (!matched) throw std::invalid_argument("unknown check suite '" + suite + "'");
  return out;
}

}  // namespace anandan
