#include "anandan/holonomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "anandan/errors.hpp"
#include "overloaded.hpp"

namespace anandan {

using detail::overloaded;

namespace {

// 8-point Gauss-Legendre on [-1, 1], symmetric ordering.
constexpr std::array<double, 8> kNodes = {
    -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
    -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr std::array<double, 8> kWeights = {
    0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
    0.3626837833783619829651504, 0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

struct Estimate {
  double hmw = 0.0;
  double ac = 0.0;
  double total() const { return hmw + ac; }
};

class PieceIntegrator {
 public:
  PieceIntegrator(const DipoleParticle& particle, const FieldConfig& config,
                  const QuadratureOptions& options)
      : d_(particle.d),
        mu_(particle.mu),
        field_(kernels::FlatField::from(config)),
        options_(options),
        backend_(options.backend.value_or(kernels::best_backend())) {}

  Estimate integrate(const PathPiece& piece) {
    piece_ = &piece;
    std::array<Estimate, 2> whole;
    gauss(piece.t0, piece.t1, piece.t0, piece.t0, whole, 1);
    return refine(piece.t0, piece.t1, whole[0], 0);
  }

  double error() const { return error_; }
  std::size_t evals() const { return evals_; }

 private:
  Estimate refine(double a, double b, const Estimate& whole, int depth) {
    const double m = 0.5 * (a + b);
    std::array<Estimate, 2> halves;
    gauss(a, m, m, b, halves, 2);
    const Estimate sum{halves[0].hmw + halves[1].hmw, halves[0].ac + halves[1].ac};
    const double change = std::abs(sum.total() - whole.total());
    if (change < options_.tol) {
      error_ += change;
      return sum;
    }
    if (depth + 1 >= options_.max_depth) {
      std::ostringstream os;
      os << "quadrature did not reach tolerance " << options_.tol << " within "
         << options_.max_depth << " bisections (last change " << change << ")";
      throw QuadratureNonConvergence(os.str());
    }
    const Estimate left = refine(a, m, halves[0], depth + 1);
    const Estimate right = refine(m, b, halves[1], depth + 1);
    return {left.hmw + right.hmw, left.ac + right.ac};
  }

  // Gauss rule on `count` intervals [a0, b0], [a1, b1] evaluated in one kernel batch.
  void gauss(double a0, double b0, double a1, double b1, std::array<Estimate, 2>& out,
             int count) {
    const std::array<std::array<double, 2>, 2> iv = {{{a0, b0}, {a1, b1}}};
    const std::size_t n = static_cast<std::size_t>(count) * kNodes.size();
    for (int k = 0; k < count; ++k) {
      const double mid = 0.5 * (iv[k][0] + iv[k][1]);
      const double half = 0.5 * (iv[k][1] - iv[k][0]);
      for (std::size_t i = 0; i < kNodes.size(); ++i) {
        const double t = mid + half * kNodes[i];
        const Vec3 p = piece_->point(t);
        const Vec3 tan = piece_->tangent(t);
        const std::size_t j = k * kNodes.size() + i;
        px_[j] = p.x;
        py_[j] = p.y;
        pz_[j] = p.z;
        tx_[j] = tan.x;
        ty_[j] = tan.y;
        tz_[j] = tan.z;
      }
    }
    const kernels::NodeBatch batch{
        std::span<const double>(px_.data(), n), std::span<const double>(py_.data(), n),
        std::span<const double>(pz_.data(), n), std::span<const double>(tx_.data(), n),
        std::span<const double>(ty_.data(), n), std::span<const double>(tz_.data(), n)};
    const std::size_t bad = kernels::connection_integrand(backend_, field_, d_, mu_, batch,
                                                          std::span<double>(hmw_.data(), n),
                                                          std::span<double>(ac_.data(), n));
    evals_ += n;
    if (bad != 0) {
      std::ostringstream os;
      os << "path enters the line-source core (radius " << field_.core_radius << ")";
      throw SingularityViolation(os.str());
    }
    for (int k = 0; k < count; ++k) {
      const double half = 0.5 * (iv[k][1] - iv[k][0]);
      Estimate e;
      for (std::size_t i = 0; i < kNodes.size(); ++i) {
        const std::size_t j = k * kNodes.size() + i;
        e.hmw += kWeights[i] * hmw_[j];
        e.ac += kWeights[i] * ac_[j];
      }
      e.hmw *= half;
      e.ac *= half;
      out[k] = e;
    }
  }

  Vec3 d_, mu_;
  kernels::FlatField field_;
  QuadratureOptions options_;
  kernels::Backend backend_;
  const PathPiece* piece_ = nullptr;
  double error_ = 0.0;
  std::size_t evals_ = 0;
  std::array<double, 16> px_{}, py_{}, pz_{}, tx_{}, ty_{}, tz_{}, hmw_{}, ac_{};
};

// Face-plane crossings of `piece` strictly inside its parameter range.
void face_crossings(const PathPiece& piece, int axis, double plane, std::vector<double>& cuts) {
  const double lo = std::min(piece.t0, piece.t1);
  const double hi = std::max(piece.t0, piece.t1);
  if (piece.kind == PathPiece::Kind::Segment) {
    const double step = piece.p1[axis] - piece.p0[axis];
    if (step == 0.0) return;
    const double t = (plane - piece.p0[axis]) / step;
    if (t > lo && t < hi) cuts.push_back(t);
    return;
  }
  // radius (a cos t + b sin t) = plane - center
  const double a = piece.radius * piece.e1[axis];
  const double b = piece.radius * piece.e2[axis];
  const double amp = std::hypot(a, b);
  const double rhs = plane - piece.center[axis];
  if (amp == 0.0 || std::abs(rhs) >= amp) return;
  const double phi = std::atan2(b, a);
  const double spread = std::acos(rhs / amp);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (double root : {phi + spread, phi - spread}) {
    double t = root + kTwoPi * std::ceil((lo - root) / kTwoPi);
    for (; t < hi; t += kTwoPi)
      if (t > lo) cuts.push_back(t);
  }
}

// Pieces are cut where they cross a face plane of any uniform block, so the
// integrand is smooth on every sub-piece and bisection never chases a jump.
std::vector<PathPiece> split_at_block_faces(const PathPiece& piece,
                                            const std::vector<kernels::FlatBlock>& blocks) {
  std::vector<double> cuts;
  for (const auto& b : blocks)
    for (int axis = 0; axis < 3; ++axis)
      for (double plane : {b.lo[axis], b.hi[axis]}) face_crossings(piece, axis, plane, cuts);
  if (cuts.empty()) return {piece};
  if (piece.t1 > piece.t0) {
    std::sort(cuts.begin(), cuts.end());
  } else {
    std::sort(cuts.begin(), cuts.end(), std::greater<>());
  }
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<PathPiece> out;
  double start = piece.t0;
  for (double c : cuts) {
    PathPiece sub = piece;
    sub.t0 = start;
    sub.t1 = c;
    out.push_back(sub);
    start = c;
  }
  PathPiece last = piece;
  last.t0 = start;
  out.push_back(last);
  return out;
}

}  // namespace

Vec3 connection(const DipoleParticle& particle, const FieldConfig& config, const Vec3& r) {
  const FieldSample f = eval_fields(config, r);
  return cross(particle.d, f.B) - cross(particle.mu, f.E);
}

PhaseResult phase_line_integral(const DipoleParticle& particle, const FieldConfig& config,
                                const PathSpec& path, const QuadratureOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
  const std::vector<PathPiece> pieces = path_pieces(path);

  const double core = config.max_core_radius();
  if (core > 0.0) {
    const double clearance = min_axis_distance(path);
    if (clearance < core) {
      std::ostringstream os;
      os << "path reaches rho=" << clearance << ", inside core radius " << core;
      throw SingularityViolation(os.str());
    }
  }

  PieceIntegrator integrator(particle, config, options);
  const kernels::FlatField flat = kernels::FlatField::from(config);
  PhaseResult out;
  // Pieces are summed in path order so results are reproducible bit for bit.
  for (const PathPiece& piece : pieces) {
    for (const PathPiece& sub : split_at_block_faces(piece, flat.blocks)) {
      const Estimate e = integrator.integrate(sub);
      out.gamma_hmw += e.hmw;
      out.gamma_ac += e.ac;
    }
  }
  out.gamma_total = out.gamma_hmw + out.gamma_ac;
  out.quad_error = integrator.error();
  out.n_evals = integrator.evals();
  return out;
}

std::complex<double> dirac_phase_factor(const DipoleParticle& particle, const FieldConfig& config,
                                        const PathSpec& path, const QuadratureOptions& options) {
  const PhaseResult r = phase_line_integral(particle, config, path, options);
  return std::polar(1.0, -r.gamma_total);
}

double closed_form_phase(const ClosedFormParams& params) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::visit(
      overloaded{
          [&](const RadialPhaseParams& p) {
            return p.winding * two_pi * (p.d * p.lambda_m - p.mu * p.lambda_e);
          },
          [&](const TkachukPhaseParams& p) {
            return p.winding * two_pi * (2.0 * p.d * p.lambda_m - p.mu * p.lambda_e);
          },
          [&](const CasellaPhaseParams& p) { return 2.0 * p.d * p.B0 * p.a + 2.0 * p.mu * p.E0 * p.a; },
      },
      params);
}

namespace {

FieldConfig dual_field(const FieldConfig& config) {
  return std::visit(
      overloaded{
          [](const RadialLine& f) {
            return FieldConfig::radial_line(-f.lambda_m, f.lambda_e, f.core_radius);
          },
          // B = 2 lambda_m / rho, E = lambda / rho.
          [](const TkachukWire& f) {
            return FieldConfig::tkachuk_wire(-2.0 * f.lambda_m, 0.5 * f.lambda, f.core_radius);
          },
          [](const UniformBlock& f) { return FieldConfig::uniform_block(-f.B0, f.E0, f.region); },
          [](const Superposition& f) {
            std::vector<FieldConfig> members;
            members.reserve(f.members.size());
            for (const auto& m : f.members) members.push_back(dual_field(m));
            return FieldConfig::superposition(std::move(members));
          },
      },
      config.variant());
}

}  // namespace

std::pair<DipoleParticle, FieldConfig> duality_transform(const DipoleParticle& particle,
                                                        const FieldConfig& config) {
  DipoleParticle dual = particle;
  dual.d = -particle.mu;
  dual.mu = particle.d;
  return {dual, dual_field(config)};
}

}  // namespace anandan
