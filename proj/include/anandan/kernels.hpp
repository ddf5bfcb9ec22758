#pragma once

// Batched evaluation of the geometric-phase line integrand A(r) . t at many
// quadrature nodes, where A = d x B - mu x E. A portable scalar reference kernel
// and an AVX2 variant compute the same operations in the same order; the
// dispatcher picks AVX2 when the running CPU supports it.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "anandan/fields.hpp"
#include "anandan/vec3.hpp"

namespace anandan::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
/// Fastest backend usable on this CPU.
Backend best_backend();

struct FlatBlock {
  Vec3 lo, hi;
  Vec3 E0, B0;
};

/// A FieldConfig flattened for batch evaluation. All line sources share the z-axis,
/// so they collapse to a single pair of coefficients: E = line_e (x, y, 0) / rho^2,
/// B = line_b (x, y, 0) / rho^2.
struct FlatField {
  bool has_line = false;
  double line_e = 0.0;
  double line_b = 0.0;
  double core_radius = 0.0;
  std::vector<FlatBlock> blocks;

  static FlatField from(const FieldConfig& config);
};

/// Structure-of-arrays view of node positions and (unnormalized) path tangents.
struct NodeBatch {
  std::span<const double> px, py, pz;
  std::span<const double> tx, ty, tz;
  std::size_t size() const { return px.size(); }
};

/// Writes hmw[i] = (d x B) . t_i and ac[i] = -(mu x E) . t_i for every node.
/// Returns the number of nodes that fall inside the line-source core (those
/// outputs are meaningless); 0 means every node was admissible.
std::size_t connection_integrand(Backend backend, const FlatField& field, const Vec3& d,
                                 const Vec3& mu, const NodeBatch& nodes, std::span<double> hmw,
                                 std::span<double> ac);

namespace detail {
std::size_t connection_integrand_scalar(const FlatField& field, const Vec3& d, const Vec3& mu,
                                        const NodeBatch& nodes, std::span<double> hmw,
                                        std::span<double> ac);
std::size_t connection_integrand_avx2(const FlatField& field, const Vec3& d, const Vec3& mu,
                                      const NodeBatch& nodes, std::span<double> hmw,
                                      std::span<double> ac);
bool avx2_compiled();
}  // namespace detail

}  // namespace anandan::kernels
