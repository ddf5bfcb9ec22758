// Built with -mavx2 -ffp-contract=off so that every lane performs exactly the
// operations of the scalar kernel, in the same order.

#include "anandan/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace anandan::kernels::detail {

#if defined(__AVX2__)

bool avx2_compiled() { return true; }

namespace {

inline __m256d masked(__m256d mask, double v) { return _mm256_and_pd(mask, _mm256_set1_pd(v)); }

inline __m256d inside_mask(__m256d x, __m256d y, __m256d z, const FlatBlock& b) {
  __m256d m = _mm256_and_pd(_mm256_cmp_pd(x, _mm256_set1_pd(b.lo.x), _CMP_GE_OQ),
                            _mm256_cmp_pd(x, _mm256_set1_pd(b.hi.x), _CMP_LE_OQ));
  m = _mm256_and_pd(m, _mm256_cmp_pd(y, _mm256_set1_pd(b.lo.y), _CMP_GE_OQ));
  m = _mm256_and_pd(m, _mm256_cmp_pd(y, _mm256_set1_pd(b.hi.y), _CMP_LE_OQ));
  m = _mm256_and_pd(m, _mm256_cmp_pd(z, _mm256_set1_pd(b.lo.z), _CMP_GE_OQ));
  m = _mm256_and_pd(m, _mm256_cmp_pd(z, _mm256_set1_pd(b.hi.z), _CMP_LE_OQ));
  return m;
}

// a*b - c*e
inline __m256d cross_term(__m256d a, __m256d b, __m256d c, __m256d e) {
  return _mm256_sub_pd(_mm256_mul_pd(a, b), _mm256_mul_pd(c, e));
}

}  // namespace

std::size_t connection_integrand_avx2(const FlatField& field, const Vec3& d, const Vec3& mu,
                                      const NodeBatch& nodes, std::span<double> hmw,
                                      std::span<double> ac) {
  const std::size_t n = nodes.size();
  const std::size_t vec_end = n - n % 4;
  std::size_t bad = 0;

  const __m256d core2 = _mm256_set1_pd(field.core_radius * field.core_radius);
  const __m256d line_e = _mm256_set1_pd(field.line_e);
  const __m256d line_b = _mm256_set1_pd(field.line_b);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d dx = _mm256_set1_pd(d.x), dy = _mm256_set1_pd(d.y), dz = _mm256_set1_pd(d.z);
  const __m256d mx = _mm256_set1_pd(mu.x), my = _mm256_set1_pd(mu.y), mz = _mm256_set1_pd(mu.z);

  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d x = _mm256_loadu_pd(&nodes.px[i]);
    const __m256d y = _mm256_loadu_pd(&nodes.py[i]);
    const __m256d z = _mm256_loadu_pd(&nodes.pz[i]);
    __m256d ex = _mm256_setzero_pd(), ey = _mm256_setzero_pd(), ez = _mm256_setzero_pd();
    __m256d bx = _mm256_setzero_pd(), by = _mm256_setzero_pd(), bz = _mm256_setzero_pd();
    if (field.has_line) {
      const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
      // NaN compares false here as well, matching !(r2 >= core2) in the scalar kernel.
      const int ok = _mm256_movemask_pd(_mm256_cmp_pd(r2, core2, _CMP_GE_OQ));
      bad += static_cast<std::size_t>(4 - __builtin_popcount(static_cast<unsigned>(ok)));
      const __m256d inv = _mm256_div_pd(one, r2);
      const __m256d ux = _mm256_mul_pd(x, inv), uy = _mm256_mul_pd(y, inv);
      ex = _mm256_mul_pd(line_e, ux);
      ey = _mm256_mul_pd(line_e, uy);
      bx = _mm256_mul_pd(line_b, ux);
      by = _mm256_mul_pd(line_b, uy);
    }
    for (const FlatBlock& b : field.blocks) {
      const __m256d m = inside_mask(x, y, z, b);
      ex = _mm256_add_pd(ex, masked(m, b.E0.x));
      ey = _mm256_add_pd(ey, masked(m, b.E0.y));
      ez = _mm256_add_pd(ez, masked(m, b.E0.z));
      bx = _mm256_add_pd(bx, masked(m, b.B0.x));
      by = _mm256_add_pd(by, masked(m, b.B0.y));
      bz = _mm256_add_pd(bz, masked(m, b.B0.z));
    }
    const __m256d tx = _mm256_loadu_pd(&nodes.tx[i]);
    const __m256d ty = _mm256_loadu_pd(&nodes.ty[i]);
    const __m256d tz = _mm256_loadu_pd(&nodes.tz[i]);

    __m256d h = _mm256_mul_pd(tx, cross_term(dy, bz, dz, by));
    h = _mm256_add_pd(h, _mm256_mul_pd(ty, cross_term(dz, bx, dx, bz)));
    h = _mm256_add_pd(h, _mm256_mul_pd(tz, cross_term(dx, by, dy, bx)));

    __m256d a = _mm256_mul_pd(tx, cross_term(my, ez, mz, ey));
    a = _mm256_add_pd(a, _mm256_mul_pd(ty, cross_term(mz, ex, mx, ez)));
    a = _mm256_add_pd(a, _mm256_mul_pd(tz, cross_term(mx, ey, my, ex)));
    a = _mm256_xor_pd(a, _mm256_set1_pd(-0.0));

    _mm256_storeu_pd(&hmw[i], h);
    _mm256_storeu_pd(&ac[i], a);
  }

  if (vec_end < n) {
    const NodeBatch tail{nodes.px.subspan(vec_end), nodes.py.subspan(vec_end),
                         nodes.pz.subspan(vec_end), nodes.tx.subspan(vec_end),
                         nodes.ty.subspan(vec_end), nodes.tz.subspan(vec_end)};
    bad += connection_integrand_scalar(field, d, mu, tail, hmw.subspan(vec_end),
                                       ac.subspan(vec_end));
  }
  return bad;
}

#else

bool avx2_compiled() { return false; }

std::size_t connection_integrand_avx2(const FlatField& field, const Vec3& d, const Vec3& mu,
                                      const NodeBatch& nodes, std::span<double> hmw,
                                      std::span<double> ac) {
  return connection_integrand_scalar(field, d, mu, nodes, hmw, ac);
}

#endif

}  // namespace anandan::kernels::detail
