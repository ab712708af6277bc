#include "princebart/kernels.hpp"

#if defined(PRINCEBART_KERNELS_AVX2)

#include <immintrin.h>

namespace princebart::kernels::detail {

namespace {

// Horizontal reduce matching the scalar lane-combine order exactly.
inline double reduce_lanes(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

inline __m256d gather_by_u16(const double* values, const std::uint16_t* idx) {
  const __m128i raw = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(idx));
  const __m128i wide = _mm_cvtepu16_epi32(raw);
  return _mm256_i32gather_pd(values, wide, 8);
}

}  // namespace

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  }
  double total = reduce_lanes(acc);
  for (std::size_t i = n4; i < n; ++i) total += x[i];
  return total;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    // mul+add, not fma: keeps rounding identical to the reference kernel
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double total = reduce_lanes(acc);
  for (std::size_t i = n4; i < n; ++i) total += x[i] * y[i];
  return total;
}

void partial_residual_avx2(double* r, const double* latent,
                           const double* total_fit, double offset,
                           const double* leaf_values,
                           const std::uint16_t* leaf_index, std::size_t n) {
  const __m256d voffset = _mm256_set1_pd(offset);
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d lat = _mm256_loadu_pd(latent + i);
    const __m256d tot = _mm256_loadu_pd(total_fit + i);
    const __m256d fit = gather_by_u16(leaf_values, leaf_index + i);
    const __m256d out = _mm256_add_pd(
        _mm256_sub_pd(_mm256_sub_pd(lat, voffset), tot), fit);
    _mm256_storeu_pd(r + i, out);
  }
  for (std::size_t i = n4; i < n; ++i) {
    r[i] = ((latent[i] - offset) - total_fit[i]) + leaf_values[leaf_index[i]];
  }
}

void apply_fit_delta_avx2(double* total_fit, const double* new_values,
                          const std::uint16_t* new_index,
                          const double* old_values,
                          const std::uint16_t* old_index, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d nv = gather_by_u16(new_values, new_index + i);
    const __m256d ov = gather_by_u16(old_values, old_index + i);
    const __m256d tot = _mm256_loadu_pd(total_fit + i);
    _mm256_storeu_pd(total_fit + i,
                     _mm256_add_pd(tot, _mm256_sub_pd(nv, ov)));
  }
  for (std::size_t i = n4; i < n; ++i) {
    total_fit[i] =
        total_fit[i] + (new_values[new_index[i]] - old_values[old_index[i]]);
  }
}

}  // namespace princebart::kernels::detail

#endif  // PRINCEBART_KERNELS_AVX2
