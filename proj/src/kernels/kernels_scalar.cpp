#include "princebart/kernels.hpp"

namespace princebart::kernels::detail {

// Reductions accumulate in four lanes exactly as the vector variant does;
// the combine order (lane0+lane1)+(lane2+lane3), then the tail, must not be
// changed independently of kernels_avx2.cpp.

double sum_scalar(const double* x, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    acc0 += x[i];
    acc1 += x[i + 1];
    acc2 += x[i + 2];
    acc3 += x[i + 3];
  }
  double total = (acc0 + acc1) + (acc2 + acc3);
  for (std::size_t i = n4; i < n; ++i) total += x[i];
  return total;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const std::size_t n4 = n & ~std::size_t(3);
  for (std::size_t i = 0; i < n4; i += 4) {
    acc0 += x[i] * y[i];
    acc1 += x[i + 1] * y[i + 1];
    acc2 += x[i + 2] * y[i + 2];
    acc3 += x[i + 3] * y[i + 3];
  }
  double total = (acc0 + acc1) + (acc2 + acc3);
  for (std::size_t i = n4; i < n; ++i) total += x[i] * y[i];
  return total;
}

void partial_residual_scalar(double* r, const double* latent,
                             const double* total_fit, double offset,
                             const double* leaf_values,
                             const std::uint16_t* leaf_index, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = ((latent[i] - offset) - total_fit[i]) + leaf_values[leaf_index[i]];
  }
}

void apply_fit_delta_scalar(double* total_fit, const double* new_values,
                            const std::uint16_t* new_index,
                            const double* old_values,
                            const std::uint16_t* old_index, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    total_fit[i] =
        total_fit[i] + (new_values[new_index[i]] - old_values[old_index[i]]);
  }
}

}  // namespace princebart::kernels::detail
