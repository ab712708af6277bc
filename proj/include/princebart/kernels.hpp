#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Hot inner loops of the tree samplers, dispatched at runtime between a
// scalar reference and an AVX2 variant. Reference implementations mirror the
// vector lane structure (four-way accumulators, identical per-element
// operation order, no contractions), so both backends return bit-identical
// results and the equivalence tests can assert exact equality.
namespace princebart::kernels {

using SumFn = double (*)(const double*, std::size_t);
using DotFn = double (*)(const double*, const double*, std::size_t);
using PartialResidualFn = void (*)(double* r, const double* latent,
                                   const double* total_fit, double offset,
                                   const double* leaf_values,
                                   const std::uint16_t* leaf_index,
                                   std::size_t n);
using ApplyFitDeltaFn = void (*)(double* total_fit, const double* new_values,
                                 const std::uint16_t* new_index,
                                 const double* old_values,
                                 const std::uint16_t* old_index,
                                 std::size_t n);

extern SumFn sum;
extern DotFn dot;
// r[i] = latent[i] - offset - total_fit[i] + leaf_values[leaf_index[i]]
extern PartialResidualFn partial_residual;
// total_fit[i] += new_values[new_index[i]] - old_values[old_index[i]]
extern ApplyFitDeltaFn apply_fit_delta;

// Name of the active backend ("scalar" or "avx2").
const std::string& active_backend();

// Force a backend; returns false (leaving dispatch unchanged) if the request
// is not available on this machine. Used by tests and the PRINCE_BART_KERNELS
// environment override.
bool set_backend(const std::string& name);

bool avx2_available();

namespace detail {
double sum_scalar(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
void partial_residual_scalar(double* r, const double* latent,
                             const double* total_fit, double offset,
                             const double* leaf_values,
                             const std::uint16_t* leaf_index, std::size_t n);
void apply_fit_delta_scalar(double* total_fit, const double* new_values,
                            const std::uint16_t* new_index,
                            const double* old_values,
                            const std::uint16_t* old_index, std::size_t n);

#if defined(PRINCEBART_KERNELS_AVX2)
double sum_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
void partial_residual_avx2(double* r, const double* latent,
                           const double* total_fit, double offset,
                           const double* leaf_values,
                           const std::uint16_t* leaf_index, std::size_t n);
void apply_fit_delta_avx2(double* total_fit, const double* new_values,
                          const std::uint16_t* new_index,
                          const double* old_values,
                          const std::uint16_t* old_index, std::size_t n);
#endif
}  // namespace detail

}  // namespace princebart::kernels
