#include "princebart/kernels.hpp"

#include <cstdlib>

namespace princebart::kernels {

SumFn sum = detail::sum_scalar;
DotFn dot = detail::dot_scalar;
PartialResidualFn partial_residual = detail::partial_residual_scalar;
ApplyFitDeltaFn apply_fit_delta = detail::apply_fit_delta_scalar;

namespace {
std::string g_backend = "scalar";

bool apply_backend(const std::string& name) {
  if (name == "scalar") {
    sum = detail::sum_scalar;
    dot = detail::dot_scalar;
    partial_residual = detail::partial_residual_scalar;
    apply_fit_delta = detail::apply_fit_delta_scalar;
    g_backend = name;
    return true;
  }
#if defined(PRINCEBART_KERNELS_AVX2)
  if (name == "avx2" && avx2_available()) {
    sum = detail::sum_avx2;
    dot = detail::dot_avx2;
    partial_residual = detail::partial_residual_avx2;
    apply_fit_delta = detail::apply_fit_delta_avx2;
    g_backend = name;
    return true;
  }
#endif
  return false;
}

const int g_init = [] {
  std::string want = avx2_available() ? "avx2" : "scalar";
  if (const char* env = std::getenv("PRINCE_BART_KERNELS")) {
    const std::string requested(env);
    if (requested == "scalar" || requested == "avx2") want = requested;
  }
  if (!apply_backend(want)) apply_backend("scalar");
  return 0;
}();

}  // namespace

bool avx2_available() {
#if defined(PRINCEBART_KERNELS_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const std::string& active_backend() { return g_backend; }

bool set_backend(const std::string& name) { return apply_backend(name); }

}  // namespace princebart::kernels
