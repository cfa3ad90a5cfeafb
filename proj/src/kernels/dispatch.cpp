#include <stdexcept>

#include "fairkit/kernels.hpp"

namespace fairkit::kernels {

#if defined(FAIRKIT_HAVE_AVX2)

bool avx2_available() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

#else

bool avx2_available() { return false; }

Moments2 moments2_avx2(std::span<const double>) {
  throw std::logic_error("avx2 kernels not built");
}
Moments4 moments4_avx2(std::span<const double>) {
  throw std::logic_error("avx2 kernels not built");
}
MinMax minmax_avx2(std::span<const double>) {
  throw std::logic_error("avx2 kernels not built");
}

#endif

Moments2 moments2(std::span<const double> xs) {
  return avx2_available() ? moments2_avx2(xs) : moments2_scalar(xs);
}

Moments4 moments4(std::span<const double> xs) {
  return avx2_available() ? moments4_avx2(xs) : moments4_scalar(xs);
}

MinMax minmax(std::span<const double> xs) {
  return avx2_available() ? minmax_avx2(xs) : minmax_scalar(xs);
}

std::string_view active_backend() {
  return avx2_available() ? "avx2" : "scalar";
}

}  // namespace fairkit::kernels
