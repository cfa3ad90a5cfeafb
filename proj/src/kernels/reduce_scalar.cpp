#include "fairkit/kernels.hpp"

#include <cassert>

namespace fairkit::kernels {

Moments2 moments2_scalar(std::span<const double> xs) {
  NeumaierSum s1;
  NeumaierSum s2;
  for (const double x : xs) {
    s1.add(x);
    s2.add(x * x);
  }
  return {s1.value(), s2.value()};
}

Moments4 moments4_scalar(std::span<const double> xs) {
  NeumaierSum s1;
  NeumaierSum s2;
  NeumaierSum s3;
  NeumaierSum s4;
  for (const double x : xs) {
    const double x2 = x * x;
    s1.add(x);
    s2.add(x2);
    s3.add(x2 * x);
    s4.add(x2 * x2);
  }
  return {s1.value(), s2.value(), s3.value(), s4.value()};
}

MinMax minmax_scalar(std::span<const double> xs) {
  assert(!xs.empty());
  double lo = xs[0];
  double hi = xs[0];
  for (const double x : xs.subspan(1)) {
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return {lo, hi};
}

}  // namespace fairkit::kernels
