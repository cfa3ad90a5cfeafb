#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>

namespace fairkit::kernels {

// Neumaier variant of Kahan summation: the running compensation bounds the
// result to a few ulp of the exact sum regardless of input ordering.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Moments2 {
  double sum;
  double sum_sq;
};

struct Moments4 {
  double s1;
  double s2;
  double s3;
  double s4;
};

struct MinMax {
  double min;
  double max;
};

// Dispatched entry points. Backend is chosen once per process from CPU
// capabilities; results are deterministic on a given machine.
Moments2 moments2(std::span<const double> xs);
Moments4 moments4(std::span<const double> xs);
MinMax minmax(std::span<const double> xs);  // requires !xs.empty()

// Scalar reference implementations, always available.
Moments2 moments2_scalar(std::span<const double> xs);
Moments4 moments4_scalar(std::span<const double> xs);
MinMax minmax_scalar(std::span<const double> xs);

// AVX2 variants. Present only when the library was built for x86-64;
// call only if avx2_available() returns true.
bool avx2_available();
Moments2 moments2_avx2(std::span<const double> xs);
Moments4 moments4_avx2(std::span<const double> xs);
MinMax minmax_avx2(std::span<const double> xs);

// "avx2" or "scalar".
std::string_view active_backend();

}  // namespace fairkit::kernels
