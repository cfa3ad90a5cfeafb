#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "fairkit/errors.hpp"

namespace fairkit::distributions {

// Supported non-negative resource-requirement families. Families with
// support below zero are rejected by construction: the index is defined
// for non-negative quantities only.
enum class Family { constant, exponential, erlang, uniform, lognormal };

struct ConstantParams {
  double a;  // a > 0
};

struct ExponentialParams {
  double lambda;  // rate, lambda > 0
};

struct ErlangParams {
  int stages;     // positive integer shape
  double lambda;  // rate, lambda > 0
};

struct UniformParams {
  double a;  // lower end, a >= 0
  double b;  // upper end, b > a
};

struct LognormalParams {
  double scale;  // median m > 0
  double sigma;  // log-space standard deviation, sigma > 0
};

class DistributionSpec {
 public:
  using Params = std::variant<ConstantParams, ExponentialParams, ErlangParams,
                              UniformParams, LognormalParams>;

  static DistributionSpec constant(double a);
  static DistributionSpec exponential(double lambda);
  static DistributionSpec erlang(int stages, double lambda);
  static DistributionSpec uniform(double a, double b);
  static DistributionSpec lognormal(double scale, double sigma);

  Family family() const;
  const Params& params() const { return params_; }
  std::string describe() const;

 private:
  explicit DistributionSpec(Params p) : params_(p) {}
  Params params_;
};

struct RawMoments {
  double m1;  // first moment about the origin
  double m2;  // second moment about the origin
};

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

// Closed-form first and second raw moments of the family.
RawMoments analytic_moments(const DistributionSpec& spec);

// m1^2 / m2: the index a large population of requirements from this family
// approaches. Scale-free: rescaling the family leaves it unchanged. For
// the uniform family this is 3(a+b)^2 / (4(a^2 + ab + b^2)); note the
// reciprocal form sometimes quoted exceeds 1 and is not a valid index
// value, so the ratio is taken this way up.
double coefficient_of_fairness(const DistributionSpec& spec);

// Index of a pseudo-random sample of the family, with a delta-method
// standard error. Streams are generated by explicit inverse-CDF /
// Box-Muller transforms over a seeded mt19937_64, so a given seed
// reproduces the estimate bit for bit; samples must be at least 100.
MonteCarloEstimate monte_carlo_cof(const DistributionSpec& spec,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace fairkit::distributions
