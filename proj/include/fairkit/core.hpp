#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairkit/errors.hpp"

namespace fairkit::core {

// Relative half-width of the band around the fair mark inside which a user
// counts as exactly at the mark.
inline constexpr double kFairMarkTieTol = 1e-9;

// A validated metric vector: one non-negative finite value per user, at
// least one of them positive. The index is dimensionless, so the metric
// label is carried only for reporting.
class Allocation {
 public:
  explicit Allocation(std::vector<double> values,
                      std::string metric_label = "allocation");

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const std::string& metric_label() const { return metric_label_; }

 private:
  std::vector<double> values_;
  std::string metric_label_;
};

struct MomentSummary {
  std::size_t n;
  double b1;  // first raw moment, the mean
  double b2;  // second raw moment
  double variance_pop;
  std::optional<double> variance_sample;  // absent when n < 2
  double cov_pop;                         // sqrt(variance_pop) / b1
};

enum class UserClass { favored, discriminated, at_mark };

std::string_view to_string(UserClass c);

struct PerUserFairness {
  double perceived;  // x_i divided by the fair mark
  UserClass cls;
};

struct FairnessReport {
  double fairness;
  double discrimination;  // 1 - fairness
  double fair_mark;       // sum(x^2) / sum(x)
  double mean;
  std::vector<PerUserFairness> per_user;
};

struct LegacyIndices {
  std::optional<double> variance_sample;
  double cov_pop;
  double min_max_ratio;
};

MomentSummary moments(const Allocation& alloc);

// (sum x)^2 / (n sum x^2), in [1/n, 1]; 1 exactly iff all values are equal.
double fairness_index(const Allocation& alloc);

// Same index over a raw buffer. The buffer must satisfy the Allocation
// invariants; negative or all-zero data is rejected.
double fairness_index(std::span<const double> values);

FairnessReport fairness_report(const Allocation& alloc);

// 1 / (1 + cov^2): the index as a function of the population coefficient
// of variation alone.
double fairness_from_cov(double cov_pop);

// ((1/n) sum x)^r / ((1/n) sum x^r) for r > 1. At r = 2 this is
// bit-identical to fairness_index: both take the fused moment kernel path.
double generalized_index(const Allocation& alloc, double r);

// Older per-vector dispersion measures, kept for comparison. Some early
// fairness write-ups quote a coefficient of variation defined as
// variance/mean; cov_pop here is the standard deviation/mean form.
LegacyIndices legacy_indices(const Allocation& alloc);

// Rescales each allocation by its demand (optionally capping the ratio at
// 1) so heterogeneous entitlements can be compared on one scale.
Allocation demand_normalize(std::span<const double> allocations,
                            std::span<const double> demands, bool cap_at_one,
                            std::string metric_label = "fraction-of-demand");

}  // namespace fairkit::core
