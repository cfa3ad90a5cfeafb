#include "fairkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fairkit/kernels.hpp"

namespace fairkit::core {
namespace {

void check_values(std::span<const double> values) {
  if (values.empty()) {
    throw InvalidAllocation("allocation must contain at least one value");
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = values[i];
    if (!std::isfinite(x)) {
      throw InvalidAllocation("allocation value at index " + std::to_string(i) +
                              " is not finite");
    }
    if (x < 0.0) {
      throw InvalidAllocation("allocation value at index " + std::to_string(i) +
                              " is negative");
    }
    any_positive = any_positive || x > 0.0;
  }
  if (!any_positive) {
    throw InvalidAllocation("allocation must contain at least one positive value");
  }
}

// min == max short-circuits: identities like f = 1 and variance = 0 for a
// constant vector must hold exactly, which rounded sums cannot guarantee.
bool all_equal(std::span<const double> values) {
  const auto mm = kernels::minmax(values);
  return mm.min == mm.max;
}

double index_from_sums(std::size_t n, double sum, double sum_sq) {
  const double f =
      (sum * sum) / (static_cast<double>(n) * sum_sq);
  return std::min(f, 1.0);
}

}  // namespace

Allocation::Allocation(std::vector<double> values, std::string metric_label)
    : values_(std::move(values)), metric_label_(std::move(metric_label)) {
  check_values(values_);
}

std::string_view to_string(UserClass c) {
  switch (c) {
    case UserClass::favored:
      return "favored";
    case UserClass::discriminated:
      return "discriminated";
    case UserClass::at_mark:
      return "at-mark";
  }
  return "unknown";
}

MomentSummary moments(const Allocation& alloc) {
  const auto xs = alloc.values();
  const auto n = xs.size();
  const double dn = static_cast<double>(n);
  MomentSummary m{};
  m.n = n;
  if (all_equal(xs)) {
    const double a = xs[0];
    m.b1 = a;
    m.b2 = a * a;
    m.variance_pop = 0.0;
    if (n >= 2) m.variance_sample = 0.0;
    m.cov_pop = 0.0;
    return m;
  }
  const auto [s1, s2] = kernels::moments2(xs);
  m.b1 = s1 / dn;
  m.b2 = s2 / dn;
  const double centered = std::max(0.0, s2 - dn * m.b1 * m.b1);
  m.variance_pop = centered / dn;
  if (n >= 2) m.variance_sample = centered / (dn - 1.0);
  m.cov_pop = std::sqrt(m.variance_pop) / m.b1;
  return m;
}

double fairness_index(std::span<const double> values) {
  check_values(values);
  if (all_equal(values)) return 1.0;
  const auto [s1, s2] = kernels::moments2(values);
  return index_from_sums(values.size(), s1, s2);
}

double fairness_index(const Allocation& alloc) {
  const auto xs = alloc.values();
  if (all_equal(xs)) return 1.0;
  const auto [s1, s2] = kernels::moments2(xs);
  return index_from_sums(xs.size(), s1, s2);
}

FairnessReport fairness_report(const Allocation& alloc) {
  const auto xs = alloc.values();
  const auto n = xs.size();
  FairnessReport rep{};
  rep.per_user.reserve(n);
  if (all_equal(xs)) {
    rep.fairness = 1.0;
    rep.discrimination = 0.0;
    rep.fair_mark = xs[0];
    rep.mean = xs[0];
    rep.per_user.assign(n, {1.0, UserClass::at_mark});
    return rep;
  }
  const auto [s1, s2] = kernels::moments2(xs);
  rep.fairness = index_from_sums(n, s1, s2);
  rep.discrimination = 1.0 - rep.fairness;
  rep.fair_mark = s2 / s1;
  rep.mean = s1 / static_cast<double>(n);
  const double tol = kFairMarkTieTol * rep.fair_mark;
  for (const double x : xs) {
    PerUserFairness u{};
    u.perceived = x / rep.fair_mark;
    if (std::abs(x - rep.fair_mark) <= tol) {
      u.cls = UserClass::at_mark;
    } else if (x > rep.fair_mark) {
      u.cls = UserClass::favored;
    } else {
      u.cls = UserClass::discriminated;
    }
    rep.per_user.push_back(u);
  }
  return rep;
}

double fairness_from_cov(double cov_pop) {
  return 1.0 / (1.0 + cov_pop * cov_pop);
}

double generalized_index(const Allocation& alloc, double r) {
  if (!std::isfinite(r) || r <= 1.0) {
    throw InvalidExponent("exponent must be finite and greater than 1");
  }
  const auto xs = alloc.values();
  if (all_equal(xs)) return 1.0;
  const double dn = static_cast<double>(xs.size());
  if (r == 2.0) {
    const auto [s1, s2] = kernels::moments2(xs);
    return index_from_sums(xs.size(), s1, s2);
  }
  kernels::NeumaierSum sum;
  kernels::NeumaierSum powers;
  for (const double x : xs) {
    sum.add(x);
    powers.add(std::pow(x, r));
  }
  const double mean = sum.value() / dn;
  const double moment_r = powers.value() / dn;
  return std::min(std::pow(mean, r) / moment_r, 1.0);
}

LegacyIndices legacy_indices(const Allocation& alloc) {
  const auto m = moments(alloc);
  const auto mm = kernels::minmax(alloc.values());
  return {m.variance_sample, m.cov_pop, mm.min / mm.max};
}

Allocation demand_normalize(std::span<const double> allocations,
                            std::span<const double> demands, bool cap_at_one,
                            std::string metric_label) {
  if (allocations.size() != demands.size()) {
    throw InvalidDemand("demand vector length " +
                        std::to_string(demands.size()) +
                        " does not match allocation length " +
                        std::to_string(allocations.size()));
  }
  for (std::size_t i = 0; i < demands.size(); ++i) {
    if (!std::isfinite(demands[i]) || demands[i] <= 0.0) {
      throw InvalidDemand("demand at index " + std::to_string(i) +
                          " must be positive and finite");
    }
  }
  std::vector<double> ratios(allocations.size());
  for (std::size_t i = 0; i < allocations.size(); ++i) {
    double v = allocations[i] / demands[i];
    if (cap_at_one) v = std::min(v, 1.0);
    ratios[i] = v;
  }
  return Allocation(std::move(ratios), std::move(metric_label));
}

}  // namespace fairkit::core
