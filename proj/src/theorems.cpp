#include "fairkit/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fairkit/kernels.hpp"

namespace fairkit::theorems {
namespace {

void check_index(const core::Allocation& alloc, std::size_t i,
                 const char* what) {
  if (i >= alloc.size()) {
    throw InvalidTransfer(std::string(what) + " index " + std::to_string(i) +
                          " out of range for " + std::to_string(alloc.size()) +
                          " users");
  }
}

}  // namespace

BoundScenario::BoundScenario(double x_min, double x_max, double gamma)
    : x_min_(x_min), x_max_(x_max), gamma_(gamma) {
  if (!std::isfinite(x_min) || x_min <= 0.0) {
    throw InvalidScenario("x_min must be positive and finite");
  }
  if (!std::isfinite(x_max) || x_max < x_min) {
    throw InvalidScenario("x_max must be finite and at least x_min");
  }
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw InvalidScenario("gamma must lie in [0, 1]");
  }
}

BoundScenario BoundScenario::from_ratio(double k_ratio, double gamma) {
  if (!std::isfinite(k_ratio) || k_ratio < 1.0) {
    throw InvalidScenario("ratio K must be finite and at least 1");
  }
  return BoundScenario(1.0, k_ratio, gamma);
}

ExchangeOutcome exchange_effect(const core::Allocation& alloc, std::size_t j,
                                std::size_t k, double delta) {
  check_index(alloc, j, "recipient");
  check_index(alloc, k, "source");
  if (j == k) {
    throw InvalidTransfer("recipient and source must be distinct users");
  }
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw InvalidTransfer("transfer amount must be positive and finite");
  }
  const auto xs = alloc.values();
  if (xs[k] - delta < 0.0) {
    throw InvalidTransfer("transfer would drive the source user negative");
  }
  const double gap = xs[k] - xs[j];
  Direction dir = Direction::decrease;
  if (delta < gap) {
    dir = Direction::increase;
  } else if (delta == gap) {
    dir = Direction::unchanged;
  }
  std::vector<double> moved(xs.begin(), xs.end());
  moved[j] += delta;
  moved[k] -= delta;
  return {dir, core::fairness_index(core::Allocation(std::move(moved)))};
}

double uniform_increment(const core::Allocation& alloc, double c) {
  if (!std::isfinite(c) || c <= 0.0) {
    throw InvalidScenario("increment must be positive and finite");
  }
  const auto xs = alloc.values();
  std::vector<double> shifted(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) shifted[i] = xs[i] + c;
  return core::fairness_index(core::Allocation(std::move(shifted)));
}

MarginalDirection marginal_direction(const core::Allocation& alloc,
                                     std::size_t j) {
  check_index(alloc, j, "user");
  if (alloc.size() < 2) {
    throw InvalidScenario("marginal direction needs at least two users");
  }
  const auto [s1, s2] = kernels::moments2(alloc.values());
  const double fair_mark = s2 / s1;
  const double x = alloc.values()[j];
  if (std::abs(x - fair_mark) <= core::kFairMarkTieTol * fair_mark) {
    return MarginalDirection::stationary;
  }
  return x < fair_mark ? MarginalDirection::increase
                       : MarginalDirection::decrease;
}

double maximizing_value(const core::Allocation& alloc, std::size_t j) {
  check_index(alloc, j, "user");
  if (alloc.size() < 2) {
    throw InvalidScenario("maximizing value needs at least two users");
  }
  kernels::NeumaierSum s1;
  kernels::NeumaierSum s2;
  const auto xs = alloc.values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == j) continue;
    s1.add(xs[i]);
    s2.add(xs[i] * xs[i]);
  }
  const double rest_sum = s1.value();
  if (rest_sum <= 0.0) {
    throw DegenerateRemainder(
        "every other user holds zero; any positive value maximizes");
  }
  return s2.value() / rest_sum;
}

double bounded_fairness(const BoundScenario& s) {
  const double k = s.k_ratio();
  const double g = s.gamma();
  const double rest = 1.0 - g;
  const double num = g + rest * k;
  const double den = g + rest * (k * k);
  return std::min((num * num) / den, 1.0);
}

MinFairnessBound min_fairness_bound(double k_ratio) {
  if (!std::isfinite(k_ratio) || k_ratio < 1.0) {
    throw InvalidScenario("ratio K must be finite and at least 1");
  }
  const double kp1 = k_ratio + 1.0;
  return {k_ratio / kp1, (4.0 * k_ratio) / (kp1 * kp1)};
}

std::vector<GammaFairness> sweep_gamma(double k_ratio, std::size_t steps) {
  if (steps < 2) {
    throw InvalidScenario("sweep needs at least two grid points");
  }
  std::vector<GammaFairness> curve;
  curve.reserve(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double gamma = static_cast<double>(i) / last;
    curve.push_back(
        {gamma, bounded_fairness(BoundScenario::from_ratio(k_ratio, gamma))});
  }
  return curve;
}

}  // namespace fairkit::theorems
