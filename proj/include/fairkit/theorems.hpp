#pragma once

#include <cstddef>
#include <vector>

#include "fairkit/core.hpp"

namespace fairkit::theorems {

enum class Direction { increase, unchanged, decrease };
enum class MarginalDirection { increase, decrease, stationary };

struct ExchangeOutcome {
  Direction predicted_direction;
  double new_fairness;
};

// Two-group allocation pattern: a fraction gamma of users at x_min, the
// rest at x_max, with K = x_max / x_min.
class BoundScenario {
 public:
  BoundScenario(double x_min, double x_max, double gamma);
  static BoundScenario from_ratio(double k_ratio, double gamma);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double gamma() const { return gamma_; }
  double k_ratio() const { return x_max_ / x_min_; }

 private:
  double x_min_;
  double x_max_;
  double gamma_;
};

struct MinFairnessBound {
  double gamma_star;  // K / (K + 1)
  double f_min;       // 4K / (K + 1)^2
};

struct GammaFairness {
  double gamma;
  double fairness;
};

// Move delta from user k to user j and report the recomputed index along
// with the predicted direction: fairness rises iff delta < x_k - x_j, is
// unchanged at equality (a swap), and falls beyond it.
ExchangeOutcome exchange_effect(const core::Allocation& alloc, std::size_t j,
                                std::size_t k, double delta);

// Index after adding c > 0 to every user; never below the input's index.
double uniform_increment(const core::Allocation& alloc, double c);

// Whether granting user j a marginal increment raises or lowers the index:
// below the fair mark it raises, above it lowers, at the mark (within the
// tie tolerance) it is stationary.
MarginalDirection marginal_direction(const core::Allocation& alloc,
                                     std::size_t j);

// The value of x_j that maximizes the index with all other users fixed:
// the fair mark of the remaining users.
double maximizing_value(const core::Allocation& alloc, std::size_t j);

// Index of the two-group pattern in closed form:
// (gamma + (1-gamma)K)^2 / (gamma + (1-gamma)K^2).
double bounded_fairness(const BoundScenario& s);

// Worst mixture for a given spread K, minimized over continuous gamma.
MinFairnessBound min_fairness_bound(double k_ratio);

// bounded_fairness sampled on a uniform gamma grid over [0, 1].
std::vector<GammaFairness> sweep_gamma(double k_ratio, std::size_t steps);

}  // namespace fairkit::theorems
