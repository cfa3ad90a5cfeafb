#pragma once

#include <cstdint>
#include <vector>

#include "fairkit/errors.hpp"

namespace fairkit::window {

// One virtual circuit per user over a shared h-hop path, modeled as a
// closed cyclic network of h + 1 exponential unit-rate servers holding
// C = sum of window sizes customers in total.
class WindowScenario {
 public:
  WindowScenario(int hops, std::vector<std::int64_t> windows);

  int hops() const { return hops_; }
  const std::vector<std::int64_t>& windows() const { return windows_; }
  std::int64_t total_window() const { return total_; }

 private:
  int hops_;
  std::vector<std::int64_t> windows_;
  std::int64_t total_;
};

struct UserMetrics {
  double throughput;  // c_i / (h + C)
  double response;    // h + C, identical for every user
  double power;       // throughput / response
};

struct MvaSolution {
  int population;
  std::vector<double> per_queue_lengths;
  double network_response;
  double network_throughput;
};

enum class Metric { response, throughput, power, window };

// Exact mean-value analysis of a closed cyclic network of identical
// exponential unit-rate servers, iterated from population 1 up.
MvaSolution mva_solve(int servers, int population);

// Closed-form per-user metrics for the shared-path scenario.
std::vector<UserMetrics> user_metrics(const WindowScenario& s);

// Index of the chosen metric across users. Responses are identical, so
// the response index is exactly 1; throughput and power are the window
// vector scaled by a common positive factor, so their index equals the
// index of the window sizes themselves and is computed from that vector.
double metric_fairness(const WindowScenario& s, Metric metric);

// Scenario with at_min circuits at the smallest sensible window (h) and
// at_max circuits at three times that.
WindowScenario sna_scenario(int hops, int at_min, int at_max);

}  // namespace fairkit::window
