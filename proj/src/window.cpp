#include "fairkit/window.hpp"

#include <string>
#include <utility>
#include <vector>

#include "fairkit/core.hpp"

namespace fairkit::window {

WindowScenario::WindowScenario(int hops, std::vector<std::int64_t> windows)
    : hops_(hops), windows_(std::move(windows)), total_(0) {
  if (hops < 1) throw InvalidScenario("path must have at least one hop");
  if (windows_.empty()) {
    throw InvalidScenario("scenario needs at least one circuit");
  }
  for (const auto c : windows_) {
    if (c < 1) {
      throw InvalidScenario("window sizes must be positive integers");
    }
    total_ += c;
  }
}

MvaSolution mva_solve(int servers, int population) {
  if (servers < 1) throw InvalidScenario("network needs at least one server");
  if (population < 1) {
    throw InvalidScenario("network needs at least one customer");
  }
  std::vector<double> lengths(static_cast<std::size_t>(servers), 0.0);
  std::vector<double> residence(static_cast<std::size_t>(servers), 0.0);
  double total_response = 0.0;
  double throughput = 0.0;
  for (int n = 1; n <= population; ++n) {
    total_response = 0.0;
    for (std::size_t q = 0; q < lengths.size(); ++q) {
      residence[q] = 1.0 + lengths[q];
      total_response += residence[q];
    }
    throughput = static_cast<double>(n) / total_response;
    for (std::size_t q = 0; q < lengths.size(); ++q) {
      lengths[q] = throughput * residence[q];
    }
  }
  return {population, std::move(lengths), total_response, throughput};
}

std::vector<UserMetrics> user_metrics(const WindowScenario& s) {
  const double round_trip =
      static_cast<double>(s.hops()) + static_cast<double>(s.total_window());
  std::vector<UserMetrics> out;
  out.reserve(s.windows().size());
  for (const auto c : s.windows()) {
    UserMetrics m{};
    m.throughput = static_cast<double>(c) / round_trip;
    m.response = round_trip;
    m.power = m.throughput / m.response;
    out.push_back(m);
  }
  return out;
}

double metric_fairness(const WindowScenario& s, Metric metric) {
  const auto& windows = s.windows();
  std::vector<double> values(windows.size());
  if (metric == Metric::response) {
    const double round_trip =
        static_cast<double>(s.hops()) + static_cast<double>(s.total_window());
    values.assign(windows.size(), round_trip);
  } else {
    for (std::size_t i = 0; i < windows.size(); ++i) {
      values[i] = static_cast<double>(windows[i]);
    }
  }
  return core::fairness_index(core::Allocation(std::move(values), "window"));
}

WindowScenario sna_scenario(int hops, int at_min, int at_max) {
  if (at_min < 0 || at_max < 0 || at_min + at_max < 1) {
    throw InvalidScenario(
        "scenario needs non-negative circuit counts summing to at least one");
  }
  if (hops < 1) throw InvalidScenario("path must have at least one hop");
  std::vector<std::int64_t> windows;
  windows.reserve(static_cast<std::size_t>(at_min + at_max));
  const auto h = static_cast<std::int64_t>(hops);
  windows.insert(windows.end(), static_cast<std::size_t>(at_min), h);
  windows.insert(windows.end(), static_cast<std::size_t>(at_max), 3 * h);
  return WindowScenario(hops, std::move(windows));
}

}  // namespace fairkit::window
