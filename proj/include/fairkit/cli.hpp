#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairkit/core.hpp"
#include "fairkit/distributions.hpp"
#include "fairkit/theorems.hpp"
#include "fairkit/window.hpp"

namespace fairkit::cli {

// Exit statuses. Usage errors from flag parsing exit 1; the remaining
// failure kinds each get their own code so scripts can tell them apart.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

// Malformed input file (bad CSV/JSON shape, non-numeric values).
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, json_like };

struct AllocationInput {
  std::vector<std::string> ids;
  std::vector<double> values;
  std::string metric;  // from the document, or "allocation"
};

// Reads a CSV file (optional header; one column `allocation` or two
// columns `user,allocation`) or a JSON document with fields `metric` and
// `allocations`. The format is sniffed from the first non-space byte.
AllocationInput read_allocation_file(const std::string& path);

// Same container shapes with `demand`/`demands` in place of allocations.
std::vector<double> read_demands_file(const std::string& path);

struct ReportDocument {
  std::string metric;
  std::size_t users = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double fairness = 0.0;
  double discrimination = 0.0;
  double fair_mark = 0.0;
  std::optional<double> generalized_r;
  std::optional<double> generalized_value;
  std::optional<double> variance_sample;
  double cov_pop = 0.0;
  double min_max_ratio = 0.0;
  struct Row {
    std::string id;
    double value;
    double perceived;
    core::UserClass cls;
  };
  std::vector<Row> per_user;
};

struct WindowReport {
  int hops = 0;
  std::size_t circuits = 0;
  std::int64_t total_window = 0;
  window::Metric selected = window::Metric::throughput;
  double window_fairness = 0.0;
  double throughput_fairness = 0.0;
  double power_fairness = 0.0;
  double response_fairness = 1.0;
  struct Row {
    std::size_t id;
    std::int64_t window;
    double throughput;
    double response;
    double power;
  };
  std::vector<Row> per_user;
};

struct CofReport {
  std::string description;
  double m1 = 0.0;
  double m2 = 0.0;
  double cof = 0.0;
  struct MonteCarlo {
    std::size_t samples;
    std::uint64_t seed;
    double estimate;
    double std_error;
  };
  std::optional<MonteCarlo> monte_carlo;
};

struct BoundCurve {
  double k_ratio = 0.0;
  std::vector<theorems::GammaFairness> points;
  theorems::MinFairnessBound minimum{};
};

ReportDocument build_report(const core::Allocation& alloc,
                            std::span<const std::string> ids,
                            std::optional<double> generalized_r);

// Every number in rendered output carries 12 significant digits; rendering
// is byte-deterministic for identical inputs.
std::string format_number(double v);
std::string render_report(const ReportDocument& doc, Format format);
std::string render_window(const WindowReport& rep, Format format);
std::string render_cof(const CofReport& rep, Format format);

// Curve files are plain CSV: a `gamma,fairness` header, one row per grid
// point, and a closing summary row prefixed `# min`.
std::string render_bound(const BoundCurve& curve);

std::string_view to_string(window::Metric m);

// Full command-line entry point; returns the process exit status.
int run(int argc, char** argv);

}  // namespace fairkit::cli
