#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairkit/cli.hpp"
#include "fairkit/kernels.hpp"

namespace fairkit::cli {
namespace {

Format parse_format(const std::string& name) {
  return name == "json-like" ? Format::json_like : Format::table;
}

window::Metric parse_metric(const std::string& name) {
  if (name == "response") return window::Metric::response;
  if (name == "power") return window::Metric::power;
  if (name == "window") return window::Metric::window;
  return window::Metric::throughput;
}

void emit(const std::string& body, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + output_path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) throw IoError("failed writing output file: " + output_path);
}

struct FairnessArgs {
  std::string input_path;
  std::string demands_path;
  bool cap_at_one = false;
  double generalized_r = 0.0;
  bool has_r = false;
};

int cmd_fairness(const FairnessArgs& args, Format format,
                 const std::string& output_path) {
  auto input = read_allocation_file(args.input_path);
  std::optional<core::Allocation> alloc;
  if (!args.demands_path.empty()) {
    const auto demands = read_demands_file(args.demands_path);
    alloc = core::demand_normalize(input.values, demands, args.cap_at_one);
  } else {
    alloc = core::Allocation(std::move(input.values), input.metric);
  }
  const auto doc = build_report(
      *alloc, input.ids,
      args.has_r ? std::optional<double>(args.generalized_r) : std::nullopt);
  emit(render_report(doc, format), output_path);
  return kExitSuccess;
}

struct WindowArgs {
  int hops = 1;
  std::vector<std::int64_t> windows;
  int sna_min = -1;
  int sna_max = -1;
  std::string metric = "throughput";
};

int cmd_window(const WindowArgs& args, Format format,
               const std::string& output_path) {
  std::optional<window::WindowScenario> scenario;
  if (!args.windows.empty()) {
    scenario.emplace(args.hops, args.windows);
  } else if (args.sna_min >= 0 || args.sna_max >= 0) {
    scenario = window::sna_scenario(args.hops, std::max(args.sna_min, 0),
                                    std::max(args.sna_max, 0));
  } else {
    throw InvalidScenario(
        "window scenario needs --windows or --sna-min/--sna-max");
  }

  WindowReport rep;
  rep.hops = scenario->hops();
  rep.circuits = scenario->windows().size();
  rep.total_window = scenario->total_window();
  rep.selected = parse_metric(args.metric);
  rep.window_fairness = metric_fairness(*scenario, window::Metric::window);
  rep.throughput_fairness =
      metric_fairness(*scenario, window::Metric::throughput);
  rep.power_fairness = metric_fairness(*scenario, window::Metric::power);
  rep.response_fairness =
      metric_fairness(*scenario, window::Metric::response);
  const auto metrics = user_metrics(*scenario);
  rep.per_user.reserve(metrics.size());
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    rep.per_user.push_back({i + 1, scenario->windows()[i],
                            metrics[i].throughput, metrics[i].response,
                            metrics[i].power});
  }
  emit(render_window(rep, format), output_path);
  return kExitSuccess;
}

struct CofArgs {
  std::string family;
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.0;
  int stages = 0;
  double scale = 0.0;
  double sigma = 0.0;
  bool has_a = false;
  bool has_b = false;
  bool has_lambda = false;
  bool has_stages = false;
  bool has_scale = false;
  bool has_sigma = false;
  std::size_t mc_samples = 0;
};

distributions::DistributionSpec make_spec(const CofArgs& args) {
  using distributions::DistributionSpec;
  if (args.family == "constant") {
    if (!args.has_a) throw InvalidDistribution("constant requires --a");
    return DistributionSpec::constant(args.a);
  }
  if (args.family == "exponential") {
    if (!args.has_lambda) {
      throw InvalidDistribution("exponential requires --lambda");
    }
    return DistributionSpec::exponential(args.lambda);
  }
  if (args.family == "erlang") {
    if (!args.has_stages || !args.has_lambda) {
      throw InvalidDistribution("erlang requires --stages and --lambda");
    }
    return DistributionSpec::erlang(args.stages, args.lambda);
  }
  if (args.family == "uniform") {
    if (!args.has_a || !args.has_b) {
      throw InvalidDistribution("uniform requires --a and --b");
    }
    return DistributionSpec::uniform(args.a, args.b);
  }
  if (!args.has_scale || !args.has_sigma) {
    throw InvalidDistribution("lognormal requires --m and --sigma");
  }
  return DistributionSpec::lognormal(args.scale, args.sigma);
}

int cmd_cof(const CofArgs& args, std::uint64_t seed, Format format,
            const std::string& output_path) {
  const auto spec = make_spec(args);
  CofReport rep;
  rep.description = spec.describe();
  const auto moments = analytic_moments(spec);
  rep.m1 = moments.m1;
  rep.m2 = moments.m2;
  rep.cof = coefficient_of_fairness(spec);
  if (args.mc_samples > 0) {
    const auto mc = monte_carlo_cof(spec, args.mc_samples, seed);
    rep.monte_carlo =
        CofReport::MonteCarlo{args.mc_samples, seed, mc.estimate,
                              mc.std_error};
  }
  emit(render_cof(rep, format), output_path);
  return kExitSuccess;
}

struct BoundArgs {
  double k_ratio = 1.0;
  std::size_t steps = 101;
};

int cmd_bound(const BoundArgs& args, const std::string& output_path) {
  BoundCurve curve;
  curve.k_ratio = args.k_ratio;
  curve.points = theorems::sweep_gamma(args.k_ratio, args.steps);
  curve.minimum = theorems::min_fairness_bound(args.k_ratio);
  emit(render_bound(curve), output_path);
  return kExitSuccess;
}

}  // namespace

ReportDocument build_report(const core::Allocation& alloc,
                            std::span<const std::string> ids,
                            std::optional<double> generalized_r) {
  ReportDocument doc;
  doc.metric = alloc.metric_label();
  doc.users = alloc.size();
  const auto summary = core::moments(alloc);
  const auto report = core::fairness_report(alloc);
  const auto legacy = core::legacy_indices(alloc);
  const auto mm = kernels::minmax(alloc.values());
  doc.mean = summary.b1;
  doc.min = mm.min;
  doc.max = mm.max;
  doc.fairness = report.fairness;
  doc.discrimination = report.discrimination;
  doc.fair_mark = report.fair_mark;
  if (generalized_r) {
    doc.generalized_r = *generalized_r;
    doc.generalized_value = core::generalized_index(alloc, *generalized_r);
  }
  doc.variance_sample = legacy.variance_sample;
  doc.cov_pop = legacy.cov_pop;
  doc.min_max_ratio = legacy.min_max_ratio;
  doc.per_user.reserve(alloc.size());
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    ReportDocument::Row row;
    row.id = i < ids.size() ? ids[i] : std::to_string(i + 1);
    row.value = alloc.values()[i];
    row.perceived = report.per_user[i].perceived;
    row.cls = report.per_user[i].cls;
    doc.per_user.push_back(std::move(row));
  }
  return doc;
}

int run(int argc, char** argv) {
  CLI::App app{"fairness analysis for shared-resource allocations"};
  app.require_subcommand(1);

  std::string format_name = "table";
  std::string output_path;
  std::uint64_t seed = 1;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"table", "json-like"}));
  app.add_option("--output", output_path, "write output to a file");
  app.add_option("--seed", seed, "Monte Carlo seed");

  FairnessArgs fairness_args;
  auto* fairness = app.add_subcommand(
      "fairness", "index and per-user report for an allocation file");
  fairness->fallthrough();
  fairness->add_option("--input", fairness_args.input_path,
                       "allocation CSV or JSON file")
      ->required();
  fairness->add_option("--demands", fairness_args.demands_path,
                       "demand file; values are normalized to fractions");
  fairness->add_flag("--cap", fairness_args.cap_at_one,
                     "cap fraction-of-demand at 1");
  auto* r_opt = fairness->add_option("--r", fairness_args.generalized_r,
                                     "also report the order-r index (r > 1)");

  WindowArgs window_args;
  auto* window_cmd = app.add_subcommand(
      "window", "per-user metrics for window-controlled circuits");
  window_cmd->fallthrough();
  window_cmd->add_option("--hops", window_args.hops, "path length in hops")
      ->required();
  auto* windows_opt =
      window_cmd
          ->add_option("--windows", window_args.windows,
                       "comma-separated window sizes, one per circuit")
          ->delimiter(',');
  auto* sna_min_opt = window_cmd->add_option(
      "--sna-min", window_args.sna_min, "circuits at the minimum window (h)");
  auto* sna_max_opt = window_cmd->add_option(
      "--sna-max", window_args.sna_max, "circuits at three times the minimum");
  windows_opt->excludes(sna_min_opt);
  windows_opt->excludes(sna_max_opt);
  window_cmd
      ->add_option("--metric", window_args.metric, "fairness metric to report")
      ->check(CLI::IsMember({"response", "throughput", "power", "window"}));

  CofArgs cof_args;
  auto* cof = app.add_subcommand(
      "cof", "coefficient of fairness for a requirement distribution");
  cof->fallthrough();
  cof->add_option("--family", cof_args.family, "distribution family")
      ->required()
      ->check(CLI::IsMember(
          {"constant", "exponential", "erlang", "uniform", "lognormal"}));
  auto* a_opt = cof->add_option("--a", cof_args.a, "constant value / lower end");
  auto* b_opt = cof->add_option("--b", cof_args.b, "upper end");
  auto* lambda_opt = cof->add_option("--lambda", cof_args.lambda, "rate");
  auto* stages_opt = cof->add_option("--stages", cof_args.stages,
                                     "erlang stage count");
  auto* scale_opt = cof->add_option("--m", cof_args.scale,
                                    "lognormal median");
  auto* sigma_opt = cof->add_option("--sigma", cof_args.sigma,
                                    "lognormal log-space deviation");
  cof->add_option("--mc-samples", cof_args.mc_samples,
                  "also run a Monte Carlo check with this many samples");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand(
      "bound", "fairness curve for two-group allocations with spread K");
  bound->fallthrough();
  bound->add_option("--k", bound_args.k_ratio, "max/min allocation ratio")
      ->required();
  bound->add_option("--steps", bound_args.steps, "gamma grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  fairness_args.has_r = r_opt->count() > 0;
  cof_args.has_a = a_opt->count() > 0;
  cof_args.has_b = b_opt->count() > 0;
  cof_args.has_lambda = lambda_opt->count() > 0;
  cof_args.has_stages = stages_opt->count() > 0;
  cof_args.has_scale = scale_opt->count() > 0;
  cof_args.has_sigma = sigma_opt->count() > 0;

  const Format format = parse_format(format_name);
  try {
    if (fairness->parsed()) {
      return cmd_fairness(fairness_args, format, output_path);
    }
    if (window_cmd->parsed()) {
      return cmd_window(window_args, format, output_path);
    }
    if (cof->parsed()) return cmd_cof(cof_args, seed, format, output_path);
    return cmd_bound(bound_args, output_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace fairkit::cli
