#include "fairkit/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "fairkit/kernels.hpp"

namespace fairkit::distributions {
namespace {

void require(bool ok, const char* constraint) {
  if (!ok) throw InvalidDistribution(constraint);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Uniform draw in [0, 1) from the top 53 bits of the generator word.
double u01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Inverse CDF; 1 - u stays in (0, 1], so the log is finite.
double draw_exponential(std::mt19937_64& gen, double lambda) {
  return -std::log1p(-u01(gen)) / lambda;
}

double draw_normal(std::mt19937_64& gen) {
  const double u1 = u01(gen);
  const double u2 = u01(gen);
  return std::sqrt(-2.0 * std::log1p(-u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

DistributionSpec DistributionSpec::constant(double a) {
  require(std::isfinite(a) && a > 0.0, "constant requires a > 0");
  return DistributionSpec(ConstantParams{a});
}

DistributionSpec DistributionSpec::exponential(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0,
          "exponential requires rate lambda > 0");
  return DistributionSpec(ExponentialParams{lambda});
}

DistributionSpec DistributionSpec::erlang(int stages, double lambda) {
  require(stages >= 1, "erlang requires a positive integer stage count");
  require(std::isfinite(lambda) && lambda > 0.0,
          "erlang requires rate lambda > 0");
  return DistributionSpec(ErlangParams{stages, lambda});
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  require(std::isfinite(a) && a >= 0.0, "uniform requires lower end a >= 0");
  require(std::isfinite(b) && b > a, "uniform requires upper end b > a");
  return DistributionSpec(UniformParams{a, b});
}

DistributionSpec DistributionSpec::lognormal(double scale, double sigma) {
  require(std::isfinite(scale) && scale > 0.0,
          "lognormal requires median m > 0");
  require(std::isfinite(sigma) && sigma > 0.0,
          "lognormal requires sigma > 0");
  return DistributionSpec(LognormalParams{scale, sigma});
}

Family DistributionSpec::family() const {
  struct Visitor {
    Family operator()(const ConstantParams&) const { return Family::constant; }
    Family operator()(const ExponentialParams&) const {
      return Family::exponential;
    }
    Family operator()(const ErlangParams&) const { return Family::erlang; }
    Family operator()(const UniformParams&) const { return Family::uniform; }
    Family operator()(const LognormalParams&) const {
      return Family::lognormal;
    }
  };
  return std::visit(Visitor{}, params_);
}

std::string DistributionSpec::describe() const {
  struct Visitor {
    std::string operator()(const ConstantParams& p) const {
      return "constant(a=" + num(p.a) + ")";
    }
    std::string operator()(const ExponentialParams& p) const {
      return "exponential(lambda=" + num(p.lambda) + ")";
    }
    std::string operator()(const ErlangParams& p) const {
      return "erlang(stages=" + std::to_string(p.stages) +
             ", lambda=" + num(p.lambda) + ")";
    }
    std::string operator()(const UniformParams& p) const {
      return "uniform(a=" + num(p.a) + ", b=" + num(p.b) + ")";
    }
    std::string operator()(const LognormalParams& p) const {
      return "lognormal(m=" + num(p.scale) +
             ", sigma=" + num(p.sigma) + ")";
    }
  };
  return std::visit(Visitor{}, params_);
}

RawMoments analytic_moments(const DistributionSpec& spec) {
  struct Visitor {
    RawMoments operator()(const ConstantParams& p) const {
      return {p.a, p.a * p.a};
    }
    RawMoments operator()(const ExponentialParams& p) const {
      return {1.0 / p.lambda, 2.0 / (p.lambda * p.lambda)};
    }
    RawMoments operator()(const ErlangParams& p) const {
      const double c = static_cast<double>(p.stages);
      return {c / p.lambda, c * (c + 1.0) / (p.lambda * p.lambda)};
    }
    RawMoments operator()(const UniformParams& p) const {
      return {(p.a + p.b) / 2.0,
              (p.a * p.a + p.a * p.b + p.b * p.b) / 3.0};
    }
    RawMoments operator()(const LognormalParams& p) const {
      const double s2 = p.sigma * p.sigma;
      return {p.scale * std::exp(s2 / 2.0),
              p.scale * p.scale * std::exp(2.0 * s2)};
    }
  };
  return std::visit(Visitor{}, spec.params());
}

double coefficient_of_fairness(const DistributionSpec& spec) {
  const auto [m1, m2] = analytic_moments(spec);
  return (m1 * m1) / m2;
}

MonteCarloEstimate monte_carlo_cof(const DistributionSpec& spec,
                                   std::size_t samples, std::uint64_t seed) {
  require(samples >= 100, "monte carlo requires at least 100 samples");
  std::mt19937_64 gen(seed);
  std::vector<double> buf(samples);
  struct Sampler {
    std::mt19937_64& gen;
    double operator()(const ConstantParams& p) const { return p.a; }
    double operator()(const ExponentialParams& p) const {
      return draw_exponential(gen, p.lambda);
    }
    double operator()(const ErlangParams& p) const {
      // Sum of independent exponential stages.
      double total = 0.0;
      for (int s = 0; s < p.stages; ++s) {
        total += draw_exponential(gen, p.lambda);
      }
      return total;
    }
    double operator()(const UniformParams& p) const {
      return p.a + (p.b - p.a) * u01(gen);
    }
    double operator()(const LognormalParams& p) const {
      return p.scale * std::exp(p.sigma * draw_normal(gen));
    }
  };
  Sampler sampler{gen};
  for (double& x : buf) x = std::visit(sampler, spec.params());

  const auto mm = kernels::minmax(buf);
  if (mm.min == mm.max) return {1.0, 0.0};

  const auto [s1, s2, s3, s4] = kernels::moments4(buf);
  const double n = static_cast<double>(samples);
  const double m1 = s1 / n;
  const double m2 = s2 / n;
  const double m3 = s3 / n;
  const double m4 = s4 / n;
  const double estimate = std::min((s1 * s1) / (n * s2), 1.0);

  // Delta method on f = m1^2 / m2 with gradient (2 m1/m2, -m1^2/m2^2).
  const double g1 = 2.0 * m1 / m2;
  const double g2 = -(m1 * m1) / (m2 * m2);
  const double var_x = m2 - m1 * m1;
  const double cov_x_x2 = m3 - m1 * m2;
  const double var_x2 = m4 - m2 * m2;
  const double var_f =
      (g1 * g1 * var_x + 2.0 * g1 * g2 * cov_x_x2 + g2 * g2 * var_x2) / n;
  return {estimate, std::sqrt(std::max(0.0, var_f))};
}

}  // namespace fairkit::distributions
