#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <fairkit/core.hpp>
#include <fairkit/kernels.hpp>

#include "support/oracles.hpp"

using fairkit::core::Allocation;
using fairkit::core::UserClass;
using fairkit::InvalidAllocation;
using fairkit::InvalidDemand;
using fairkit::InvalidExponent;

namespace {

// The canonical worked example: three users holding 1, 3 and 5 units.
// All expectations below were fixed from exact rational arithmetic:
//   index     = 81 / (3 * 35)  = 27/35
//   fair mark = 35 / 9
//   variance  (sample) = 4, (population) = 8/3
//   cov       = sqrt(8/3) / 3 = 0.5443310539518174
const std::vector<double> kOneThreeFive{1.0, 3.0, 5.0};

// Two ways to hand out 20 units among 100 users: everyone gets 0.2, or
// ten users get 2 and ninety get nothing.
std::vector<double> even_split() { return std::vector<double>(100, 0.2); }
std::vector<double> concentrated_split() {
  std::vector<double> xs(100, 0.0);
  std::fill_n(xs.begin(), 10, 2.0);
  return xs;
}

}  // namespace

TEST_CASE("index of the worked three-user example") {
  const double f = fairkit::core::fairness_index(Allocation{kOneThreeFive});
  CHECK(f == doctest::Approx(27.0 / 35.0).epsilon(1e-15));
}

TEST_CASE("moment summary of the worked example") {
  const auto m = fairkit::core::moments(Allocation{kOneThreeFive});
  CHECK(m.n == 3);
  CHECK(m.b1 == 3.0);
  CHECK(m.b2 == doctest::Approx(35.0 / 3.0).epsilon(1e-15));
  CHECK(m.variance_pop == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  REQUIRE(m.variance_sample.has_value());
  CHECK(*m.variance_sample == 4.0);
  CHECK(m.cov_pop == doctest::Approx(0.5443310539518174).epsilon(1e-14));
}

TEST_CASE("report for the worked example") {
  const auto rep = fairkit::core::fairness_report(Allocation{kOneThreeFive});
  CHECK(rep.fairness == doctest::Approx(27.0 / 35.0).epsilon(1e-15));
  CHECK(rep.discrimination == 1.0 - rep.fairness);
  CHECK(rep.fair_mark == doctest::Approx(35.0 / 9.0).epsilon(1e-15));
  CHECK(rep.mean == 3.0);
  REQUIRE(rep.per_user.size() == 3);
  // Fair mark is about 3.889: users at 1 and 3 sit below it, 5 above.
  CHECK(rep.per_user[0].cls == UserClass::discriminated);
  CHECK(rep.per_user[1].cls == UserClass::discriminated);
  CHECK(rep.per_user[2].cls == UserClass::favored);
  CHECK(rep.per_user[0].perceived ==
        doctest::Approx(9.0 / 35.0).epsilon(1e-14));
  CHECK(rep.per_user[2].perceived ==
        doctest::Approx(45.0 / 35.0).epsilon(1e-14));
}

TEST_CASE("equal split scores 1 exactly; concentrated split scores k/n") {
  CHECK(fairkit::core::fairness_index(Allocation{even_split()}) == 1.0);

  const auto rep =
      fairkit::core::fairness_report(Allocation{concentrated_split()});
  CHECK(rep.fairness == doctest::Approx(0.1).epsilon(1e-12));
  // Fair mark 40/20 = 2: the ten holders sit exactly at the mark, the
  // ninety empty-handed users below it.
  CHECK(rep.fair_mark == 2.0);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(rep.per_user[i].cls == UserClass::at_mark);
    CHECK(rep.per_user[i].perceived == 1.0);
  }
  for (std::size_t i = 10; i < 100; ++i) {
    CHECK(rep.per_user[i].cls == UserClass::discriminated);
    CHECK(rep.per_user[i].perceived == 0.0);
  }
}

TEST_CASE("k-of-n law: k active users out of n score exactly k/n") {
  oracle::TestRng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 400));
    const auto k = static_cast<std::size_t>(
        rng.integer(1, static_cast<std::int64_t>(n)));
    const double level = rng.uniform(0.5, 100.0);
    std::vector<double> xs(n, 0.0);
    std::fill_n(xs.begin(), k, level);
    std::mt19937_64 gen(trial);
    std::shuffle(xs.begin(), xs.end(), gen);
    const double f = fairkit::core::fairness_index(xs);
    CHECK(std::fabs(f - static_cast<double>(k) / static_cast<double>(n)) <=
          1e-12);
  }
}

TEST_CASE("two-user split: endpoints and symmetry") {
  const auto f = [](double x) {
    return fairkit::core::fairness_index(std::vector<double>{x, 1.0 - x});
  };
  CHECK(f(0.0) == 0.5);
  CHECK(f(0.5) == 1.0);
  for (int i = 0; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 100.0;
    const double y = 1.0 - x;
    // reversing the pair is bitwise-neutral
    CHECK(fairkit::core::fairness_index(std::vector<double>{x, y}) ==
          fairkit::core::fairness_index(std::vector<double>{y, x}));
    CHECK(f(x) >= 0.5);
    CHECK(f(x) <= 1.0);
  }
}

TEST_CASE("index stays inside [1/n, 1] and ignores scale and order") {
  oracle::TestRng rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 300));
    auto xs = rng.allocation(n, 0.0, 50.0, 0.2);
    const double f = fairkit::core::fairness_index(xs);
    CHECK(f >= 1.0 / static_cast<double>(n) - 1e-12);
    CHECK(f <= 1.0);

    // Scale independence.
    const double c = rng.uniform(0.01, 1000.0);
    auto scaled = xs;
    for (auto& v : scaled) v *= c;
    CHECK(std::fabs(fairkit::core::fairness_index(scaled) - f) <= 1e-12);

    // Order independence.
    std::mt19937_64 gen(static_cast<std::uint64_t>(trial));
    std::shuffle(xs.begin(), xs.end(), gen);
    CHECK(std::fabs(fairkit::core::fairness_index(xs) - f) <= 1e-12);

    // Agreement with the extended-precision defining ratio.
    CHECK(std::fabs(f - static_cast<double>(oracle::fairness(xs))) <= 1e-13);
  }
}

TEST_CASE("index equals 1/(1 + cov^2) for the population cov") {
  oracle::TestRng rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 100));
    const auto xs = rng.allocation(n, 0.0, 20.0, 0.15);
    const Allocation alloc{xs};
    const double f = fairkit::core::fairness_index(alloc);
    const auto m = fairkit::core::moments(alloc);
    CHECK(std::fabs(f - fairkit::core::fairness_from_cov(m.cov_pop)) <=
          1e-10);
  }
}

TEST_CASE("single positive user among n scores the floor 1/n") {
  for (const std::size_t n : {1u, 2u, 10u, 1000u}) {
    std::vector<double> xs(n, 0.0);
    xs[n / 2] = 7.5;
    const double f = fairkit::core::fairness_index(xs);
    CHECK(std::fabs(f - 1.0 / static_cast<double>(n)) <= 1e-12);
  }
}

TEST_CASE("all-equal vectors score exactly 1 at any scale") {
  for (const double v : {1e-300, 0.1, 1.0, 3.7, 1e300}) {
    for (const std::size_t n : {1u, 2u, 17u, 1000u}) {
      const std::vector<double> xs(n, v);
      CHECK(fairkit::core::fairness_index(xs) == 1.0);
      const auto m = fairkit::core::moments(Allocation{xs});
      CHECK(m.variance_pop == 0.0);
      CHECK(m.cov_pop == 0.0);
    }
  }
}

TEST_CASE("moment summary for a single user omits the sample variance") {
  const auto m = fairkit::core::moments(Allocation{{4.0}});
  CHECK(m.n == 1);
  CHECK(m.b1 == 4.0);
  CHECK(m.b2 == 16.0);
  CHECK_FALSE(m.variance_sample.has_value());
}

TEST_CASE("generalized index reduces to the plain one at r = 2") {
  oracle::TestRng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 200));
    const auto xs = rng.allocation(n, 0.0, 30.0, 0.1);
    const Allocation alloc{xs};
    // Bit-identical: both routes go through the same fused kernel.
    CHECK(fairkit::core::generalized_index(alloc, 2.0) ==
          fairkit::core::fairness_index(alloc));
  }
}

TEST_CASE("generalized index follows the (k/n)^(r-1) law") {
  oracle::TestRng rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 120));
    const auto k = static_cast<std::size_t>(
        rng.integer(1, static_cast<std::int64_t>(n)));
    std::vector<double> xs(n, 0.0);
    std::fill_n(xs.begin(), k, 3.25);
    const double ratio = static_cast<double>(k) / static_cast<double>(n);
    for (const double r : {2.0, 3.0, 4.5}) {
      const double g = fairkit::core::generalized_index(Allocation{xs}, r);
      CHECK(std::fabs(g - std::pow(ratio, r - 1.0)) <= 1e-12);
    }
  }
}

TEST_CASE("generalized index is exactly 1 on equal vectors for any r") {
  const Allocation alloc{std::vector<double>(9, 2.5)};
  for (const double r : {1.5, 2.0, 3.0, 7.25}) {
    CHECK(fairkit::core::generalized_index(alloc, r) == 1.0);
  }
}

TEST_CASE("generalized index rejects exponents at or below 1") {
  const Allocation alloc{kOneThreeFive};
  CHECK_THROWS_AS(fairkit::core::generalized_index(alloc, 1.0),
                  InvalidExponent);
  CHECK_THROWS_AS(fairkit::core::generalized_index(alloc, 0.5),
                  InvalidExponent);
  CHECK_THROWS_AS(fairkit::core::generalized_index(alloc, -2.0),
                  InvalidExponent);
  CHECK_THROWS_AS(
      fairkit::core::generalized_index(
          alloc, std::numeric_limits<double>::quiet_NaN()),
      InvalidExponent);
}

TEST_CASE("legacy indices: sample variance, cov and min/max ratio") {
  const auto legacy = fairkit::core::legacy_indices(Allocation{{1.0, 4.0, 5.0}});
  CHECK(legacy.min_max_ratio == 0.2);

  const auto worked = fairkit::core::legacy_indices(Allocation{kOneThreeFive});
  REQUIRE(worked.variance_sample.has_value());
  CHECK(*worked.variance_sample == 4.0);
  CHECK(worked.cov_pop == doctest::Approx(0.5443310539518174).epsilon(1e-14));
  CHECK(worked.min_max_ratio == 0.2);
}

TEST_CASE("legacy indices are scale-sensitive where the index is not") {
  // The same inequity at ten times the scale: variance explodes, the
  // min/max ratio and the index do not move.
  const Allocation small{{1.0, 3.0, 5.0}};
  const Allocation large{{10.0, 30.0, 50.0}};
  const auto a = fairkit::core::legacy_indices(small);
  const auto b = fairkit::core::legacy_indices(large);
  CHECK(*b.variance_sample == doctest::Approx(100.0 * *a.variance_sample));
  CHECK(b.min_max_ratio == a.min_max_ratio);
  CHECK(fairkit::core::fairness_index(small) ==
        fairkit::core::fairness_index(large));
}

TEST_CASE("demand normalization turns proportional service into a fair one") {
  // Two users get 2/3 and 1/3 of a link, but their demands are 2 and 1:
  // each receives exactly its fair share once normalized.
  const std::vector<double> got{2.0 / 3.0, 1.0 / 3.0};
  const std::vector<double> want{2.0, 1.0};
  CHECK(fairkit::core::fairness_index(got) ==
        doctest::Approx(0.9).epsilon(1e-12));
  const auto norm = fairkit::core::demand_normalize(got, want, false);
  CHECK(fairkit::core::fairness_index(norm) == 1.0);
  CHECK(norm.metric_label() == "fraction-of-demand");
}

TEST_CASE("demand normalization caps over-service when asked") {
  const std::vector<double> got{3.0, 1.0};
  const std::vector<double> want{2.0, 1.0};
  const auto uncapped = fairkit::core::demand_normalize(got, want, false);
  CHECK(uncapped.values()[0] == 1.5);
  CHECK(uncapped.values()[1] == 1.0);
  const auto capped = fairkit::core::demand_normalize(got, want, true);
  CHECK(capped.values()[0] == 1.0);
  CHECK(capped.values()[1] == 1.0);
  CHECK(fairkit::core::fairness_index(capped) == 1.0);
}

TEST_CASE("demand normalization rejects bad demand vectors") {
  const std::vector<double> got{1.0, 2.0};
  const std::vector<double> short_demands{1.0};
  const std::vector<double> zero_demand{1.0, 0.0};
  const std::vector<double> negative_demand{1.0, -2.0};
  const std::vector<double> infinite_demand{
      1.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(fairkit::core::demand_normalize(got, short_demands, false),
                  InvalidDemand);
  CHECK_THROWS_AS(fairkit::core::demand_normalize(got, zero_demand, false),
                  InvalidDemand);
  CHECK_THROWS_AS(
      fairkit::core::demand_normalize(got, negative_demand, false),
      InvalidDemand);
  CHECK_THROWS_AS(
      fairkit::core::demand_normalize(got, infinite_demand, false),
      InvalidDemand);
}

TEST_CASE("allocations are validated on construction") {
  CHECK_THROWS_AS(Allocation{std::vector<double>{}}, InvalidAllocation);
  CHECK_THROWS_AS((Allocation{std::vector<double>{1.0, -0.5}}),
                  InvalidAllocation);
  CHECK_THROWS_AS((Allocation{std::vector<double>{0.0, 0.0}}),
                  InvalidAllocation);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS((Allocation{std::vector<double>{1.0, nan}}),
                  InvalidAllocation);
  CHECK_THROWS_AS((Allocation{std::vector<double>{1.0, inf}}),
                  InvalidAllocation);
  // Zeros are fine as long as someone holds something.
  CHECK_NOTHROW((Allocation{std::vector<double>{0.0, 1.0}}));
}

TEST_CASE("user classification honors the tie band around the fair mark") {
  // Perturb one at-mark user by less than the tie tolerance: still at mark.
  const auto rep = fairkit::core::fairness_report(
      Allocation{{2.0 * (1.0 + 1e-12), 2.0, 2.0, 0.0}});
  CHECK(rep.per_user[0].cls == UserClass::at_mark);
  CHECK(rep.per_user[3].cls == UserClass::discriminated);
}

TEST_CASE("class labels render as words") {
  CHECK(fairkit::core::to_string(UserClass::favored) == "favored");
  CHECK(fairkit::core::to_string(UserClass::discriminated) ==
        "discriminated");
  CHECK(fairkit::core::to_string(UserClass::at_mark) == "at-mark");
}

TEST_CASE("large shuffled buffers reproduce the index to 1e-12") {
  oracle::TestRng rng(12);
  std::vector<double> xs(1000000);
  for (auto& x : xs) x = rng.uniform(0.0, 1000.0);
  const double before = fairkit::core::fairness_index(xs);
  std::mt19937_64 gen(4242);
  std::shuffle(xs.begin(), xs.end(), gen);
  const double after = fairkit::core::fairness_index(xs);
  CHECK(std::fabs(after - before) <= 1e-12);
  CHECK(std::fabs(before - static_cast<double>(oracle::fairness(xs))) <=
        1e-12);
}
