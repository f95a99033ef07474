// Copyright 2026 The Spectrum Market Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "spectrum_market/errors.h"
#include "spectrum_market/threshold.h"

using namespace spectrum_market;

namespace {

const CongestionFn kG = CongestionFn::Linear();
const DemandCurve kP = DemandCurve::Linear();

MarketConfig Config(EntrantRegime regime, double b, double w, double alpha,
                    double beta, double gamma = 1.0) {
  MarketConfig cfg;
  cfg.regime = regime;
  cfg.n_entrants = regime == EntrantRegime::kNone    ? 0
                   : regime == EntrantRegime::kMulti ? 2
                                                     : 1;
  cfg.licensed = b;
  cfg.unlicensed = w;
  cfg.duty_cycle = alpha;
  cfg.band_share = beta;
  cfg.lte_efficiency = gamma;
  return cfg;
}

}  // namespace

TEST_CASE("metric and parameter names round-trip") {
  for (auto m : {Metric::kIncumbentRevenue, Metric::kConsumerSurplus,
                 Metric::kSocialWelfare, Metric::kTotalMass}) {
    CHECK(ParseMetric(MetricName(m)) == m);
  }
  for (auto p : {Parameter::kUnlicensed, Parameter::kDutyCycle,
                 Parameter::kBandShare, Parameter::kEfficiency,
                 Parameter::kLicensed}) {
    CHECK(ParseParameter(ParameterName(p)) == p);
  }
  CHECK_FALSE(ParseMetric("profit").has_value());
}

TEST_CASE("WithParameter maps infinity to the unbounded flag") {
  const MarketConfig base = Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.5);
  CHECK(WithParameter(base, Parameter::kUnlicensed, INFINITY)
            .unlicensed_unbounded);
  MarketConfig unbounded = base;
  unbounded.unlicensed_unbounded = true;
  const auto finite = WithParameter(unbounded, Parameter::kUnlicensed, 3.0);
  CHECK_FALSE(finite.unlicensed_unbounded);
  CHECK(finite.unlicensed == 3.0);
  CHECK(WithParameter(base, Parameter::kEfficiency, 2.0).lte_efficiency == 2.0);
}

TEST_CASE("monopoly revenue threshold in gamma is gamma*") {
  ThresholdQuery q;
  q.metric = Metric::kIncumbentRevenue;
  q.parameter = Parameter::kEfficiency;
  q.lo = 1.0;
  q.hi = 3.0;
  q.base = Config(EntrantRegime::kNone, 1, 1, 0.5, 0.5);
  const auto r = FindThreshold(q, kG, kP);
  REQUIRE(r.found);
  CHECK(r.value == doctest::Approx(5.0 / 3.0).epsilon(1e-7));
  CHECK(r.diff_lo < 0.0);
  CHECK(r.diff_hi > 0.0);
  CHECK(r.diff_below < 0.0);
  CHECK(r.diff_above > 0.0);
}

TEST_CASE("no sign change is reported, not thrown") {
  ThresholdQuery q;
  q.metric = Metric::kIncumbentRevenue;
  q.parameter = Parameter::kEfficiency;
  q.lo = 1.0;
  q.hi = 1.1;
  q.base = Config(EntrantRegime::kNone, 1, 1, 0.5, 0.5);
  const auto r = FindThreshold(q, kG, kP);
  CHECK_FALSE(r.found);
  CHECK(r.diff_lo < 0.0);
  CHECK(r.diff_hi < 0.0);
  q.hi = q.lo;
  CHECK_THROWS_AS(FindThreshold(q, kG, kP), MarketError);
}

TEST_CASE("consumer-surplus crossover exceeds B under licensed sharing") {
  ThresholdQuery q;
  q.metric = Metric::kConsumerSurplus;
  q.parameter = Parameter::kUnlicensed;
  q.lo = 0.01;
  q.hi = 100.0;
  q.base = Config(EntrantRegime::kOneLicensedSharing, 1, 1, 0.5, 0.5);
  const auto r = FindThreshold(q, kG, kP);
  REQUIRE(r.found);
  CHECK(r.value > 1.0);
  CHECK(MetricDifference(q, r.value, kG, kP) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("optimal duty cycle") {
  SUBCASE("unbounded band") {
    MarketConfig cfg = Config(EntrantRegime::kOneLicensedSharing, 1, 1, 0, 0.2);
    cfg.unlicensed_unbounded = true;
    const auto best = OptimalAlpha(cfg, kG, kP);
    CHECK(best.alpha == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(best.revenue == doctest::Approx(1.0 / 48.0).epsilon(1e-12));
    cfg.licensed = 2.0;
    CHECK(OptimalAlpha(cfg, kG, kP).alpha == 0.0);
    cfg.licensed = 0.4;
    CHECK(OptimalAlpha(cfg, kG, kP).alpha ==
          doctest::Approx(0.7).epsilon(1e-14));
  }
  SUBCASE("large finite band approaches the limit") {
    const auto best = OptimalAlpha(
        Config(EntrantRegime::kOneLicensedSharing, 1, 1000, 0, 0.2), kG, kP);
    CHECK(std::fabs(best.alpha - 0.25) < 1e-2);
  }
  SUBCASE("finite band beats every grid point") {
    const MarketConfig cfg =
        Config(EntrantRegime::kOneLicensedSharing, 1, 1000, 0, 0.2);
    const auto best = OptimalAlpha(cfg, kG, kP);
    for (int i = 0; i <= 100; ++i) {
      MarketConfig c = cfg;
      c.lteu_enabled = true;
      c.duty_cycle = i / 100.0;
      CHECK(best.revenue >=
            SolveOneEntrantLicensed(c, kG, kP).revenue_incumbent - 1e-15);
    }
    CHECK(best.revenue == doctest::Approx(1.0 / 48.0).epsilon(1e-3));
  }
}

TEST_CASE("consumer-surplus gain region") {
  const auto region =
      ConsumerSurplusGainRegion(Config(EntrantRegime::kMulti, 0.01, 1, 0.5, 0.5));
  CHECK(region.feasible);
  CHECK(region.k == doctest::Approx(1.0 / 3.0));
  CHECK(region.licensed_bound ==
        doctest::Approx((std::sqrt(2.0) - 1.0) * 0.75 * 0.25 / 1.0));
  CHECK(region.gamma_lo < region.gamma_hi);
  CHECK(region.gamma_lo > 0.0);
  // The interval is where the discriminant allows it.
  const auto far =
      ConsumerSurplusGainRegion(Config(EntrantRegime::kMulti, 1.0, 1, 0.5, 0.5));
  CHECK_FALSE(far.feasible);
  CHECK(far.delta < 0.0);
  CHECK_FALSE(
      ConsumerSurplusGainRegion(Config(EntrantRegime::kMulti, 0.01, 1, 0.5, 1))
          .feasible);
  CHECK_FALSE(
      ConsumerSurplusGainRegion(Config(EntrantRegime::kMulti, 0.01, 1, 0, 0.5))
          .feasible);
  const auto wide =
      ConsumerSurplusGainRegion(Config(EntrantRegime::kMulti, 0.5, 1, 0.5, 0.5));
  CHECK_FALSE(wide.feasible);
  CHECK(wide.licensed_bound == doctest::Approx(0.0776).epsilon(1e-3));
}

TEST_CASE("sweep rows are ordered and independent of thread count") {
  const MarketConfig cfg = Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.5);
  const auto grid = MakeGrid(0.1, 3.0, 0.1);
  CHECK(grid.size() == 30);
  SweepOptions one;
  SweepOptions many;
  many.threads = 8;
  const auto a = Sweep(cfg, Parameter::kUnlicensed, grid, kG, kP, one);
  const auto b = Sweep(cfg, Parameter::kUnlicensed, grid, kG, kP, many);
  REQUIRE(a.rows.size() == 60);
  REQUIRE(b.rows.size() == 60);
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].value == grid[i / 2]);
    CHECK(a.rows[i].lteu == (i % 2 == 1));
    CHECK(a.rows[i].outcome->p_incumbent == b.rows[i].outcome->p_incumbent);
    CHECK(a.rows[i].welfare.social_welfare ==
          b.rows[i].welfare.social_welfare);
  }
}

TEST_CASE("sweep captures per-row failures") {
  const MarketConfig cfg = Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.5);
  const std::vector<double> betas = {0.5, 1.0};
  const auto s = Sweep(cfg, Parameter::kBandShare, betas, kG, kP);
  REQUIRE(s.rows.size() == 4);
  CHECK(s.rows[2].error.empty());  // beta = 1, LTE-U off
  CHECK(s.rows[3].error.find("DegenerateDenominator") != std::string::npos);
  CHECK_FALSE(s.rows[3].outcome.has_value());
  const std::vector<double> unsorted = {0.5, 0.4};
  CHECK_THROWS_AS(Sweep(cfg, Parameter::kBandShare, unsorted, kG, kP),
                  MarketError);
}

TEST_CASE("fixed-utilization sweep holds alpha * beta") {
  const MarketConfig cfg = Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.4);
  const std::vector<double> alphas = {0.25, 0.5, 1.0};
  const auto s = FixedUtilizationSweep(cfg, 0.2, alphas, kG, kP);
  for (const auto& row : s.rows) {
    REQUIRE(row.outcome.has_value());
    MarketConfig c = cfg;
    c.duty_cycle = row.value;
    c.band_share = 0.2 / row.value;
    c.lteu_enabled = row.lteu;
    CHECK(row.outcome->p_incumbent ==
          doctest::Approx(Solve(c, kG, kP).p_incumbent).epsilon(1e-15));
  }
  const std::vector<double> bad = {0.1};
  CHECK_THROWS_AS(FixedUtilizationSweep(cfg, 0.2, bad, kG, kP), MarketError);
  const MarketConfig one = Config(EntrantRegime::kOneLicensedSharing, 1, 1,
                                  0.5, 0.4);
  CHECK_THROWS_AS(FixedUtilizationSweep(one, 0.2, alphas, kG, kP),
                  MarketError);
}

TEST_CASE("fixed-utilization sweep trends") {
  std::vector<double> alphas;
  for (int i = 21; i <= 100; ++i) alphas.push_back(i / 100.0);
  SweepOptions on_only;
  on_only.include_lteu_off = false;
  const auto small = FixedUtilizationSweep(
      Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.4), 0.2, alphas, kG, kP,
      on_only);
  for (size_t i = 1; i < small.rows.size(); ++i) {
    CHECK(small.rows[i].outcome->revenue_incumbent <
          small.rows[i - 1].outcome->revenue_incumbent);
    CHECK(small.rows[i].welfare.consumer_surplus >
          small.rows[i - 1].welfare.consumer_surplus);
  }
  const auto large = FixedUtilizationSweep(
      Config(EntrantRegime::kMulti, 1, 100, 0.5, 0.4), 0.2, alphas, kG, kP,
      on_only);
  // Revenue falls with beta just above beta = k, so it rises with alpha
  // as alpha approaches 1.
  for (size_t i = large.rows.size() - 20; i < large.rows.size(); ++i) {
    CHECK(large.rows[i].outcome->revenue_incumbent >
          large.rows[i - 1].outcome->revenue_incumbent);
  }
  for (size_t i = 1; i < large.rows.size(); ++i) {
    CHECK(large.rows[i].welfare.consumer_surplus >
          large.rows[i - 1].welfare.consumer_surplus);
  }
}

TEST_CASE("empty sweep grid gives an empty result") {
  const std::vector<double> none;
  const auto s = Sweep(Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.5),
                       Parameter::kUnlicensed, none, kG, kP);
  CHECK(s.rows.empty());
  CHECK(s.grid.empty());
}

TEST_CASE("multi-entrant welfare crossover in W") {
  ThresholdQuery q;
  q.metric = Metric::kSocialWelfare;
  q.parameter = Parameter::kUnlicensed;
  q.lo = 0.01;
  q.hi = 100.0;
  q.base = Config(EntrantRegime::kMulti, 1, 1, 0.5, 0.5);
  const auto r = FindThreshold(q, kG, kP);
  REQUIRE(r.found);
  CHECK(r.diff_below > 0.0);
  CHECK(r.diff_above < 0.0);
}

TEST_CASE("licensed sharing gains revenue when the boosted band is small") {
  // gamma B / (1 - alpha) = 1 < 4/3.
  ThresholdQuery q;
  q.metric = Metric::kIncumbentRevenue;
  q.parameter = Parameter::kUnlicensed;
  q.base = Config(EntrantRegime::kOneLicensedSharing, 0.5, 1, 0.5, 0.5);
  for (double w = 0.1; w <= 100.0; w *= 1.25) {
    CHECK(MetricDifference(q, w, kG, kP) > 0.0);
  }
}

TEST_CASE("grid construction") {
  const auto g = MakeGrid(0.0, 1.0, 0.25);
  CHECK(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(MakeGrid(1.0, 1.0, 0.5).size() == 1);
  CHECK_THROWS_AS(MakeGrid(0.0, 1.0, 0.0), MarketError);
  CHECK_THROWS_AS(MakeGrid(1.0, 0.0, 0.1), MarketError);
}
