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

#include "spectrum_market/threshold.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "spectrum_market/errors.h"
#include "spectrum_market/market_model.h"
#include "spectrum_market/numerics.h"

namespace spectrum_market {

namespace {

constexpr struct {
  Metric metric;
  std::string_view name;
} kMetricNames[] = {
    {Metric::kIncumbentRevenue, "revenue"},
    {Metric::kConsumerSurplus, "cs"},
    {Metric::kSocialWelfare, "sw"},
    {Metric::kTotalMass, "mass"},
};

constexpr struct {
  Parameter parameter;
  std::string_view name;
} kParameterNames[] = {
    {Parameter::kUnlicensed, "W"},
    {Parameter::kDutyCycle, "alpha"},
    {Parameter::kBandShare, "beta"},
    {Parameter::kEfficiency, "gamma"},
    {Parameter::kLicensed, "B"},
};

constexpr double kThresholdTol = 1e-8;
constexpr double kSideProbe = 1e-6;

}  // namespace

std::string_view MetricName(Metric metric) {
  for (const auto& entry : kMetricNames) {
    if (entry.metric == metric) return entry.name;
  }
  return "?";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (const auto& entry : kMetricNames) {
    if (entry.name == name) return entry.metric;
  }
  return std::nullopt;
}

std::string_view ParameterName(Parameter parameter) {
  for (const auto& entry : kParameterNames) {
    if (entry.parameter == parameter) return entry.name;
  }
  return "?";
}

std::optional<Parameter> ParseParameter(std::string_view name) {
  for (const auto& entry : kParameterNames) {
    if (entry.name == name) return entry.parameter;
  }
  return std::nullopt;
}

MarketConfig WithParameter(const MarketConfig& cfg, Parameter parameter,
                           double value) {
  MarketConfig copy = cfg;
  switch (parameter) {
    case Parameter::kUnlicensed:
      copy.unlicensed_unbounded = std::isinf(value);
      copy.unlicensed = copy.unlicensed_unbounded ? cfg.unlicensed : value;
      break;
    case Parameter::kDutyCycle:
      copy.duty_cycle = value;
      break;
    case Parameter::kBandShare:
      copy.band_share = value;
      break;
    case Parameter::kEfficiency:
      copy.lte_efficiency = value;
      break;
    case Parameter::kLicensed:
      copy.licensed = value;
      break;
  }
  return copy;
}

double MetricValue(Metric metric, const EquilibriumOutcome& outcome,
                   const WelfareReport& welfare) {
  switch (metric) {
    case Metric::kIncumbentRevenue:
      return outcome.revenue_incumbent;
    case Metric::kConsumerSurplus:
      return welfare.consumer_surplus;
    case Metric::kSocialWelfare:
      return welfare.social_welfare;
    case Metric::kTotalMass:
      return welfare.total_mass;
  }
  return 0.0;
}

double MetricDifference(const ThresholdQuery& query, double value,
                        const CongestionFn& g, const DemandCurve& P) {
  const MarketConfig cfg = WithParameter(query.base, query.parameter, value);
  auto metric_at = [&](bool lteu) {
    const EquilibriumOutcome outcome = Solve(cfg.WithLteu(lteu), g, P);
    return MetricValue(query.metric, outcome, MakeWelfareReport(outcome, P));
  };
  return metric_at(true) - metric_at(false);
}

ThresholdResult FindThreshold(const ThresholdQuery& query,
                              const CongestionFn& g, const DemandCurve& P) {
  if (!(query.lo < query.hi)) {
    Fail(ErrorCode::kInvalidConfig, "threshold bracket needs lo < hi");
  }
  auto diff = [&](double v) { return MetricDifference(query, v, g, P); };
  ThresholdResult result;
  result.diff_lo = diff(query.lo);
  result.diff_hi = diff(query.hi);
  if (result.diff_lo == 0.0) {
    result.found = true;
    result.value = query.lo;
  } else if (result.diff_hi == 0.0) {
    result.found = true;
    result.value = query.hi;
  } else if ((result.diff_lo < 0.0) != (result.diff_hi < 0.0)) {
    result.found = true;
    result.value = Bisect(diff, query.lo, query.hi, kThresholdTol);
  }
  if (result.found) {
    result.diff_below = diff(std::max(query.lo, result.value - kSideProbe));
    result.diff_above = diff(std::min(query.hi, result.value + kSideProbe));
  }
  return result;
}

OptimalDutyCycle OptimalAlpha(const MarketConfig& cfg, const CongestionFn& g,
                              const DemandCurve& P) {
  MarketConfig base = cfg;
  base.regime = EntrantRegime::kOneLicensedSharing;
  base.n_entrants = 1;
  base.lteu_enabled = true;
  base.Validate();
  auto revenue = [&](double alpha) {
    MarketConfig c = base;
    c.duty_cycle = alpha;
    return SolveOneEntrantLicensed(c, g, P).revenue_incumbent;
  };

  OptimalDutyCycle best;
  if (base.unlicensed_unbounded) {
    best.alpha =
        std::max(1.0 - 3.0 * base.lte_efficiency * base.licensed / 4.0, 0.0);
    best.revenue = revenue(best.alpha);
    return best;
  }
  // A coarse scan decides whether golden-section can be trusted. A
  // non-unimodal profile falls back to a dense grid.
  constexpr int kScan = 64;
  std::vector<double> scan(kScan);
  int peak = 0;
  for (int i = 0; i < kScan; ++i) {
    scan[i] = revenue(static_cast<double>(i) / (kScan - 1));
    if (scan[i] > scan[peak]) peak = i;
  }
  bool unimodal = true;
  for (int i = 1; i < kScan; ++i) {
    const double step = scan[i] - scan[i - 1];
    const double slack = 1e-12 * std::max(1.0, std::abs(scan[i]));
    if (i <= peak ? step < -slack : step > slack) unimodal = false;
  }
  if (unimodal) {
    try {
      const double lo = std::max(0, peak - 1) / static_cast<double>(kScan - 1);
      const double hi =
          std::min(kScan - 1, peak + 1) / static_cast<double>(kScan - 1);
      const ArgMax refined = GoldenSectionMax(revenue, lo, hi, 1e-10);
      if (refined.value >= scan[peak]) {
        best.alpha = refined.arg;
        best.revenue = refined.value;
        return best;
      }
    } catch (const MarketError&) {
    }
  }
  constexpr int kDense = 1000;
  best.grid_fallback = true;
  best.revenue = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kDense; ++i) {
    const double alpha = static_cast<double>(i) / kDense;
    const double r = revenue(alpha);
    if (r > best.revenue) {
      best.alpha = alpha;
      best.revenue = r;
    }
  }
  return best;
}

CsGainRegion ConsumerSurplusGainRegion(const MarketConfig& cfg) {
  const double alpha = cfg.duty_cycle;
  const double beta = cfg.band_share;
  const double b = cfg.licensed;
  const double ab = alpha * beta;
  CsGainRegion region;
  const double k_den = 1.0 - beta * (1.0 - alpha);
  // With beta = 1 the entrants lose the band during every ON phase and
  // no gain region exists.
  if (k_den < kDegenerateTol || 1.0 - beta < kDegenerateTol) return region;
  region.k = ab / k_den;
  const double one_minus_k = 1.0 - region.k;
  const double lin = 2.0 * one_minus_k * b + ab;
  region.delta = 2.0 * ab * ab - lin * lin;
  region.licensed_bound = (std::sqrt(2.0) - 1.0) * (1.0 - beta + ab) * ab /
                          (2.0 * (1.0 - beta));
  region.feasible = ab > 0.0 && region.delta >= 0.0;
  if (region.feasible) {
    const double root = std::sqrt(region.delta);
    const double centre = ab - 2.0 * one_minus_k * b;
    region.gamma_lo = (centre - root) / (4.0 * one_minus_k);
    region.gamma_hi = (centre + root) / (4.0 * one_minus_k);
  }
  return region;
}

namespace {

SweepResult RunSweep(std::string parameter, std::span<const double> grid,
                     const std::function<MarketConfig(double)>& config_at,
                     const CongestionFn& g, const DemandCurve& P,
                     const SweepOptions& opts) {
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      Fail(ErrorCode::kInvalidConfig, "sweep grid must be strictly increasing");
    }
  }
  SweepResult result;
  result.parameter = std::move(parameter);
  result.grid.assign(grid.begin(), grid.end());
  for (double v : grid) {
    for (bool lteu : {false, true}) {
      if (lteu ? !opts.include_lteu_on : !opts.include_lteu_off) continue;
      SweepRow row;
      row.value = v;
      row.lteu = lteu;
      result.rows.push_back(std::move(row));
    }
  }

  auto run_row = [&](SweepRow& row) {
    try {
      const MarketConfig cfg = config_at(row.value).WithLteu(row.lteu);
      row.outcome = Solve(cfg, g, P);
      row.welfare = MakeWelfareReport(*row.outcome, P);
    } catch (const MarketError& e) {
      row.error = e.what();
    }
  };

  // Every row owns its slot, so output order is independent of scheduling.
  const unsigned workers = std::max(
      1u, std::min<unsigned>(opts.threads,
                             static_cast<unsigned>(result.rows.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < result.rows.size(); i = next++) {
      run_row(result.rows[i]);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

}  // namespace

SweepResult Sweep(const MarketConfig& cfg, Parameter parameter,
                  std::span<const double> grid, const CongestionFn& g,
                  const DemandCurve& P, const SweepOptions& opts) {
  return RunSweep(
      std::string(ParameterName(parameter)), grid,
      [&](double v) { return WithParameter(cfg, parameter, v); }, g, P, opts);
}

SweepResult FixedUtilizationSweep(const MarketConfig& cfg, double k,
                                  std::span<const double> alpha_grid,
                                  const CongestionFn& g, const DemandCurve& P,
                                  const SweepOptions& opts) {
  if (cfg.regime != EntrantRegime::kMulti) {
    Fail(ErrorCode::kInvalidConfig,
         "fixed-utilization sweeps need the multi-entrant regime");
  }
  if (!(k > 0.0 && k < 1.0)) {
    Fail(ErrorCode::kInvalidConfig, "alpha * beta must lie in (0, 1)");
  }
  for (double alpha : alpha_grid) {
    if (!(alpha > k && alpha <= 1.0)) {
      Fail(ErrorCode::kInvalidConfig,
           "fixed-utilization grid values must lie in (k, 1]");
    }
  }
  return RunSweep(
      "alpha", alpha_grid,
      [&](double alpha) {
        MarketConfig c = cfg;
        c.duty_cycle = alpha;
        c.band_share = k / alpha;
        return c;
      },
      g, P, opts);
}

std::vector<double> MakeGrid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(hi - lo)) {
    Fail(ErrorCode::kInvalidConfig, "grid needs finite lo <= hi and step > 0");
  }
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (long i = 0; i <= n; ++i) grid.push_back(lo + i * step);
  return grid;
}

}  // namespace spectrum_market
