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

#ifndef SPECTRUM_MARKET_THRESHOLD_H_
#define SPECTRUM_MARKET_THRESHOLD_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectrum_market/equilibrium.h"
#include "spectrum_market/functions.h"
#include "spectrum_market/market_config.h"
#include "spectrum_market/welfare.h"

namespace spectrum_market {

enum class Metric {
  kIncumbentRevenue,
  kConsumerSurplus,
  kSocialWelfare,
  kTotalMass,
};

enum class Parameter {
  kUnlicensed,  // W
  kDutyCycle,   // alpha
  kBandShare,   // beta
  kEfficiency,  // gamma
  kLicensed,    // B
};

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);
std::string_view ParameterName(Parameter parameter);
std::optional<Parameter> ParseParameter(std::string_view name);

// Copy of `cfg` with one parameter replaced. Setting W clears the
// unbounded flag.
MarketConfig WithParameter(const MarketConfig& cfg, Parameter parameter,
                           double value);

double MetricValue(Metric metric, const EquilibriumOutcome& outcome,
                   const WelfareReport& welfare);

// Compares LTE-U on against off for one metric while a single parameter
// moves across [lo, hi].
struct ThresholdQuery {
  Metric metric = Metric::kIncumbentRevenue;
  Parameter parameter = Parameter::kUnlicensed;
  double lo = 0.0;
  double hi = 1.0;
  MarketConfig base;
};

struct ThresholdResult {
  bool found = false;
  double value = 0.0;
  // Metric difference (on minus off) at the bracket endpoints.
  double diff_lo = 0.0;
  double diff_hi = 0.0;
  // Differences at value -+ 1e-6, filled when found.
  double diff_below = 0.0;
  double diff_above = 0.0;
};

// metric(LTE-U on) - metric(LTE-U off) at the given parameter value.
double MetricDifference(const ThresholdQuery& query, double value,
                        const CongestionFn& g, const DemandCurve& P);

// Bisection on the metric difference to 1e-8. An endpoint pair without a
// sign change is reported through found = false rather than thrown.
ThresholdResult FindThreshold(const ThresholdQuery& query,
                              const CongestionFn& g, const DemandCurve& P);

struct OptimalDutyCycle {
  double alpha = 0.0;
  double revenue = 0.0;
  bool grid_fallback = false;
};

// Revenue-maximising duty cycle for the incumbent facing one entrant under
// licensed sharing. Unbounded W uses max{1 - 3 gamma B / 4, 0}. Finite W
// uses golden-section when a 64-point scan is unimodal, else a 1e-3 grid.
OptimalDutyCycle OptimalAlpha(const MarketConfig& cfg, const CongestionFn& g,
                              const DemandCurve& P);

struct CsGainRegion {
  bool feasible = false;
  double licensed_bound = 0.0;  // largest B admitting a gain
  double k = 0.0;               // alpha beta / (1 - beta (1 - alpha))
  double delta = 0.0;           // discriminant
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
};

// Parameter region in which LTE-U can raise consumer surplus against
// multiple entrants (linear model). Never throws; beta = 1 is infeasible.
CsGainRegion ConsumerSurplusGainRegion(const MarketConfig& cfg);

struct SweepRow {
  double value = 0.0;
  bool lteu = false;
  std::optional<EquilibriumOutcome> outcome;
  WelfareReport welfare;
  std::string error;  // empty on success
};

// Rows are ordered by (grid index, lteu off before on).
struct SweepResult {
  std::string parameter;
  std::vector<double> grid;
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  unsigned threads = 1;
  bool include_lteu_off = true;
  bool include_lteu_on = true;
};

// One solve per grid value and LTE-U setting. Failures are captured in the
// row's `error` and never abort the sweep. Throws kInvalidConfig if the
// grid is not strictly increasing.
SweepResult Sweep(const MarketConfig& cfg, Parameter parameter,
                  std::span<const double> grid, const CongestionFn& g,
                  const DemandCurve& P, const SweepOptions& opts = {});

// Multi-entrant sweep over alpha holding alpha * beta = k. Every grid value
// must lie in (k, 1].
SweepResult FixedUtilizationSweep(const MarketConfig& cfg, double k,
                                  std::span<const double> alpha_grid,
                                  const CongestionFn& g, const DemandCurve& P,
                                  const SweepOptions& opts = {});

// lo, lo + step, ... up to hi (inclusive within 1e-9 of a step).
std::vector<double> MakeGrid(double lo, double hi, double step);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_THRESHOLD_H_
