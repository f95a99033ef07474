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

#include "spectrum_market/market_model.h"

#include <algorithm>
#include <limits>

#include "spectrum_market/errors.h"

namespace spectrum_market {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double EffectiveBands::Total() const {
  return unlicensed_unbounded ? kInf : licensed + unlicensed;
}

EffectiveBands ComputeEffectiveBands(const MarketConfig& cfg) {
  cfg.Validate();
  const double gamma = cfg.lte_efficiency;
  const double b = cfg.licensed;
  const double alpha = cfg.duty_cycle;
  const double beta = cfg.band_share;
  if (!cfg.LteuActive()) {
    return {gamma * b, cfg.unlicensed_unbounded ? kInf : cfg.unlicensed,
            cfg.unlicensed_unbounded};
  }
  if (cfg.unlicensed_unbounded) {
    if (1.0 - alpha <= kDegenerateTol) {
      Fail(ErrorCode::kDegenerateDenominator,
           "B_e = gamma B / (1 - alpha) is unbounded at alpha = 1");
    }
    return {gamma * b / (1.0 - alpha), kInf, true};
  }
  const double w = cfg.unlicensed;
  if (w == 0.0) return {gamma * b, 0.0, false};
  const double off_share = beta * (1.0 - alpha);
  const double denom = 1.0 - off_share;
  if (denom <= kDegenerateTol) {
    Fail(ErrorCode::kDegenerateDenominator,
         "1 - beta (1 - alpha) vanishes with W > 0");
  }
  const double licensed_e =
      gamma * (b + alpha * beta * w / (1.0 + off_share * w / b));
  const double unlicensed_e = std::max(0.0, w - alpha * beta * w / denom);
  return {licensed_e, unlicensed_e, false};
}

double IncumbentCongestion(double x1, const MarketConfig& cfg,
                           const CongestionFn& g) {
  if (x1 <= 0.0) return 0.0;
  const double licensed = cfg.lte_efficiency * cfg.licensed;
  if (!cfg.LteuActive()) return g(x1 / licensed);
  const double alpha = cfg.duty_cycle;
  const double on_phase =
      cfg.unlicensed_unbounded
          ? 0.0
          : g(x1 / (cfg.lte_efficiency *
                    (cfg.licensed + cfg.band_share * cfg.unlicensed)));
  return alpha * on_phase + (1.0 - alpha) * g(x1 / licensed);
}

double EntrantCongestion(double w, const MarketConfig& cfg,
                         const CongestionFn& g) {
  if (w <= 0.0) return 0.0;
  if (cfg.unlicensed_unbounded) return 0.0;
  if (cfg.unlicensed <= 0.0) return kInf;
  const double band = cfg.unlicensed;
  if (!cfg.LteuActive()) return g(w / band);
  CheckEntrantCapacity(cfg);
  const double alpha = cfg.duty_cycle;
  return alpha * g(w / ((1.0 - cfg.band_share) * band)) +
         (1.0 - alpha) * g(w / band);
}

double GammaThreshold(const MarketConfig& cfg) {
  cfg.Validate();
  if (cfg.unlicensed_unbounded || !(cfg.unlicensed > 0.0)) {
    Fail(ErrorCode::kInvalidConfig,
         "gamma threshold needs a finite unlicensed band W > 0");
  }
  const double off_share = cfg.band_share * (1.0 - cfg.duty_cycle);
  const double denom = 1.0 - off_share;
  if (denom <= kDegenerateTol) {
    Fail(ErrorCode::kDegenerateDenominator,
         "1 - beta (1 - alpha) vanishes with W > 0");
  }
  return (1.0 + off_share * cfg.unlicensed / cfg.licensed) / denom;
}

void CheckEntrantCapacity(const MarketConfig& cfg) {
  if (cfg.LteuActive() && cfg.HasUnlicensed() &&
      1.0 - cfg.band_share <= kDegenerateTol) {
    Fail(ErrorCode::kDegenerateDenominator,
         "beta = 1 leaves the unlicensed pool no bandwidth while LTE-U is on");
  }
}

}  // namespace spectrum_market
