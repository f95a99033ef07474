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

#include "spectrum_market/welfare.h"

#include <algorithm>
#include <cmath>

#include "spectrum_market/errors.h"
#include "spectrum_market/market_model.h"
#include "spectrum_market/numerics.h"

namespace spectrum_market {

double ConsumerSurplus(const EquilibriumOutcome& outcome,
                       const DemandCurve& P) {
  const double q = outcome.TotalMass();
  if (q <= 0.0) return 0.0;
  if (P.is_linear()) return 0.5 * q * q;
  if (P.is_homogeneous()) return q * (P.valuation() - outcome.delivered_price);
  return AdaptiveSimpson([&](double s) { return P(s); }, 0.0, q) - q * P(q);
}

WelfareReport MakeWelfareReport(const EquilibriumOutcome& outcome,
                                const DemandCurve& P) {
  WelfareReport report;
  report.consumer_surplus = ConsumerSurplus(outcome, P);
  report.producer_revenue =
      outcome.revenue_incumbent + outcome.revenue_entrants;
  report.social_welfare = report.consumer_surplus + report.producer_revenue;
  report.total_mass = outcome.TotalMass();
  return report;
}

SmallWSlopes SmallUnlicensedSlopes(const MarketConfig& cfg,
                                   const CongestionFn& g,
                                   const DemandCurve& P) {
  cfg.Validate();
  if (P.is_homogeneous()) {
    Fail(ErrorCode::kUnsupportedFunctions,
         "small-W slopes need a differentiable demand curve");
  }
  const double alpha = cfg.duty_cycle;
  const double beta = cfg.band_share;
  if (alpha > 0.0 && 1.0 - beta < kDegenerateTol) {
    Fail(ErrorCode::kDegenerateDenominator,
         "beta = 1 leaves no unlicensed capacity during the ON phase");
  }
  const double b = cfg.lte_efficiency * cfg.licensed;

  // Monopoly optimum on the licensed band alone: marginal revenue equals
  // marginal congestion cost.
  auto foc = [&](double x) {
    const double load = x / b;
    return x * P.Deriv(x) + P(x) - g(load) - load * g.Deriv(load);
  };
  const double x = Bisect(foc, 0.0, P.ZeroMass());
  const double load = x / b;
  const double dp = P.Deriv(x);
  const double d2p = P.Deriv2(x);
  const double num = dp + x * d2p;
  const double den = 2.0 * g.Deriv(load) / b + x * g.Deriv2(load) / (b * b) -
                     2.0 * dp - x * d2p;
  const double scale = -x * dp * num / den;

  const double level = P(x);
  auto h = [&](double t) {
    return (1.0 - alpha) * g(t) + alpha * g(t / (1.0 - beta));
  };
  double hi = 1.0;
  while (h(hi) < level) hi *= 2.0;
  const double h_inv =
      BisectBoundary([&](double t) { return h(t) < level; }, 0.0, hi);

  SmallWSlopes slopes;
  slopes.monopoly_mass = x;
  slopes.without_lteu = scale * g.Inverse(level);
  slopes.with_lteu = scale * h_inv;
  return slopes;
}

namespace {

// Welfare of the licensed-sharing market as W -> infinity, in terms of the
// effective licensed band b.
double AsymptoticWelfare(double b) {
  const double d = 4.0 + 3.0 * b;
  return (9.0 * b * b + 22.0 * b + 12.0) / (2.0 * d * d);
}

}  // namespace

std::vector<double> AsymptoticWelfareGap(double licensed,
                                         std::span<const double> duty_cycles) {
  if (!(licensed > 0.0)) Fail(ErrorCode::kInvalidConfig, "B must be > 0");
  std::vector<double> gaps;
  gaps.reserve(duty_cycles.size());
  const double base = AsymptoticWelfare(licensed);
  for (double alpha : duty_cycles) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      Fail(ErrorCode::kInvalidConfig, "alpha must lie in [0, 1]");
    }
    // b -> infinity as alpha -> 1, where welfare tends to 1/2.
    const double with =
        alpha >= 1.0 ? 0.5 : AsymptoticWelfare(licensed / (1.0 - alpha));
    gaps.push_back(with - base);
  }
  return gaps;
}

}  // namespace spectrum_market
