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

#ifndef SPECTRUM_MARKET_WELFARE_H_
#define SPECTRUM_MARKET_WELFARE_H_

#include <span>
#include <vector>

#include "spectrum_market/equilibrium.h"
#include "spectrum_market/functions.h"
#include "spectrum_market/market_config.h"

namespace spectrum_market {

struct WelfareReport {
  double consumer_surplus = 0.0;
  double producer_revenue = 0.0;
  double social_welfare = 0.0;
  double total_mass = 0.0;
};

// CS = integral_0^Q P(q) dq - Q P(Q). Closed form for linear (Q^2/2) and
// homogeneous demand (Q times the gap between valuation and delivered
// price); adaptive Simpson otherwise.
double ConsumerSurplus(const EquilibriumOutcome& outcome,
                       const DemandCurve& P);

WelfareReport MakeWelfareReport(const EquilibriumOutcome& outcome,
                                const DemandCurve& P);

struct SmallWSlopes {
  double without_lteu;
  double with_lteu;
  double monopoly_mass;  // x*
};

// Limiting dSW/dW as W -> 0 in the multi-entrant market, from the
// linearised incumbent first-order condition around the monopoly optimum.
SmallWSlopes SmallUnlicensedSlopes(const MarketConfig& cfg,
                                   const CongestionFn& g,
                                   const DemandCurve& P);

// SW(with LTE-U) - SW(without) in the one-entrant licensed-sharing market
// with an unbounded unlicensed band, one value per duty cycle.
std::vector<double> AsymptoticWelfareGap(double licensed,
                                         std::span<const double> duty_cycles);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_WELFARE_H_
