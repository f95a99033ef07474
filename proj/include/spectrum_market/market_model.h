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

#ifndef SPECTRUM_MARKET_MARKET_MODEL_H_
#define SPECTRUM_MARKET_MARKET_MODEL_H_

#include "spectrum_market/functions.h"
#include "spectrum_market/market_config.h"

namespace spectrum_market {

// Single-band bandwidths whose linear congestion reproduces the
// duty-cycle averaged congestion of the incumbent and of the entrants.
struct EffectiveBands {
  double licensed;    // B_e
  double unlicensed;  // W_e; meaningless when unlicensed_unbounded
  bool unlicensed_unbounded = false;

  // B_e + W_e; +inf for an unbounded unlicensed band.
  double Total() const;
};

// Denominators smaller than this are treated as zero.
inline constexpr double kDegenerateTol = 1e-12;

//   B_e = gamma * [B + alpha*beta*W / (1 + beta*(1-alpha)*W/B)]
//   W_e = W - alpha*beta*W / (1 - beta*(1-alpha))
// With LTE-U off the bands are (gamma*B, W). For W -> infinity,
// B_e -> gamma*B/(1-alpha) whenever alpha*beta > 0.
EffectiveBands ComputeEffectiveBands(const MarketConfig& cfg);

// Time-averaged congestion of incumbent customers carrying mass x1:
//   alpha*g(x1/(gamma(B+beta W))) + (1-alpha)*g(x1/(gamma B)).
double IncumbentCongestion(double x1, const MarketConfig& cfg,
                           const CongestionFn& g);

// Time-averaged congestion of the unlicensed pool carrying mass w:
//   alpha*g(w/((1-beta)W)) + (1-alpha)*g(w/W).
// Returns +inf for positive mass on a band with no capacity, and throws
// kDegenerateDenominator when beta = 1 leaves no ON-phase capacity.
double EntrantCongestion(double w, const MarketConfig& cfg,
                         const CongestionFn& g);

// Spectral-efficiency factor above which LTE-U enlarges the monopolist's
// total equivalent bandwidth:
//   (1 + beta(1-alpha)W/B) / (1 - beta(1-alpha)).
double GammaThreshold(const MarketConfig& cfg);

// Throws kDegenerateDenominator when LTE-U with beta = 1 leaves the
// entrants without spectrum during the ON phase of a nonempty band.
void CheckEntrantCapacity(const MarketConfig& cfg);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_MARKET_MODEL_H_
