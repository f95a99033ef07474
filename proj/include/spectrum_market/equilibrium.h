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

#ifndef SPECTRUM_MARKET_EQUILIBRIUM_H_
#define SPECTRUM_MARKET_EQUILIBRIUM_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectrum_market/functions.h"
#include "spectrum_market/market_config.h"
#include "spectrum_market/market_model.h"

namespace spectrum_market {

// The monopolist's two offerings: the licensed service (LTE-U aggregated
// when enabled) and a plain unlicensed service on the remaining band.
struct MonopolyServices {
  double p_licensed = 0.0;
  double x_licensed = 0.0;
  double p_unlicensed = 0.0;
  double x_unlicensed = 0.0;
};

struct EquilibriumOutcome {
  EntrantRegime regime = EntrantRegime::kNone;
  bool lteu = false;
  EffectiveBands bands{};

  // For the monopoly, p_incumbent is revenue / x_incumbent and the
  // per-service split lives in `services`.
  double p_incumbent = 0.0;
  double x_incumbent = 0.0;
  // Common price of the entrants; masses are reported only in aggregate.
  double p_entrant = 0.0;
  double w_total = 0.0;
  double delivered_price = 0.0;
  double revenue_incumbent = 0.0;
  double revenue_entrants = 0.0;
  std::optional<MonopolyServices> services;
  // Case index (1..3) when solved under homogeneous demand.
  int homogeneous_region = 0;

  double TotalMass() const { return x_incumbent + w_total; }
};

enum class Service {
  kIncumbent,              // LTE-U aggregated when the config enables it
  kIncumbentLicensedOnly,  // licensed band only, regardless of LTE-U
  kUnlicensedPool,         // entrants (or the monopolist's unlicensed offer)
};

struct ServiceOffer {
  Service service;
  double price;
};

struct WardropSplitResult {
  std::vector<double> masses;
  double delivered_price = 0.0;
  double total_mass = 0.0;
};

// Customer allocation satisfying the Wardrop conditions for fixed prices.
// When every price is at least P(0) nobody is served and all masses are
// zero. Homogeneous demand is handled by case analysis on whether the
// market is covered.
WardropSplitResult WardropSplit(std::span<const ServiceOffer> offers,
                                const MarketConfig& cfg,
                                const CongestionFn& g, const DemandCurve& P);

// Shorthand for offers {incumbent, unlicensed pool} at the given prices.
WardropSplitResult WardropSplit(double incumbent_price, double pool_price,
                                const MarketConfig& cfg,
                                const CongestionFn& g, const DemandCurve& P);

struct SolveOptions {
  // Use closed forms for linear g and linear P where they exist. Turning
  // this off forces the generic numeric path (used to cross-check).
  bool closed_form = true;
};

EquilibriumOutcome SolveMonopoly(const MarketConfig& cfg,
                                 const CongestionFn& g, const DemandCurve& P,
                                 const SolveOptions& opts = {});

EquilibriumOutcome SolveMultiEntrant(const MarketConfig& cfg,
                                     const CongestionFn& g,
                                     const DemandCurve& P,
                                     const SolveOptions& opts = {});

// Linear g and linear P only.
EquilibriumOutcome SolveOneEntrantLicensed(const MarketConfig& cfg,
                                           const CongestionFn& g,
                                           const DemandCurve& P);

EquilibriumOutcome SolveOneEntrantUnlicensed(const MarketConfig& cfg,
                                             const CongestionFn& g,
                                             const DemandCurve& P,
                                             const SolveOptions& opts = {});

// Dispatches on cfg.regime after validating the config and the functions.
EquilibriumOutcome Solve(const MarketConfig& cfg, const CongestionFn& g,
                         const DemandCurve& P, const SolveOptions& opts = {});

struct PriceDeviation {
  std::string player;
  double base_revenue = 0.0;
  double best_price = 0.0;
  double best_revenue = 0.0;
  double improvement = 0.0;
};

struct NashReport {
  std::vector<PriceDeviation> deviations;
  double max_improvement = 0.0;
  bool pass = true;
};

// Brute-force unilateral deviation scan over `grid_size` + 1 prices on
// [0, P(0)] per price-setting player. Passes iff no deviation improves the
// player's revenue by more than `eps`.
NashReport VerifyNash(const EquilibriumOutcome& outcome,
                      const MarketConfig& cfg, const CongestionFn& g,
                      const DemandCurve& P, int grid_size = 2000,
                      double eps = 1e-4);

struct HomogeneousWelfare {
  double social_welfare;
  int region;
};

// Social welfare of the multi-entrant market without LTE-U under
// homogeneous demand (market size A, valuation T) and linear congestion.
HomogeneousWelfare HomogeneousSocialWelfare(double market_size,
                                            double valuation,
                                            double licensed,
                                            double unlicensed);

// Largest W for which LTE-U cannot lower welfare under homogeneous demand:
//   (sqrt(A^2 + B^2 T^2) - B T + A) / (2 T).
double HomogeneousWelfareBoundary(double market_size, double valuation,
                                  double licensed);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_EQUILIBRIUM_H_
