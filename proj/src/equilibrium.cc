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

#include "spectrum_market/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectrum_market/errors.h"
#include "spectrum_market/numerics.h"

namespace spectrum_market {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassTol = 1e-12;
constexpr double kArgTol = 1e-10;

// Per-service congestion model resolved once per split.
struct ServiceModel {
  Service service;
  double price;
  bool unlimited = false;  // zero congestion at any load
  bool empty = false;      // no bandwidth at all
  double capacity = 0.0;   // equivalent bandwidth when g is linear
};

double ServiceCongestion(Service service, double mass, const MarketConfig& cfg,
                         const CongestionFn& g) {
  switch (service) {
    case Service::kIncumbent:
      return IncumbentCongestion(mass, cfg, g);
    case Service::kIncumbentLicensedOnly:
      return IncumbentCongestion(mass, cfg.WithLteu(false), g);
    case Service::kUnlicensedPool:
      return EntrantCongestion(mass, cfg, g);
  }
  return kInf;
}

ServiceModel ResolveService(const ServiceOffer& offer,
                            const EffectiveBands& bands,
                            const MarketConfig& cfg) {
  ServiceModel model{offer.service, offer.price};
  switch (offer.service) {
    case Service::kIncumbent:
      model.capacity = bands.licensed;
      break;
    case Service::kIncumbentLicensedOnly:
      model.capacity = cfg.lte_efficiency * cfg.licensed;
      break;
    case Service::kUnlicensedPool:
      model.unlimited = cfg.unlicensed_unbounded;
      model.empty = !cfg.HasUnlicensed();
      model.capacity = bands.unlicensed;
      break;
  }
  return model;
}

// Mass a finite service carries when its congestion equals `level`.
double MassAtLevel(const ServiceModel& s, double level,
                   const MarketConfig& cfg, const CongestionFn& g) {
  if (level <= 0.0 || s.empty) return 0.0;
  if (g.is_linear()) return level * s.capacity;
  double hi = 1.0;
  for (int i = 0; ServiceCongestion(s.service, hi, cfg, g) < level; ++i) {
    if (i > 1000) return kInf;
    hi *= 2.0;
  }
  return BisectBoundary(
      [&](double m) {
        return ServiceCongestion(s.service, m, cfg, g) < level;
      },
      0.0, hi, kMassTol * std::max(1.0, hi));
}

// Smallest q with P(q) <= price, i.e. the mass an uncongested service at
// `price` would fill.
double DemandAtPrice(const DemandCurve& P, double price) {
  if (price <= 0.0) return P.ZeroMass();
  if (P.is_linear()) return std::clamp(1.0 - price, 0.0, 1.0);
  return BisectBoundary([&](double q) { return P(q) > price; }, 0.0,
                        P.ZeroMass(), kMassTol * std::max(1.0, P.ZeroMass()));
}

WardropSplitResult HomogeneousSplit(const std::vector<ServiceModel>& services,
                                    const MarketConfig& cfg,
                                    const CongestionFn& g,
                                    const DemandCurve& P) {
  const double size = P.market_size();
  const double valuation = P.valuation();
  WardropSplitResult result;
  result.masses.assign(services.size(), 0.0);

  auto supply = [&](double delivered) {
    double total = 0.0;
    for (const auto& s : services) {
      if (s.unlimited) {
        if (delivered > s.price) return kInf;
        continue;
      }
      total += MassAtLevel(s, delivered - s.price, cfg, g);
    }
    return total;
  };
  auto fill = [&](double delivered, double cap) {
    double used = 0.0;
    int unlimited_index = -1;
    for (size_t i = 0; i < services.size(); ++i) {
      if (services[i].unlimited) {
        if (unlimited_index < 0 || services[i].price <
                                       services[unlimited_index].price) {
          unlimited_index = static_cast<int>(i);
        }
        continue;
      }
      result.masses[i] = MassAtLevel(services[i], delivered - services[i].price,
                                     cfg, g);
      used += result.masses[i];
    }
    if (unlimited_index >= 0 && delivered >= services[unlimited_index].price &&
        cap > used) {
      result.masses[unlimited_index] = cap - used;
    }
    result.delivered_price = delivered;
  };

  double cheapest_unlimited = kInf;
  for (const auto& s : services) {
    if (s.unlimited) cheapest_unlimited = std::min(cheapest_unlimited, s.price);
  }
  const double top = std::min(valuation, cheapest_unlimited);
  if (top >= valuation && supply(valuation) <= size) {
    // Uncovered market: everyone served pays the valuation.
    fill(valuation, supply(valuation));
  } else {
    // Covered market: the delivered price rations exactly A customers.
    double lo = valuation;
    for (const auto& s : services) lo = std::min(lo, s.price);
    lo = std::max(lo, 0.0);
    double delivered;
    if (top < valuation && supply(top) <= size) {
      delivered = top;
    } else if (supply(top) > size || std::isinf(supply(top))) {
      const double hi = top;
      delivered = BisectBoundary(
          [&](double d) { return supply(d) <= size; }, lo, hi,
          kMassTol * std::max(1.0, valuation));
    } else {
      delivered = top;
    }
    fill(delivered, size);
  }
  for (double m : result.masses) result.total_mass += m;
  return result;
}

}  // namespace

WardropSplitResult WardropSplit(std::span<const ServiceOffer> offers,
                                const MarketConfig& cfg,
                                const CongestionFn& g, const DemandCurve& P) {
  for (const auto& offer : offers) {
    if (!(offer.price >= 0.0)) {
      Fail(ErrorCode::kInvalidConfig, "service prices must be >= 0");
    }
  }
  const EffectiveBands bands = ComputeEffectiveBands(cfg);
  std::vector<ServiceModel> services;
  services.reserve(offers.size());
  for (const auto& offer : offers) {
    services.push_back(ResolveService(offer, bands, cfg));
  }
  if (P.is_homogeneous()) return HomogeneousSplit(services, cfg, g, P);

  WardropSplitResult result;
  result.masses.assign(services.size(), 0.0);
  const double max_price = P.MaxPrice();
  result.delivered_price = max_price;

  bool any_active = false;
  double cheapest_unlimited = kInf;
  for (const auto& s : services) {
    if (s.empty || s.price >= max_price) continue;
    any_active = true;
    if (s.unlimited) cheapest_unlimited = std::min(cheapest_unlimited, s.price);
  }
  if (!any_active) return result;

  auto finite_supply = [&](double q) {
    const double delivered = P(q);
    double total = 0.0;
    for (const auto& s : services) {
      if (s.unlimited) continue;
      total += MassAtLevel(s, delivered - s.price, cfg, g);
    }
    return total;
  };

  const double zero_mass = P.ZeroMass();
  double q_star;
  double unlimited_mass = 0.0;
  int unlimited_index = -1;
  if (std::isfinite(cheapest_unlimited)) {
    // Total mass can never exceed what the cheapest uncongested service
    // would attract on its own.
    const double cap = DemandAtPrice(P, cheapest_unlimited);
    const double finite = finite_supply(cap);
    if (finite <= cap) {
      q_star = cap;
      unlimited_mass = cap - finite;
      for (size_t i = 0; i < services.size(); ++i) {
        if (services[i].unlimited && services[i].price == cheapest_unlimited) {
          unlimited_index = static_cast<int>(i);
          break;
        }
      }
    } else {
      // Finite services alone push the delivered price below the pool's
      // price, which then sells nothing.
      q_star = Bisect([&](double q) { return finite_supply(q) - q; }, cap,
                      zero_mass, kMassTol * std::max(1.0, zero_mass));
    }
  } else {
    q_star = Bisect([&](double q) { return finite_supply(q) - q; }, 0.0,
                    zero_mass, kMassTol * std::max(1.0, zero_mass));
  }

  const double delivered = P(q_star);
  for (size_t i = 0; i < services.size(); ++i) {
    if (services[i].unlimited) continue;
    result.masses[i] = MassAtLevel(services[i], delivered - services[i].price,
                                   cfg, g);
  }
  if (unlimited_index >= 0) result.masses[unlimited_index] = unlimited_mass;
  result.delivered_price = delivered;
  for (double m : result.masses) result.total_mass += m;
  return result;
}

WardropSplitResult WardropSplit(double incumbent_price, double pool_price,
                                const MarketConfig& cfg,
                                const CongestionFn& g, const DemandCurve& P) {
  const ServiceOffer offers[] = {{Service::kIncumbent, incumbent_price},
                                 {Service::kUnlicensedPool, pool_price}};
  return WardropSplit(offers, cfg, g, P);
}

// ---------------------------------------------------------------------------
// Monopoly

namespace {

EquilibriumOutcome MonopolyFromServices(const MarketConfig& cfg,
                                        const EffectiveBands& bands,
                                        const MonopolyServices& s,
                                        double delivered) {
  EquilibriumOutcome out;
  out.regime = EntrantRegime::kNone;
  out.lteu = cfg.lteu_enabled;
  out.bands = bands;
  out.services = s;
  out.x_incumbent = s.x_licensed + s.x_unlicensed;
  out.revenue_incumbent =
      s.p_licensed * s.x_licensed + s.p_unlicensed * s.x_unlicensed;
  out.p_incumbent =
      out.x_incumbent > 0.0 ? out.revenue_incumbent / out.x_incumbent : 0.0;
  out.delivered_price = delivered;
  return out;
}

EquilibriumOutcome MonopolyEqualCongestion(const MarketConfig& cfg,
                                           const EffectiveBands& bands,
                                           const DemandCurve& P,
                                           const SolveOptions& opts) {
  // Linear g: both services run at the same load per unit bandwidth, so the
  // monopolist behaves as a single service on B_e + W_e.
  const double total_bw = bands.Total();
  const double inv_bw = std::isinf(total_bw) ? 0.0 : 1.0 / total_bw;
  double mass;
  if (opts.closed_form && P.is_linear()) {
    mass = std::isinf(total_bw) ? 0.5 : total_bw / (2.0 * (total_bw + 1.0));
  } else {
    mass = GoldenSectionMax(
               [&](double x) { return x * (P(x) - x * inv_bw); }, 0.0,
               P.ZeroMass(), kArgTol)
               .arg;
  }
  const double price = P(mass) - mass * inv_bw;
  MonopolyServices s;
  s.p_licensed = price;
  s.p_unlicensed = price;
  if (std::isinf(total_bw)) {
    s.x_unlicensed = mass;
  } else {
    s.x_licensed = mass * bands.licensed * inv_bw;
    s.x_unlicensed = mass * bands.unlicensed * inv_bw;
  }
  return MonopolyFromServices(cfg, bands, s, P(mass));
}

EquilibriumOutcome MonopolyTwoService(const MarketConfig& cfg,
                                      const EffectiveBands& bands,
                                      const CongestionFn& g,
                                      const DemandCurve& P) {
  const double zero_mass = P.ZeroMass();
  auto revenue = [&](double xl, double xu) {
    const double delivered = P(xl + xu);
    double r = xl * (delivered - IncumbentCongestion(xl, cfg, g));
    if (xu > 0.0) r += xu * (delivered - EntrantCongestion(xu, cfg, g));
    return r;
  };
  const bool has_unlicensed = cfg.HasUnlicensed();
  auto best_unlicensed = [&](double xl) -> ArgMax {
    if (!has_unlicensed || xl >= zero_mass) return {0.0, revenue(xl, 0.0)};
    return GoldenSectionMax([&](double xu) { return revenue(xl, xu); }, 0.0,
                            zero_mass - xl, kArgTol);
  };
  const ArgMax outer = GoldenSectionMax(
      [&](double xl) { return best_unlicensed(xl).value; }, 0.0, zero_mass,
      kArgTol);
  const double xl = outer.arg;
  const double xu = best_unlicensed(xl).arg;
  const double delivered = P(xl + xu);
  MonopolyServices s;
  s.x_licensed = xl;
  s.x_unlicensed = xu;
  s.p_licensed = delivered - IncumbentCongestion(xl, cfg, g);
  s.p_unlicensed =
      xu > 0.0 ? delivered - EntrantCongestion(xu, cfg, g) : delivered;
  return MonopolyFromServices(cfg, bands, s, delivered);
}

}  // namespace

EquilibriumOutcome SolveMonopoly(const MarketConfig& cfg,
                                 const CongestionFn& g, const DemandCurve& P,
                                 const SolveOptions& opts) {
  cfg.Validate();
  if (P.is_homogeneous()) {
    Fail(ErrorCode::kUnsupportedFunctions,
         "monopoly solver needs a continuous demand curve");
  }
  CheckEntrantCapacity(cfg);
  const EffectiveBands bands = ComputeEffectiveBands(cfg);
  if (g.is_linear()) return MonopolyEqualCongestion(cfg, bands, P, opts);
  return MonopolyTwoService(cfg, bands, g, P);
}

// ---------------------------------------------------------------------------
// Competition

namespace {

EquilibriumOutcome HomogeneousMultiEntrant(const MarketConfig& cfg,
                                           const EffectiveBands& bands,
                                           const DemandCurve& P) {
  // Entrants price at zero; the incumbent's revenue is concave in its price
  // with a kink where the market becomes covered.
  const double size = P.market_size();
  const double valuation = P.valuation();
  const double b = bands.licensed;
  EquilibriumOutcome out;
  out.regime = EntrantRegime::kMulti;
  out.lteu = cfg.lteu_enabled;
  out.bands = bands;
  if (bands.unlicensed_unbounded) {
    out.w_total = size;
    out.delivered_price = 0.0;
    out.homogeneous_region = 3;
    return out;
  }
  const double w = bands.unlicensed;
  const double covered_price = valuation - (size - valuation * w) / b;
  double p1;
  double delivered;
  if (valuation / 2.0 >= covered_price) {
    out.homogeneous_region = 1;
    p1 = valuation / 2.0;
    delivered = valuation;
  } else if (w > 0.0 && size / (2.0 * w) <= covered_price) {
    out.homogeneous_region = 3;
    p1 = size / (2.0 * w);
    delivered = (size + p1 * b) / (w + b);
  } else {
    out.homogeneous_region = 2;
    p1 = covered_price;
    delivered = valuation;
  }
  out.p_incumbent = p1;
  out.x_incumbent = (delivered - p1) * b;
  out.w_total = delivered * w;
  out.delivered_price = delivered;
  out.revenue_incumbent = p1 * out.x_incumbent;
  return out;
}

EquilibriumOutcome MultiEntrantNumeric(const MarketConfig& cfg,
                                       const EffectiveBands& bands,
                                       const CongestionFn& g,
                                       const DemandCurve& P) {
  EquilibriumOutcome out;
  out.regime = EntrantRegime::kMulti;
  out.lteu = cfg.lteu_enabled;
  out.bands = bands;
  const double zero_mass = P.ZeroMass();
  if (cfg.unlicensed_unbounded) {
    // A free, uncongested pool absorbs the whole market.
    out.w_total = zero_mass;
    out.delivered_price = P(zero_mass);
    return out;
  }
  const bool has_pool = cfg.HasUnlicensed();
  // Entrant mass implied by the zero-price Wardrop condition for a given
  // incumbent mass: g_en(w) = P(x1 + w).
  auto pool_mass = [&](double x1) {
    if (!has_pool || x1 >= zero_mass) return 0.0;
    auto gap = [&](double w) { return P(x1 + w) - EntrantCongestion(w, cfg, g); };
    if (gap(0.0) <= 0.0) return 0.0;
    return Bisect(gap, 0.0, zero_mass - x1, kMassTol);
  };
  auto revenue = [&](double x1) {
    const double w = pool_mass(x1);
    return x1 * (P(x1 + w) - IncumbentCongestion(x1, cfg, g));
  };
  const double x1 = GoldenSectionMax(revenue, 0.0, zero_mass, kArgTol).arg;
  const double w = pool_mass(x1);
  out.x_incumbent = x1;
  out.w_total = w;
  out.delivered_price = P(x1 + w);
  out.p_incumbent = out.delivered_price - IncumbentCongestion(x1, cfg, g);
  out.revenue_incumbent = out.p_incumbent * x1;
  return out;
}

}  // namespace

EquilibriumOutcome SolveMultiEntrant(const MarketConfig& cfg,
                                     const CongestionFn& g,
                                     const DemandCurve& P,
                                     const SolveOptions& opts) {
  cfg.Validate();
  CheckEntrantCapacity(cfg);
  const EffectiveBands bands = ComputeEffectiveBands(cfg);
  if (P.is_homogeneous()) {
    if (!g.is_linear()) {
      Fail(ErrorCode::kUnsupportedFunctions,
           "homogeneous demand is supported with linear congestion only");
    }
    return HomogeneousMultiEntrant(cfg, bands, P);
  }
  if (!(opts.closed_form && g.is_linear() && P.is_linear())) {
    return MultiEntrantNumeric(cfg, bands, g, P);
  }
  EquilibriumOutcome out;
  out.regime = EntrantRegime::kMulti;
  out.lteu = cfg.lteu_enabled;
  out.bands = bands;
  if (bands.unlicensed_unbounded) {
    out.w_total = 1.0;
    return out;
  }
  const double b = bands.licensed;
  const double w = bands.unlicensed;
  out.p_incumbent = 1.0 / (2.0 * (1.0 + w));
  out.x_incumbent = b / (2.0 * (1.0 + b + w));
  out.w_total = w * (2.0 + 2.0 * w + b) / (2.0 * (1.0 + w) * (1.0 + b + w));
  out.delivered_price = 1.0 - out.x_incumbent - out.w_total;
  out.revenue_incumbent = out.p_incumbent * out.x_incumbent;
  return out;
}

EquilibriumOutcome SolveOneEntrantLicensed(const MarketConfig& cfg,
                                           const CongestionFn& g,
                                           const DemandCurve& P) {
  cfg.Validate();
  if (!g.is_linear() || !P.is_linear()) {
    Fail(ErrorCode::kUnsupportedFunctions,
         "licensed sharing is solved for linear congestion and demand only");
  }
  CheckEntrantCapacity(cfg);
  const EffectiveBands bands = ComputeEffectiveBands(cfg);
  const double b = bands.licensed;
  EquilibriumOutcome out;
  out.regime = EntrantRegime::kOneLicensedSharing;
  out.lteu = cfg.lteu_enabled;
  out.bands = bands;
  if (bands.unlicensed_unbounded) {
    const double denom = 4.0 + 3.0 * b;
    out.p_incumbent = 1.0 / denom;
    out.x_incumbent = b / denom;
    out.p_entrant = 2.0 / denom;
    out.w_total = 2.0 * (1.0 + b) / denom;
  } else {
    const double w = bands.unlicensed;
    const double denom = 4.0 + 4.0 * b + 4.0 * w + 3.0 * b * w;
    out.p_incumbent = (2.0 + 2.0 * b + w) / denom;
    out.p_entrant = (2.0 + b + 2.0 * w) / denom;
    out.x_incumbent = out.p_incumbent * b * (1.0 + w) / (1.0 + b + w);
    out.w_total = out.p_entrant * w * (1.0 + b) / (1.0 + b + w);
  }
  out.delivered_price = 1.0 - out.x_incumbent - out.w_total;
  out.revenue_incumbent = out.p_incumbent * out.x_incumbent;
  out.revenue_entrants = out.p_entrant * out.w_total;
  return out;
}

EquilibriumOutcome SolveOneEntrantUnlicensed(const MarketConfig& cfg,
                                             const CongestionFn& g,
                                             const DemandCurve& P,
                                             const SolveOptions& opts) {
  // Head-to-head on the unlicensed band drives its price to zero, exactly
  // as with many entrants.
  EquilibriumOutcome out = SolveMultiEntrant(cfg, g, P, opts);
  out.regime = EntrantRegime::kOneUnlicensedSharing;
  return out;
}

EquilibriumOutcome Solve(const MarketConfig& cfg, const CongestionFn& g,
                         const DemandCurve& P, const SolveOptions& opts) {
  cfg.Validate();
  if (!g.is_linear()) g.ValidateShape(P.ZeroMass());
  if (P.kind() == DemandKind::kCustom) P.ValidateShape();
  switch (cfg.regime) {
    case EntrantRegime::kNone:
      return SolveMonopoly(cfg, g, P, opts);
    case EntrantRegime::kMulti:
      return SolveMultiEntrant(cfg, g, P, opts);
    case EntrantRegime::kOneLicensedSharing:
      return SolveOneEntrantLicensed(cfg, g, P);
    case EntrantRegime::kOneUnlicensedSharing:
      return SolveOneEntrantUnlicensed(cfg, g, P, opts);
  }
  Fail(ErrorCode::kInvalidConfig, "unknown regime");
}

// ---------------------------------------------------------------------------
// Nash verification

namespace {

PriceDeviation ScanPrices(const std::string& player, double base_revenue,
                          double max_price, int grid_size,
                          const std::function<double(double)>& revenue_at) {
  PriceDeviation dev;
  dev.player = player;
  dev.base_revenue = base_revenue;
  dev.best_revenue = -kInf;
  for (int k = 0; k <= grid_size; ++k) {
    const double price = max_price * k / grid_size;
    const double r = revenue_at(price);
    if (r > dev.best_revenue) {
      dev.best_revenue = r;
      dev.best_price = price;
    }
  }
  dev.improvement = dev.best_revenue - base_revenue;
  return dev;
}

}  // namespace

NashReport VerifyNash(const EquilibriumOutcome& outcome,
                      const MarketConfig& cfg, const CongestionFn& g,
                      const DemandCurve& P, int grid_size, double eps) {
  if (grid_size < 100) {
    Fail(ErrorCode::kInvalidConfig, "Nash verification needs grid >= 100");
  }
  const double max_price = P.MaxPrice();
  NashReport report;

  if (outcome.regime == EntrantRegime::kNone) {
    const MonopolyServices s = outcome.services.value_or(MonopolyServices{});
    auto total = [&](double pl, double pu) {
      const ServiceOffer offers[] = {{Service::kIncumbent, pl},
                                     {Service::kUnlicensedPool, pu}};
      const auto split = WardropSplit(offers, cfg, g, P);
      return pl * split.masses[0] + pu * split.masses[1];
    };
    const double base = total(s.p_licensed, s.p_unlicensed);
    report.deviations.push_back(
        ScanPrices("incumbent/licensed", base, max_price, grid_size,
                   [&](double p) { return total(p, s.p_unlicensed); }));
    if (cfg.HasUnlicensed()) {
      report.deviations.push_back(
          ScanPrices("incumbent/unlicensed", base, max_price, grid_size,
                     [&](double p) { return total(s.p_licensed, p); }));
    }
  } else {
    const double p1 = outcome.p_incumbent;
    const double p2 = outcome.p_entrant;
    auto split_at = [&](double inc, double pool) {
      return WardropSplit(inc, pool, cfg, g, P);
    };
    const auto base_split = split_at(p1, p2);
    report.deviations.push_back(ScanPrices(
        "incumbent", p1 * base_split.masses[0], max_price, grid_size,
        [&](double p) { return p * split_at(p, p2).masses[0]; }));
    if (outcome.regime == EntrantRegime::kOneLicensedSharing) {
      report.deviations.push_back(ScanPrices(
          "entrant", p2 * base_split.masses[1], max_price, grid_size,
          [&](double p) { return p * split_at(p1, p).masses[1]; }));
    } else {
      // A rival keeps offering the unlicensed service at zero, so a
      // unilateral price increase attracts nobody.
      PriceDeviation dev;
      dev.player = "entrant";
      dev.base_revenue = p2 * base_split.masses[1];
      report.deviations.push_back(dev);
    }
  }

  for (const auto& dev : report.deviations) {
    report.max_improvement = std::max(report.max_improvement, dev.improvement);
  }
  report.pass = report.max_improvement <= eps;
  return report;
}

// ---------------------------------------------------------------------------
// Homogeneous demand welfare

double HomogeneousWelfareBoundary(double market_size, double valuation,
                                  double licensed) {
  const double a = market_size;
  const double t = valuation;
  const double b = licensed;
  return (std::sqrt(a * a + b * b * t * t) - b * t + a) / (2.0 * t);
}

HomogeneousWelfare HomogeneousSocialWelfare(double market_size,
                                            double valuation,
                                            double licensed,
                                            double unlicensed) {
  const double a = market_size;
  const double t = valuation;
  const double b = licensed;
  const double w = unlicensed;
  if (!(a > 0.0 && t > 0.0 && b > 0.0 && w >= 0.0)) {
    Fail(ErrorCode::kInvalidConfig,
         "homogeneous welfare needs A, T, B > 0 and W >= 0");
  }
  if (w <= std::max(a / t - b / 2.0, 0.0)) {
    return {b * t * t / 4.0, 1};
  }
  if (w <= HomogeneousWelfareBoundary(a, t, b)) {
    const double unserved = a - w * t;
    return {unserved * (t - unserved / b), 2};
  }
  return {a * t - a * a * (b + 4.0 * w) / (4.0 * w * (b + w)), 3};
}

}  // namespace spectrum_market
