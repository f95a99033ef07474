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
#include <functional>

#include "doctest.h"
#include "oracle.h"
#include "spectrum_market/errors.h"
#include "spectrum_market/market_model.h"

using namespace spectrum_market;

namespace {

MarketConfig Lteu(double b, double w, double alpha, double beta,
                  double gamma = 1.0) {
  MarketConfig cfg;
  cfg.licensed = b;
  cfg.unlicensed = w;
  cfg.duty_cycle = alpha;
  cfg.band_share = beta;
  cfg.lte_efficiency = gamma;
  cfg.lteu_enabled = true;
  return cfg;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const MarketError& e) {
    return e.code();
  }
  FAIL("expected a MarketError");
  return ErrorCode::kInvalidConfig;
}

}  // namespace

TEST_CASE("config validation rejects out-of-range fields") {
  MarketConfig cfg;
  CHECK_NOTHROW(cfg.Validate());
  auto bad = [](auto mutate) {
    MarketConfig c;
    mutate(c);
    return CodeOf([&] { c.Validate(); });
  };
  CHECK(bad([](MarketConfig& c) { c.licensed = 0.0; }) ==
        ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) { c.unlicensed = -1.0; }) ==
        ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) { c.duty_cycle = 1.5; }) ==
        ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) { c.band_share = -0.1; }) ==
        ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) { c.lte_efficiency = 0.9; }) ==
        ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) {
          c.regime = EntrantRegime::kMulti;
          c.n_entrants = 1;
        }) == ErrorCode::kInvalidConfig);
  CHECK(bad([](MarketConfig& c) {
          c.regime = EntrantRegime::kOneLicensedSharing;
          c.n_entrants = 2;
        }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("regime names round-trip") {
  for (auto r : {EntrantRegime::kNone, EntrantRegime::kMulti,
                 EntrantRegime::kOneLicensedSharing,
                 EntrantRegime::kOneUnlicensedSharing}) {
    CHECK(ParseRegime(RegimeName(r)) == r);
  }
  CHECK_FALSE(ParseRegime("duopoly").has_value());
}

TEST_CASE("effective bands agree with the duty-cycle harmonic mean") {
  for (double b : {0.5, 1.0, 2.0}) {
    for (double w : {0.1, 1.0, 10.0}) {
      for (double alpha : {0.25, 0.5, 0.75}) {
        for (double beta : {0.25, 0.5, 0.75}) {
          for (double gamma : {1.0, 1.3, 2.5}) {
            const auto bands =
                ComputeEffectiveBands(Lteu(b, w, alpha, beta, gamma));
            CHECK(bands.licensed ==
                  doctest::Approx(
                      oracle::IncumbentBand(b, w, alpha, beta, gamma))
                      .epsilon(1e-13));
            CHECK(bands.unlicensed ==
                  doctest::Approx(oracle::EntrantBand(w, alpha, beta))
                      .epsilon(1e-13));
          }
        }
      }
    }
  }
}

TEST_CASE("effective bands reference values") {
  const auto bands = ComputeEffectiveBands(Lteu(1, 1, 0.5, 0.5));
  CHECK(bands.licensed == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(bands.unlicensed == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(bands.Total() == doctest::Approx(28.0 / 15.0).epsilon(1e-15));

  const MarketConfig off = Lteu(1, 1, 0.5, 0.5, 2.0).WithLteu(false);
  const auto plain = ComputeEffectiveBands(off);
  CHECK(plain.licensed == 2.0);
  CHECK(plain.unlicensed == 1.0);
}

TEST_CASE("unbounded unlicensed band limit") {
  MarketConfig cfg = Lteu(1, 1, 0.25, 0.2);
  cfg.unlicensed_unbounded = true;
  const auto bands = ComputeEffectiveBands(cfg);
  CHECK(bands.unlicensed_unbounded);
  CHECK(bands.licensed == doctest::Approx(1.0 / 0.75).epsilon(1e-14));
  CHECK(std::isinf(bands.Total()));
  // The finite formula approaches the limit.
  const auto far = ComputeEffectiveBands(Lteu(1, 1e9, 0.25, 0.2));
  CHECK(far.licensed == doctest::Approx(bands.licensed).epsilon(1e-7));
}

TEST_CASE("zero duty cycle or share leaves the bands untouched") {
  for (const auto& cfg : {Lteu(1, 2, 0.0, 0.5), Lteu(1, 2, 0.5, 0.0)}) {
    const auto bands = ComputeEffectiveBands(cfg);
    CHECK(bands.licensed == doctest::Approx(1.0));
    CHECK(bands.unlicensed == doctest::Approx(2.0));
  }
}

TEST_CASE("congestion with linear g matches the effective bands") {
  const auto g = CongestionFn::Linear();
  const MarketConfig cfg = Lteu(1, 3, 0.4, 0.3, 1.5);
  const auto bands = ComputeEffectiveBands(cfg);
  for (double x : {0.0, 0.1, 0.7}) {
    CHECK(IncumbentCongestion(x, cfg, g) ==
          doctest::Approx(x / bands.licensed).epsilon(1e-13));
    CHECK(EntrantCongestion(x, cfg, g) ==
          doctest::Approx(x / bands.unlicensed).epsilon(1e-13));
  }
}

TEST_CASE("congestion with power g averages over the duty cycle") {
  const auto g = CongestionFn::Power(2.0);
  const MarketConfig cfg = Lteu(1, 2, 0.5, 0.5);
  const double x = 0.6;
  const double expected_inc =
      0.5 * std::pow(x / 2.0, 2) + 0.5 * std::pow(x / 1.0, 2);
  const double expected_ent =
      0.5 * std::pow(x / 1.0, 2) + 0.5 * std::pow(x / 2.0, 2);
  CHECK(IncumbentCongestion(x, cfg, g) == doctest::Approx(expected_inc));
  CHECK(EntrantCongestion(x, cfg, g) == doctest::Approx(expected_ent));
}

TEST_CASE("entrant congestion edge cases") {
  const auto g = CongestionFn::Linear();
  const MarketConfig empty = Lteu(1, 0, 0.5, 0.5);
  CHECK(EntrantCongestion(0.0, empty, g) == 0.0);
  CHECK(std::isinf(EntrantCongestion(0.1, empty, g)));
  MarketConfig unbounded = Lteu(1, 1, 0.5, 0.5);
  unbounded.unlicensed_unbounded = true;
  CHECK(EntrantCongestion(5.0, unbounded, g) == 0.0);
  const MarketConfig full_share = Lteu(1, 1, 0.5, 1.0);
  CHECK(CodeOf([&] { EntrantCongestion(0.1, full_share, g); }) ==
        ErrorCode::kDegenerateDenominator);
  CHECK(CodeOf([&] { CheckEntrantCapacity(full_share); }) ==
        ErrorCode::kDegenerateDenominator);
  CHECK_NOTHROW(CheckEntrantCapacity(full_share.WithLteu(false)));
}

TEST_CASE("spectral-efficiency threshold") {
  CHECK(GammaThreshold(Lteu(1, 1, 0.5, 0.5)) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  // At the threshold LTE-U leaves the total equivalent band unchanged.
  for (double alpha : {0.2, 0.6}) {
    for (double beta : {0.3, 0.8}) {
      MarketConfig cfg = Lteu(2, 0.7, alpha, beta);
      cfg.lte_efficiency = GammaThreshold(cfg);
      const double with = ComputeEffectiveBands(cfg).Total();
      const double without =
          ComputeEffectiveBands(cfg.WithLteu(false)).Total();
      CHECK(with == doctest::Approx(without).epsilon(1e-12));
    }
  }
  MarketConfig unbounded = Lteu(1, 1, 0.5, 0.5);
  unbounded.unlicensed_unbounded = true;
  CHECK(CodeOf([&] { GammaThreshold(unbounded); }) ==
        ErrorCode::kInvalidConfig);
}
