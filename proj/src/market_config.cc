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

#include "spectrum_market/market_config.h"

#include <cmath>
#include <sstream>

#include "spectrum_market/errors.h"

namespace spectrum_market {

std::string_view RegimeName(EntrantRegime regime) {
  switch (regime) {
    case EntrantRegime::kNone:
      return "none";
    case EntrantRegime::kMulti:
      return "multi";
    case EntrantRegime::kOneLicensedSharing:
      return "one_licensed_sharing";
    case EntrantRegime::kOneUnlicensedSharing:
      return "one_unlicensed_sharing";
  }
  return "unknown";
}

std::optional<EntrantRegime> ParseRegime(std::string_view name) {
  for (auto regime :
       {EntrantRegime::kNone, EntrantRegime::kMulti,
        EntrantRegime::kOneLicensedSharing,
        EntrantRegime::kOneUnlicensedSharing}) {
    if (RegimeName(regime) == name) return regime;
  }
  return std::nullopt;
}

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kInvalidConfig, what);
}

}  // namespace

void MarketConfig::Validate() const {
  Require(std::isfinite(licensed) && licensed > 0.0, "B must be > 0");
  if (!unlicensed_unbounded) {
    Require(std::isfinite(unlicensed) && unlicensed >= 0.0, "W must be >= 0");
  }
  Require(duty_cycle >= 0.0 && duty_cycle <= 1.0, "alpha must lie in [0, 1]");
  Require(band_share >= 0.0 && band_share <= 1.0, "beta must lie in [0, 1]");
  Require(std::isfinite(lte_efficiency) && lte_efficiency >= 1.0,
          "gamma must be >= 1");
  Require(n_entrants >= 0, "n_entrants must be >= 0");
  switch (regime) {
    case EntrantRegime::kNone:
      Require(n_entrants == 0, "regime none requires n_entrants = 0");
      break;
    case EntrantRegime::kMulti:
      Require(n_entrants >= 2, "regime multi requires n_entrants >= 2");
      break;
    case EntrantRegime::kOneLicensedSharing:
    case EntrantRegime::kOneUnlicensedSharing:
      Require(n_entrants == 1, "single-entrant regimes require n_entrants = 1");
      break;
  }
}

std::string Describe(const MarketConfig& cfg) {
  std::ostringstream out;
  out << "B=" << cfg.licensed << " W=";
  if (cfg.unlicensed_unbounded) {
    out << "inf";
  } else {
    out << cfg.unlicensed;
  }
  out << " alpha=" << cfg.duty_cycle << " beta=" << cfg.band_share
      << " gamma=" << cfg.lte_efficiency << " entrants=" << cfg.n_entrants
      << " regime=" << RegimeName(cfg.regime)
      << " lteu=" << (cfg.lteu_enabled ? "on" : "off");
  return out.str();
}

}  // namespace spectrum_market
