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

#ifndef SPECTRUM_MARKET_MARKET_CONFIG_H_
#define SPECTRUM_MARKET_MARKET_CONFIG_H_

#include <optional>
#include <string>
#include <string_view>

namespace spectrum_market {

enum class EntrantRegime {
  kNone,                  // monopoly incumbent
  kMulti,                 // two or more entrants on the unlicensed band
  kOneLicensedSharing,    // single entrant owns the unlicensed band
  kOneUnlicensedSharing,  // single entrant, incumbent also contests it
};

std::string_view RegimeName(EntrantRegime regime);
std::optional<EntrantRegime> ParseRegime(std::string_view name);

// Exogenous market parameters. `unlicensed_unbounded` models W -> infinity;
// `unlicensed` is ignored when it is set.
struct MarketConfig {
  double licensed = 1.0;    // B
  double unlicensed = 1.0;  // W
  bool unlicensed_unbounded = false;
  double duty_cycle = 0.0;      // alpha
  double band_share = 0.0;      // beta
  double lte_efficiency = 1.0;  // gamma
  int n_entrants = 0;
  bool lteu_enabled = false;
  EntrantRegime regime = EntrantRegime::kNone;

  // Throws MarketError(kInvalidConfig) naming the first offending field.
  void Validate() const;

  MarketConfig WithLteu(bool enabled) const {
    MarketConfig copy = *this;
    copy.lteu_enabled = enabled;
    return copy;
  }

  // LTE-U is active and actually takes spectrum from the unlicensed band.
  bool LteuActive() const {
    return lteu_enabled && duty_cycle > 0.0 && band_share > 0.0;
  }

  bool HasUnlicensed() const {
    return unlicensed_unbounded || unlicensed > 0.0;
  }
};

std::string Describe(const MarketConfig& cfg);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_MARKET_CONFIG_H_
