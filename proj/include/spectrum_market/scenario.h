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

#ifndef SPECTRUM_MARKET_SCENARIO_H_
#define SPECTRUM_MARKET_SCENARIO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectrum_market/functions.h"
#include "spectrum_market/market_config.h"
#include "spectrum_market/threshold.h"

namespace spectrum_market {

// A parse failure anchored to the offending line and key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string file, int line, std::string key,
                const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  std::string file_;
  int line_;
  std::string key_;
};

struct FunctionSpec {
  std::string demand = "linear";  // linear | homogeneous | concave_quadratic
  double demand_size = 1.0;       // A
  double demand_valuation = 1.0;  // T
  std::string congestion = "linear";  // linear | power
  double congestion_exponent = 2.0;

  CongestionFn MakeCongestion() const;
  DemandCurve MakeDemand() const;
};

struct RunSpec {
  Parameter parameter = Parameter::kUnlicensed;
  std::vector<double> grid;
  std::optional<double> fixed_utilization;  // sweep alpha with alpha*beta = k
  Metric metric = Metric::kIncumbentRevenue;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  bool has_bracket = false;
  unsigned threads = 1;
  std::string output;  // empty: standard output
};

struct Scenario {
  std::string path;
  MarketConfig market;
  // Set when the file pins lteu; otherwise commands cover both settings.
  std::optional<bool> lteu;
  FunctionSpec functions;
  RunSpec run;
};

// Sections [market], [functions] and [run] with `key = value` lines;
// '#' and ';' start comments. Unknown sections and keys are errors.
Scenario ParseScenario(const std::string& text, const std::string& path);
Scenario LoadScenario(const std::string& path);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_SCENARIO_H_
