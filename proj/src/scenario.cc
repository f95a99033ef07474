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

#include "spectrum_market/scenario.h"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "spectrum_market/errors.h"

namespace spectrum_market {

ScenarioError::ScenarioError(std::string file, int line, std::string key,
                             const std::string& message)
    : std::runtime_error(file +
                         (line > 0 ? ":" + std::to_string(line) : "") + ": " +
                         (key.empty() ? "" : "key '" + key + "': ") + message),
      file_(std::move(file)),
      line_(line),
      key_(std::move(key)) {}

CongestionFn FunctionSpec::MakeCongestion() const {
  if (congestion == "linear") return CongestionFn::Linear();
  return CongestionFn::Power(congestion_exponent);
}

DemandCurve FunctionSpec::MakeDemand() const {
  if (demand == "homogeneous") {
    return DemandCurve::Homogeneous(demand_size, demand_valuation);
  }
  if (demand == "concave_quadratic") {
    return DemandCurve::Custom(
        [](double q) { return q < 1.0 ? 1.0 - q * q : 0.0; }, 1.0,
        [](double q) { return q < 1.0 ? -2.0 * q : 0.0; },
        [](double q) { return q < 1.0 ? -2.0 : 0.0; }, "concave_quadratic");
  }
  return DemandCurve::Linear();
}

namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class LineParser {
 public:
  LineParser(const std::string& path, int line, std::string key)
      : path_(path), line_(line), key_(std::move(key)) {}

  [[noreturn]] void Error(const std::string& message) const {
    throw ScenarioError(path_, line_, key_, message);
  }

  double Number(const std::string& text) const {
    if (text == "inf") return INFINITY;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0' || errno == ERANGE || std::isnan(v)) {
      Error("expected a number, got '" + text + "'");
    }
    return v;
  }

  double Finite(const std::string& text) const {
    const double v = Number(text);
    if (!std::isfinite(v)) Error("expected a finite number");
    return v;
  }

  int Integer(const std::string& text) const {
    const double v = Finite(text);
    if (v != std::floor(v) || std::fabs(v) > 1e9) Error("expected an integer");
    return static_cast<int>(v);
  }

  bool Flag(const std::string& text) const {
    if (text == "on" || text == "true" || text == "1") return true;
    if (text == "off" || text == "false" || text == "0") return false;
    Error("expected on/off, got '" + text + "'");
  }

  // lo:step:hi or a comma-separated list.
  std::vector<double> Grid(const std::string& text) const {
    std::vector<std::string> parts;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, sep);) {
      parts.push_back(Trim(part));
    }
    if (sep == ':') {
      if (parts.size() != 3) Error("grid range must be lo:step:hi");
      try {
        return MakeGrid(Finite(parts[0]), Finite(parts[2]), Finite(parts[1]));
      } catch (const MarketError& e) {
        Error(e.what());
      }
    }
    std::vector<double> grid;
    for (const auto& p : parts) grid.push_back(Number(p));
    if (grid.empty()) Error("grid is empty");
    return grid;
  }

 private:
  const std::string& path_;
  int line_;
  std::string key_;
};

}  // namespace

Scenario ParseScenario(const std::string& text, const std::string& path) {
  Scenario sc;
  sc.path = path;
  std::optional<int> n_entrants;
  std::string section;
  int market_line = 0;
  std::set<std::string> seen;
  std::istringstream in(text);
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto comment = raw.find_first_of("#;");
    const std::string line =
        Trim(comment == std::string::npos ? raw : raw.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ScenarioError(path, line_no, "", "malformed section header");
      }
      section = Trim(line.substr(1, line.size() - 2));
      if (section != "market" && section != "functions" && section != "run") {
        throw ScenarioError(path, line_no, "",
                            "unknown section [" + section + "]");
      }
      if (section == "market" && market_line == 0) market_line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError(path, line_no, "", "expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    LineParser p(path, line_no, key);
    if (section.empty()) p.Error("key outside of any section");
    if (!seen.insert(section + "." + key).second) p.Error("duplicate key");

    MarketConfig& m = sc.market;
    FunctionSpec& f = sc.functions;
    RunSpec& r = sc.run;
    if (section == "market") {
      if (key == "B") {
        m.licensed = p.Finite(value);
      } else if (key == "W") {
        const double w = p.Number(value);
        m.unlicensed_unbounded = std::isinf(w);
        if (!m.unlicensed_unbounded) m.unlicensed = w;
      } else if (key == "alpha") {
        m.duty_cycle = p.Finite(value);
      } else if (key == "beta") {
        m.band_share = p.Finite(value);
      } else if (key == "gamma") {
        m.lte_efficiency = p.Finite(value);
      } else if (key == "n_entrants") {
        n_entrants = p.Integer(value);
      } else if (key == "regime") {
        const auto regime = ParseRegime(value);
        if (!regime) p.Error("unknown regime '" + value + "'");
        m.regime = *regime;
      } else if (key == "lteu") {
        sc.lteu = p.Flag(value);
      } else {
        p.Error("unknown key in [market]");
      }
    } else if (section == "functions") {
      if (key == "demand") {
        if (value != "linear" && value != "homogeneous" &&
            value != "concave_quadratic") {
          p.Error("unknown demand '" + value + "'");
        }
        f.demand = value;
      } else if (key == "demand_A") {
        f.demand_size = p.Finite(value);
      } else if (key == "demand_T") {
        f.demand_valuation = p.Finite(value);
      } else if (key == "congestion") {
        if (value != "linear" && value != "power") {
          p.Error("unknown congestion '" + value + "'");
        }
        f.congestion = value;
      } else if (key == "congestion_exponent") {
        f.congestion_exponent = p.Finite(value);
      } else {
        p.Error("unknown key in [functions]");
      }
    } else {
      if (key == "parameter") {
        const auto param = ParseParameter(value);
        if (!param) p.Error("unknown parameter '" + value + "'");
        r.parameter = *param;
      } else if (key == "grid") {
        r.grid = p.Grid(value);
      } else if (key == "fixed_utilization") {
        r.fixed_utilization = p.Finite(value);
      } else if (key == "metric") {
        const auto metric = ParseMetric(value);
        if (!metric) p.Error("unknown metric '" + value + "'");
        r.metric = *metric;
      } else if (key == "bracket") {
        const auto grid = p.Grid(value);
        if (grid.size() != 2) p.Error("bracket must be lo,hi");
        r.bracket_lo = grid[0];
        r.bracket_hi = grid[1];
        r.has_bracket = true;
      } else if (key == "threads") {
        const int t = p.Integer(value);
        if (t < 1) p.Error("threads must be >= 1");
        r.threads = static_cast<unsigned>(t);
      } else if (key == "output") {
        r.output = value;
      } else {
        p.Error("unknown key in [run]");
      }
    }
  }

  if (n_entrants) {
    sc.market.n_entrants = *n_entrants;
  } else {
    switch (sc.market.regime) {
      case EntrantRegime::kNone:
        sc.market.n_entrants = 0;
        break;
      case EntrantRegime::kMulti:
        sc.market.n_entrants = 2;
        break;
      default:
        sc.market.n_entrants = 1;
        break;
    }
  }
  if (sc.lteu) sc.market.lteu_enabled = *sc.lteu;
  try {
    sc.market.Validate();
  } catch (const MarketError& e) {
    throw ScenarioError(path, market_line, "", e.what());
  }
  return sc;
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, 0, "", "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str(), path);
}

}  // namespace spectrum_market
