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

#include "spectrum_market/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

#include "CLI11.hpp"
#include "spectrum_market/csv.h"
#include "spectrum_market/errors.h"
#include "spectrum_market/scenario.h"

namespace spectrum_market {

namespace {

// numerator / denominator for numerator in [first, last]; exact decimal
// grids without accumulated rounding.
std::vector<double> Ratios(int first, int last, int denominator) {
  std::vector<double> grid;
  for (int i = first; i <= last; ++i) {
    grid.push_back(static_cast<double>(i) / denominator);
  }
  return grid;
}

MarketConfig Market(EntrantRegime regime, double b, double w, double alpha,
                    double beta, double gamma = 1.0) {
  MarketConfig cfg;
  cfg.regime = regime;
  cfg.n_entrants = regime == EntrantRegime::kNone    ? 0
                   : regime == EntrantRegime::kMulti ? 2
                                                     : 1;
  cfg.licensed = b;
  cfg.unlicensed_unbounded = std::isinf(w);
  if (!cfg.unlicensed_unbounded) cfg.unlicensed = w;
  cfg.duty_cycle = alpha;
  cfg.band_share = beta;
  cfg.lte_efficiency = gamma;
  return cfg;
}

std::string Fixed(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<bool> LteuSettings(const Scenario& sc) {
  if (sc.lteu) return {*sc.lteu};
  return {false, true};
}

void PrintOutcome(std::ostream& out, const EquilibriumOutcome& o,
                  const WelfareReport& w) {
  out << "  bands      B_e=" << Fixed(o.bands.licensed) << " W_e="
      << Fixed(o.bands.unlicensed_unbounded ? INFINITY : o.bands.unlicensed)
      << '\n';
  out << "  incumbent  p1=" << Fixed(o.p_incumbent)
      << " x1=" << Fixed(o.x_incumbent)
      << " revenue=" << Fixed(o.revenue_incumbent) << '\n';
  if (o.services) {
    const auto& s = *o.services;
    out << "  services   p_licensed=" << Fixed(s.p_licensed)
        << " x_licensed=" << Fixed(s.x_licensed)
        << " p_unlicensed=" << Fixed(s.p_unlicensed)
        << " x_unlicensed=" << Fixed(s.x_unlicensed) << '\n';
  } else {
    out << "  entrants   p_ent=" << Fixed(o.p_entrant)
        << " w_t=" << Fixed(o.w_total)
        << " revenue=" << Fixed(o.revenue_entrants) << '\n';
  }
  out << "  welfare    cs=" << Fixed(w.consumer_surplus)
      << " sw=" << Fixed(w.social_welfare) << " mass=" << Fixed(w.total_mass)
      << " delivered=" << Fixed(o.delivered_price) << '\n';
}

void ReportError(std::ostream& err, const MarketError& e) {
  err << "error: " << e.what() << '\n';
}

int CmdSolve(const Scenario& sc, std::ostream& out, std::ostream& err) {
  const CongestionFn g = sc.functions.MakeCongestion();
  const DemandCurve P = sc.functions.MakeDemand();
  out << "scenario " << sc.path << '\n';
  out << "market   " << Describe(sc.market) << '\n';
  out << "functions demand=" << sc.functions.demand
      << " congestion=" << sc.functions.congestion << '\n';
  int status = kExitOk;
  for (bool lteu : LteuSettings(sc)) {
    out << "[lteu " << (lteu ? "on" : "off") << "]\n";
    try {
      const EquilibriumOutcome o = Solve(sc.market.WithLteu(lteu), g, P);
      PrintOutcome(out, o, MakeWelfareReport(o, P));
    } catch (const MarketError& e) {
      out << "  failed: " << ErrorCodeName(e.code()) << '\n';
      ReportError(err, e);
      status = kExitSolverError;
    }
  }
  return status;
}

// Writes CSV to `path` or, when empty, to `out`.
int EmitCsv(const std::vector<SweepResult>& sweeps, const std::string& path,
            std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << path << '\n';
      return kExitParseError;
    }
  }
  std::ostream& sink = path.empty() ? out : file;
  bool failed = false;
  for (size_t i = 0; i < sweeps.size(); ++i) {
    WriteSweepCsv(sink, sweeps[i], i == 0);
    for (const auto& row : sweeps[i].rows) {
      if (row.error.empty()) continue;
      failed = true;
      err << "error: " << sweeps[i].parameter << "=" << FormatNumber(row.value)
          << " lteu=" << (row.lteu ? "on" : "off") << ": " << row.error
          << '\n';
    }
  }
  sink.flush();
  return failed ? kExitSolverError : kExitOk;
}

int CmdSweep(const Scenario& sc, unsigned threads_override, std::ostream& out,
             std::ostream& err) {
  if (sc.run.grid.empty()) {
    throw ScenarioError(sc.path, 0, "grid", "[run] grid is required");
  }
  SweepOptions opts;
  opts.threads = threads_override > 0 ? threads_override : sc.run.threads;
  if (sc.lteu) {
    opts.include_lteu_off = !*sc.lteu;
    opts.include_lteu_on = *sc.lteu;
  }
  const CongestionFn g = sc.functions.MakeCongestion();
  const DemandCurve P = sc.functions.MakeDemand();
  SweepResult result =
      sc.run.fixed_utilization
          ? FixedUtilizationSweep(sc.market, *sc.run.fixed_utilization,
                                  sc.run.grid, g, P, opts)
          : Sweep(sc.market, sc.run.parameter, sc.run.grid, g, P, opts);
  return EmitCsv({result}, sc.run.output, out, err);
}

int CmdThreshold(const Scenario& sc, std::ostream& out, std::ostream& err) {
  if (!sc.run.has_bracket) {
    throw ScenarioError(sc.path, 0, "bracket", "[run] bracket is required");
  }
  ThresholdQuery query;
  query.metric = sc.run.metric;
  query.parameter = sc.run.parameter;
  query.lo = sc.run.bracket_lo;
  query.hi = sc.run.bracket_hi;
  query.base = sc.market;
  const ThresholdResult r = FindThreshold(query, sc.functions.MakeCongestion(),
                                          sc.functions.MakeDemand());
  out << "threshold parameter=" << ParameterName(query.parameter)
      << " metric=" << MetricName(query.metric) << '\n';
  out << "bracket lo=" << FormatNumber(query.lo)
      << " hi=" << FormatNumber(query.hi)
      << " diff_lo=" << FormatNumber(r.diff_lo)
      << " diff_hi=" << FormatNumber(r.diff_hi) << '\n';
  if (!r.found) {
    err << "error: NoSignChange: on-minus-off " << MetricName(query.metric)
        << " keeps its sign on [" << FormatNumber(query.lo) << ", "
        << FormatNumber(query.hi) << "]: diff(" << FormatNumber(query.lo)
        << ")=" << FormatNumber(r.diff_lo) << " diff("
        << FormatNumber(query.hi) << ")=" << FormatNumber(r.diff_hi) << '\n';
    return kExitNoSignChange;
  }
  out << "crossing value=" << FormatNumber(r.value)
      << " diff_below=" << FormatNumber(r.diff_below)
      << " diff_above=" << FormatNumber(r.diff_above) << '\n';
  return kExitOk;
}

int CmdVerify(const Scenario& sc, int grid, double eps, std::ostream& out,
              std::ostream& err) {
  const CongestionFn g = sc.functions.MakeCongestion();
  const DemandCurve P = sc.functions.MakeDemand();
  int status = kExitOk;
  for (bool lteu : LteuSettings(sc)) {
    const MarketConfig cfg = sc.market.WithLteu(lteu);
    out << "[lteu " << (lteu ? "on" : "off") << "]\n";
    try {
      const EquilibriumOutcome o = Solve(cfg, g, P);
      const NashReport report = VerifyNash(o, cfg, g, P, grid, eps);
      for (const auto& d : report.deviations) {
        out << "  " << d.player << " base=" << FormatNumber(d.base_revenue)
            << " best_price=" << FormatNumber(d.best_price)
            << " best=" << FormatNumber(d.best_revenue)
            << " gain=" << FormatNumber(d.improvement) << '\n';
      }
      out << "  " << (report.pass ? "PASS" : "FAIL")
          << " max_gain=" << FormatNumber(report.max_improvement) << '\n';
      if (!report.pass && status == kExitOk) status = kExitVerifyFailed;
    } catch (const MarketError& e) {
      ReportError(err, e);
      status = kExitSolverError;
    }
  }
  return status;
}

}  // namespace

std::vector<std::string> FigureNames() {
  return {"fig2", "fig3a", "fig3b", "fig4", "fig5a",
          "fig5b", "fig6", "fig7", "fig8"};
}

std::vector<SweepResult> FigureSweeps(const std::string& name,
                                      unsigned threads) {
  const CongestionFn g = CongestionFn::Linear();
  const DemandCurve P = DemandCurve::Linear();
  SweepOptions opts;
  opts.threads = threads;
  const auto one = EntrantRegime::kOneLicensedSharing;
  const auto multi = EntrantRegime::kMulti;

  if (name == "fig2") {
    const std::vector<double> grid = Ratios(0, 990, 1000);
    return {Sweep(Market(one, 1.0, INFINITY, 0.0, 0.2), Parameter::kDutyCycle,
                  grid, g, P, opts)};
  }
  if (name == "fig3a" || name == "fig3b") {
    const double w = name == "fig3a" ? 1.0 : 100.0;
    const std::vector<double> grid = Ratios(21, 100, 100);
    return {FixedUtilizationSweep(Market(multi, 1.0, w, 0.5, 0.4), 0.2, grid,
                                  g, P, opts)};
  }
  if (name == "fig4") {
    const std::vector<double> grid = Ratios(1, 1000, 1000);
    return {Sweep(Market(multi, 0.01, 1.0, 0.5, 0.5, 5.0),
                  Parameter::kUnlicensed, grid, g, P, opts)};
  }
  if (name == "fig5a" || name == "fig5b") {
    const std::vector<double> grid = Ratios(1, 200, 2);
    return {Sweep(Market(one, 5.0, 1.0, 0.5, 0.5), Parameter::kUnlicensed,
                  grid, g, P, opts)};
  }
  if (name == "fig6") {
    const std::vector<double> grid = Ratios(0, 99, 100);
    std::vector<SweepResult> sweeps;
    for (double b : {0.5, 1.0, 2.0}) {
      SweepResult s = Sweep(Market(one, b, INFINITY, 0.0, 0.5),
                            Parameter::kDutyCycle, grid, g, P, opts);
      s.parameter = "alpha@B=" + FormatNumber(b);
      sweeps.push_back(std::move(s));
    }
    return sweeps;
  }
  if (name == "fig7") {
    const std::vector<double> grid = Ratios(1, 200, 20);
    return {Sweep(Market(multi, 1.0, 1.0, 0.5, 0.5), Parameter::kUnlicensed,
                  grid, g, P, opts)};
  }
  if (name == "fig8") {
    const std::vector<double> grid = Ratios(0, 100, 100);
    return {Sweep(Market(multi, 1.0, 1.0, 0.0, 0.5), Parameter::kDutyCycle,
                  grid, g, P, opts)};
  }
  Fail(ErrorCode::kInvalidConfig, "unknown figure preset '" + name + "'");
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Duty-cycle spectrum sharing market equilibria",
               "spectrum_market"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string figure;
  std::string out_path;
  unsigned threads = 0;
  int grid = 2000;
  double eps = 1e-4;

  auto* solve = app.add_subcommand("solve", "Equilibria with LTE-U on and off");
  solve->add_option("file", file, "Scenario file")->required();
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep as CSV");
  sweep->add_option("file", file, "Scenario file")->required();
  sweep->add_option("--threads", threads, "Worker threads");
  auto* threshold =
      app.add_subcommand("threshold", "Where LTE-U stops paying off");
  threshold->add_option("file", file, "Scenario file")->required();
  auto* fig = app.add_subcommand("figure", "Figure preset as CSV");
  fig->add_option("name", figure, "Preset name")->required();
  fig->add_option("--out", out_path, "Output CSV path");
  fig->add_option("--threads", threads, "Worker threads");
  auto* verify = app.add_subcommand("verify", "Brute-force Nash check");
  verify->add_option("file", file, "Scenario file")->required();
  verify->add_option("--grid", grid, "Prices scanned per player")
      ->check(CLI::Range(100, 10000000));
  verify->add_option("--eps", eps, "Largest tolerated revenue gain");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (fig->parsed()) {
      const auto names = FigureNames();
      if (std::find(names.begin(), names.end(), figure) == names.end()) {
        err << "error: unknown figure preset '" << figure << "'\n";
        return kExitParseError;
      }
      const unsigned n =
          threads > 0 ? threads
                      : std::max(1u, std::thread::hardware_concurrency());
      return EmitCsv(FigureSweeps(figure, n), out_path, out, err);
    }
    const Scenario sc = LoadScenario(file);
    if (solve->parsed()) return CmdSolve(sc, out, err);
    if (sweep->parsed()) return CmdSweep(sc, threads, out, err);
    if (threshold->parsed()) return CmdThreshold(sc, out, err);
    return CmdVerify(sc, grid, eps, out, err);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const MarketError& e) {
    ReportError(err, e);
    return e.code() == ErrorCode::kNoSignChange ? kExitNoSignChange
                                                : kExitSolverError;
  }
}

}  // namespace spectrum_market
