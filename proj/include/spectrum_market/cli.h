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

#ifndef SPECTRUM_MARKET_CLI_H_
#define SPECTRUM_MARKET_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "spectrum_market/threshold.h"

namespace spectrum_market {

enum ExitCode {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParseError = 2,
  kExitSolverError = 3,
  kExitNoSignChange = 4,
};

// Figure presets: fig2, fig3a, fig3b, fig4, fig5a, fig5b, fig6, fig7, fig8.
std::vector<std::string> FigureNames();

// Sweeps behind a preset, in output order. Throws kInvalidConfig for an
// unknown name.
std::vector<SweepResult> FigureSweeps(const std::string& name,
                                      unsigned threads);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_CLI_H_
