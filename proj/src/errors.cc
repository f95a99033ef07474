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

#include "spectrum_market/errors.h"

namespace spectrum_market {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kDegenerateDenominator:
      return "DegenerateDenominator";
    case ErrorCode::kSolverNoConverge:
      return "SolverNoConverge";
    case ErrorCode::kNoSignChange:
      return "NoSignChange";
    case ErrorCode::kUnsupportedFunctions:
      return "UnsupportedFunctions";
  }
  return "Unknown";
}

MarketError::MarketError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code) {}

void Fail(ErrorCode code, const std::string& detail) {
  throw MarketError(code, detail);
}

}  // namespace spectrum_market
