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

#ifndef SPECTRUM_MARKET_ERRORS_H_
#define SPECTRUM_MARKET_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectrum_market {

enum class ErrorCode {
  kInvalidConfig,
  kDegenerateDenominator,
  kSolverNoConverge,
  kNoSignChange,
  kUnsupportedFunctions,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above. The
// message is prefixed with the code name so CLI output stays greppable.
class MarketError : public std::runtime_error {
 public:
  MarketError(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& detail);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_ERRORS_H_
