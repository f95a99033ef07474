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

#ifndef SPECTRUM_MARKET_CSV_H_
#define SPECTRUM_MARKET_CSV_H_

#include <ostream>
#include <string>

#include "spectrum_market/threshold.h"

namespace spectrum_market {

inline constexpr char kCsvHeader[] =
    "parameter,value,lteu,p1,x1,p_ent,w_t,revenue_inc,revenue_ent,cs,sw,"
    "delivered_price";

// 12 significant digits; "inf" and "nan" spelled out.
std::string FormatNumber(double value);

// Header plus one LF-terminated line per row. Failed rows carry nan in every
// numeric column.
void WriteSweepCsv(std::ostream& out, const SweepResult& sweep,
                   bool header = true);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_CSV_H_
