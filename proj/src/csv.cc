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

#include "spectrum_market/csv.h"

#include <cmath>
#include <cstdio>

namespace spectrum_market {

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void WriteSweepCsv(std::ostream& out, const SweepResult& sweep, bool header) {
  if (header) out << kCsvHeader << '\n';
  for (const auto& row : sweep.rows) {
    out << sweep.parameter << ',' << FormatNumber(row.value) << ','
        << (row.lteu ? 1 : 0);
    const double nan = NAN;
    const EquilibriumOutcome* o = row.outcome ? &*row.outcome : nullptr;
    const double fields[] = {
        o ? o->p_incumbent : nan,
        o ? o->x_incumbent : nan,
        o ? o->p_entrant : nan,
        o ? o->w_total : nan,
        o ? o->revenue_incumbent : nan,
        o ? o->revenue_entrants : nan,
        o ? row.welfare.consumer_surplus : nan,
        o ? row.welfare.social_welfare : nan,
        o ? o->delivered_price : nan,
    };
    for (double f : fields) out << ',' << FormatNumber(f);
    out << '\n';
  }
}

}  // namespace spectrum_market
