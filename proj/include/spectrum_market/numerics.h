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

#ifndef SPECTRUM_MARKET_NUMERICS_H_
#define SPECTRUM_MARKET_NUMERICS_H_

#include <functional>

namespace spectrum_market {

struct ArgMax {
  double arg;
  double value;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// Throws kSolverNoConverge when the bracket is still wider than `tol`
// after `max_iter` shrink steps.
ArgMax GoldenSectionMax(const std::function<double(double)>& f, double lo,
                        double hi, double tol = 1e-10, int max_iter = 200);

// Root of f on [lo, hi] assuming f(lo) and f(hi) bracket zero (either
// orientation). Stops once the bracket is narrower than `tol` or cannot be
// split further in floating point.
double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12, int max_iter = 400);

// Largest x in [lo, hi] with pred(x) true, assuming pred is true on a prefix
// of the interval and pred(lo) holds.
double BisectBoundary(const std::function<bool(double)>& pred, double lo,
                      double hi, double tol = 1e-12, int max_iter = 400);

// Adaptive Simpson quadrature to absolute tolerance `tol`.
double AdaptiveSimpson(const std::function<double(double)>& f, double lo,
                       double hi, double tol = 1e-10, int max_depth = 50);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_NUMERICS_H_
