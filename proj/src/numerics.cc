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

#include "spectrum_market/numerics.h"

#include <cmath>

#include "spectrum_market/errors.h"

namespace spectrum_market {

ArgMax GoldenSectionMax(const std::function<double(double)>& f, double lo,
                        double hi, double tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iter = 0;
  while (b - a > tol) {
    if (++iter > max_iter) {
      Fail(ErrorCode::kSolverNoConverge,
           "golden-section search exhausted its iteration budget");
    }
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Endpoints matter when the maximum sits on the boundary.
  ArgMax best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    Fail(ErrorCode::kNoSignChange, "bisection endpoints share a sign");
  }
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  Fail(ErrorCode::kSolverNoConverge, "bisection did not converge");
}

double BisectBoundary(const std::function<bool(double)>& pred, double lo,
                      double hi, double tol, int max_iter) {
  if (pred(hi)) return hi;
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol || mid == lo || mid == hi) return lo;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Fail(ErrorCode::kSolverNoConverge, "boundary bisection did not converge");
}

namespace {

double SimpsonStep(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return SimpsonStep(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         SimpsonStep(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double AdaptiveSimpson(const std::function<double(double)>& f, double lo,
                       double hi, double tol, int max_depth) {
  if (hi <= lo) return 0.0;
  const double fa = f(lo);
  const double fb = f(hi);
  const double fm = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return SimpsonStep(f, lo, hi, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace spectrum_market
