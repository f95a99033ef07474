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

// Reference computations that share no code with the library: they work
// from the model definitions directly, by enumeration or brute force.

#ifndef SPECTRUM_MARKET_TESTS_ORACLE_H_
#define SPECTRUM_MARKET_TESTS_ORACLE_H_

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

// Equivalent bandwidth seen by a service that spends fraction `on` of the
// time on bandwidth `a` and the rest on `b` with linear congestion: the
// harmonic mean weighted by time.
inline double HarmonicBand(double on, double a, double b) {
  double inv = 0.0;
  if (on > 0.0) inv += on / a;
  if (on < 1.0) inv += (1.0 - on) / b;
  return 1.0 / inv;
}

// Effective bands from the duty-cycle definition.
inline double IncumbentBand(double b, double w, double alpha, double beta,
                            double gamma) {
  return HarmonicBand(alpha, gamma * (b + beta * w), gamma * b);
}
inline double EntrantBand(double w, double alpha, double beta) {
  return HarmonicBand(alpha, (1.0 - beta) * w, w);
}

struct Split {
  std::vector<double> masses;
  double delivered = 1.0;
};

// Wardrop split under P(q) = 1 - q and linear congestion by enumerating
// active sets. On an active set S the delivered price is
// d = (1 + sum c_i p_i) / (1 + sum c_i); S is consistent when every active
// mass is nonnegative and every inactive price is at least d.
inline Split LinearWardrop(const std::vector<double>& prices,
                           const std::vector<double>& capacities) {
  const std::size_t n = prices.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double num = 1.0;
    double den = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        num += capacities[i] * prices[i];
        den += capacities[i];
      }
    }
    const double d = num / den;
    bool ok = true;
    Split s;
    s.masses.assign(n, 0.0);
    s.delivered = d;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        s.masses[i] = capacities[i] * (d - prices[i]);
        ok = s.masses[i] >= -1e-15;
      } else {
        ok = prices[i] >= d - 1e-15;
      }
    }
    if (ok) return s;
  }
  return {};
}

// Best revenue of a price setter on an evenly spaced price grid.
template <typename Revenue>
double GridBestRevenue(Revenue revenue, double max_price, int steps,
                       double* best_price = nullptr) {
  double best = -INFINITY;
  for (int k = 0; k <= steps; ++k) {
    const double p = max_price * k / steps;
    const double r = revenue(p);
    if (r > best) {
      best = r;
      if (best_price) *best_price = p;
    }
  }
  return best;
}

// Composite trapezoid rule.
template <typename F>
double Trapezoid(F f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double sum = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) sum += f(lo + i * h);
  return sum * h;
}

}  // namespace oracle

#endif  // SPECTRUM_MARKET_TESTS_ORACLE_H_
