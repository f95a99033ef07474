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

#ifndef SPECTRUM_MARKET_FUNCTIONS_H_
#define SPECTRUM_MARKET_FUNCTIONS_H_

#include <functional>
#include <string>

namespace spectrum_market {

using ScalarFn = std::function<double(double)>;

enum class CongestionKind { kLinear, kCustom };

// Congestion cost g(load per unit bandwidth). Convex, increasing, g(0) = 0.
class CongestionFn {
 public:
  // g(x) = x.
  static CongestionFn Linear();
  // g(x) = x^exponent, exponent >= 1. Tagged custom; analytic derivatives.
  static CongestionFn Power(double exponent);
  // Missing derivatives fall back to central differences.
  static CongestionFn Custom(ScalarFn eval, ScalarFn deriv = nullptr,
                             ScalarFn deriv2 = nullptr,
                             std::string label = "custom");

  double operator()(double load) const { return eval_(load); }
  double Deriv(double load) const { return deriv_(load); }
  double Deriv2(double load) const { return deriv2_(load); }

  // Smallest load with g(load) >= level. Bisection for custom kinds.
  double Inverse(double level) const;

  CongestionKind kind() const { return kind_; }
  bool is_linear() const { return kind_ == CongestionKind::kLinear; }
  const std::string& label() const { return label_; }

  // Samples 128 points on [0, domain_max]; throws kInvalidConfig unless
  // g(0) = 0, g' >= 0 and g'' >= 0 at every probe.
  void ValidateShape(double domain_max) const;

 private:
  CongestionFn(CongestionKind kind, ScalarFn eval, ScalarFn deriv,
               ScalarFn deriv2, std::string label);

  CongestionKind kind_;
  ScalarFn eval_;
  ScalarFn deriv_;
  ScalarFn deriv2_;
  std::string label_;
};

enum class DemandKind { kLinear, kHomogeneous, kCustom };

// Inverse demand P(q): willingness to pay of the q-th unit of customer mass.
class DemandCurve {
 public:
  // P(q) = 1 - q on [0, 1], zero beyond.
  static DemandCurve Linear();
  // P(q) = valuation for q <= market_size, else 0.
  static DemandCurve Homogeneous(double market_size, double valuation);
  // `zero_mass` is P^{-1}(0); when absent it is located by doubling up
  // to 1e8 and construction throws kInvalidConfig if P never reaches zero.
  static DemandCurve Custom(ScalarFn eval, double zero_mass = 0.0,
                            ScalarFn deriv = nullptr,
                            ScalarFn deriv2 = nullptr,
                            std::string label = "custom");

  double operator()(double q) const { return eval_(q); }
  double Deriv(double q) const { return deriv_(q); }
  double Deriv2(double q) const { return deriv2_(q); }

  // P(0).
  double MaxPrice() const { return eval_(0.0); }
  // Total mass at which willingness to pay reaches zero.
  double ZeroMass() const { return zero_mass_; }

  DemandKind kind() const { return kind_; }
  bool is_linear() const { return kind_ == DemandKind::kLinear; }
  bool is_homogeneous() const { return kind_ == DemandKind::kHomogeneous; }
  double market_size() const { return market_size_; }
  double valuation() const { return valuation_; }
  const std::string& label() const { return label_; }

  // 128-point probe on [0, ZeroMass()]: P' <= 0 and P'' <= 0.
  void ValidateShape() const;

 private:
  DemandCurve(DemandKind kind, ScalarFn eval, ScalarFn deriv, ScalarFn deriv2,
              double zero_mass, std::string label);

  DemandKind kind_;
  ScalarFn eval_;
  ScalarFn deriv_;
  ScalarFn deriv2_;
  double zero_mass_;
  double market_size_ = 0.0;
  double valuation_ = 0.0;
  std::string label_;
};

// Central differences with step 1e-6 relative to max(1, |x|); one-sided
// near zero so that functions defined only on [0, inf) are never probed at
// negative arguments.
double FiniteDeriv(const ScalarFn& f, double x);
double FiniteDeriv2(const ScalarFn& f, double x);

}  // namespace spectrum_market

#endif  // SPECTRUM_MARKET_FUNCTIONS_H_
