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

#include "spectrum_market/functions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "spectrum_market/errors.h"
#include "spectrum_market/numerics.h"

namespace spectrum_market {

namespace {

constexpr int kProbePoints = 128;
constexpr double kFirstStep = 1e-6;
// Second differences lose about eps/h^2 to cancellation, so they use a
// wider step than first differences.
constexpr double kSecondStep = 1e-4;

}  // namespace

double FiniteDeriv(const ScalarFn& f, double x) {
  const double h = kFirstStep * std::max(1.0, std::abs(x));
  if (x < h) {
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double FiniteDeriv2(const ScalarFn& f, double x) {
  const double h = kSecondStep * std::max(1.0, std::abs(x));
  if (x < h) {
    return (2.0 * f(x) - 5.0 * f(x + h) + 4.0 * f(x + 2.0 * h) -
            f(x + 3.0 * h)) /
           (h * h);
  }
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

CongestionFn::CongestionFn(CongestionKind kind, ScalarFn eval, ScalarFn deriv,
                           ScalarFn deriv2, std::string label)
    : kind_(kind),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      deriv2_(std::move(deriv2)),
      label_(std::move(label)) {}

CongestionFn CongestionFn::Linear() {
  return CongestionFn(
      CongestionKind::kLinear, [](double x) { return x; },
      [](double) { return 1.0; }, [](double) { return 0.0; }, "linear");
}

CongestionFn CongestionFn::Power(double exponent) {
  if (!(exponent >= 1.0)) {
    Fail(ErrorCode::kInvalidConfig, "congestion exponent must be >= 1");
  }
  return CongestionFn(
      CongestionKind::kCustom,
      [exponent](double x) { return x <= 0.0 ? 0.0 : std::pow(x, exponent); },
      [exponent](double x) {
        if (x <= 0.0) return exponent == 1.0 ? 1.0 : 0.0;
        return exponent * std::pow(x, exponent - 1.0);
      },
      [exponent](double x) {
        if (exponent == 1.0) return 0.0;
        if (x <= 0.0) return exponent == 2.0 ? 2.0 : 0.0;
        return exponent * (exponent - 1.0) * std::pow(x, exponent - 2.0);
      },
      "power");
}

CongestionFn CongestionFn::Custom(ScalarFn eval, ScalarFn deriv,
                                  ScalarFn deriv2, std::string label) {
  if (!eval) Fail(ErrorCode::kInvalidConfig, "congestion function is empty");
  if (!deriv) {
    deriv = [eval](double x) { return FiniteDeriv(eval, x); };
  }
  if (!deriv2) {
    deriv2 = [eval](double x) { return FiniteDeriv2(eval, x); };
  }
  return CongestionFn(CongestionKind::kCustom, std::move(eval),
                      std::move(deriv), std::move(deriv2), std::move(label));
}

double CongestionFn::Inverse(double level) const {
  if (level <= 0.0) return 0.0;
  if (is_linear()) return level;
  double hi = 1.0;
  for (int i = 0; eval_(hi) < level; ++i) {
    if (i > 1000) return std::numeric_limits<double>::infinity();
    hi *= 2.0;
  }
  return BisectBoundary([&](double x) { return eval_(x) < level; }, 0.0, hi,
                        1e-14 * std::max(1.0, hi));
}

void CongestionFn::ValidateShape(double domain_max) const {
  if (std::abs(eval_(0.0)) > 1e-12) {
    Fail(ErrorCode::kInvalidConfig, "congestion " + label_ + ": g(0) != 0");
  }
  for (int i = 0; i < kProbePoints; ++i) {
    const double x = domain_max * i / (kProbePoints - 1);
    if (deriv_(x) < -1e-9) {
      Fail(ErrorCode::kInvalidConfig,
           "congestion " + label_ + " is decreasing at " + std::to_string(x));
    }
    if (deriv2_(x) < -1e-6) {
      Fail(ErrorCode::kInvalidConfig,
           "congestion " + label_ + " is not convex at " + std::to_string(x));
    }
  }
}

DemandCurve::DemandCurve(DemandKind kind, ScalarFn eval, ScalarFn deriv,
                         ScalarFn deriv2, double zero_mass, std::string label)
    : kind_(kind),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      deriv2_(std::move(deriv2)),
      zero_mass_(zero_mass),
      label_(std::move(label)) {}

DemandCurve DemandCurve::Linear() {
  return DemandCurve(
      DemandKind::kLinear, [](double q) { return q < 1.0 ? 1.0 - q : 0.0; },
      [](double) { return -1.0; }, [](double) { return 0.0; }, 1.0, "linear");
}

DemandCurve DemandCurve::Homogeneous(double market_size, double valuation) {
  if (!(market_size > 0.0) || !(valuation > 0.0)) {
    Fail(ErrorCode::kInvalidConfig,
         "homogeneous demand needs market size A > 0 and valuation T > 0");
  }
  DemandCurve curve(
      DemandKind::kHomogeneous,
      [market_size, valuation](double q) {
        return q <= market_size ? valuation : 0.0;
      },
      [](double) { return 0.0; }, [](double) { return 0.0; }, market_size,
      "homogeneous");
  curve.market_size_ = market_size;
  curve.valuation_ = valuation;
  return curve;
}

DemandCurve DemandCurve::Custom(ScalarFn eval, double zero_mass,
                                ScalarFn deriv, ScalarFn deriv2,
                                std::string label) {
  if (!eval) Fail(ErrorCode::kInvalidConfig, "demand function is empty");
  if (!(eval(0.0) > 0.0)) {
    Fail(ErrorCode::kInvalidConfig, "demand " + label + ": P(0) must be > 0");
  }
  if (!(zero_mass > 0.0)) {
    double hi = 1.0;
    while (eval(hi) > 0.0) {
      hi *= 2.0;
      if (hi > 1e8) {
        Fail(ErrorCode::kInvalidConfig,
             "demand " + label + " never reaches zero; supply zero_mass");
      }
    }
    zero_mass = BisectBoundary([&](double q) { return eval(q) > 0.0; }, 0.0,
                               hi, 1e-15 * hi);
  }
  if (!deriv) {
    deriv = [eval](double q) { return FiniteDeriv(eval, q); };
  }
  if (!deriv2) {
    deriv2 = [eval](double q) { return FiniteDeriv2(eval, q); };
  }
  return DemandCurve(DemandKind::kCustom, std::move(eval), std::move(deriv),
                     std::move(deriv2), zero_mass, std::move(label));
}

void DemandCurve::ValidateShape() const {
  if (is_homogeneous()) return;
  for (int i = 0; i < kProbePoints; ++i) {
    const double q = zero_mass_ * i / (kProbePoints - 1);
    if (deriv_(q) > 1e-9) {
      Fail(ErrorCode::kInvalidConfig,
           "demand " + label_ + " is increasing at " + std::to_string(q));
    }
    if (deriv2_(q) > 1e-6) {
      Fail(ErrorCode::kInvalidConfig,
           "demand " + label_ + " is not concave at " + std::to_string(q));
    }
  }
}

}  // namespace spectrum_market
