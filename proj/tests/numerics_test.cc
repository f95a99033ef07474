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

#include <cmath>

#include "doctest.h"
#include "oracle.h"
#include "spectrum_market/errors.h"
#include "spectrum_market/functions.h"
#include "spectrum_market/numerics.h"

using namespace spectrum_market;

TEST_CASE("golden section finds interior and boundary maxima") {
  auto quad = [](double x) { return -(x - 0.3) * (x - 0.3); };
  const ArgMax interior = GoldenSectionMax(quad, 0.0, 1.0);
  CHECK(interior.arg == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(interior.value == doctest::Approx(0.0).epsilon(1e-15));

  const ArgMax edge = GoldenSectionMax([](double x) { return x; }, 0.0, 2.0);
  CHECK(edge.arg == 2.0);
  const ArgMax low = GoldenSectionMax([](double x) { return -x; }, 0.0, 2.0);
  CHECK(low.arg == 0.0);
}

TEST_CASE("golden section reports a bracket it cannot shrink") {
  try {
    GoldenSectionMax([](double x) { return -x * x; }, -1.0, 1.0, 1e-12, 5);
    FAIL("expected SolverNoConverge");
  } catch (const MarketError& e) {
    CHECK(e.code() == ErrorCode::kSolverNoConverge);
  }
}

TEST_CASE("bisection in either orientation") {
  CHECK(Bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(Bisect([](double x) { return 1.0 - x; }, 0.0, 3.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  try {
    Bisect([](double x) { return x + 1.0; }, 0.0, 1.0);
    FAIL("expected NoSignChange");
  } catch (const MarketError& e) {
    CHECK(e.code() == ErrorCode::kNoSignChange);
  }
}

TEST_CASE("boundary bisection") {
  const double edge =
      BisectBoundary([](double x) { return x * x < 0.25; }, 0.0, 1.0);
  CHECK(edge == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("adaptive Simpson against closed forms and a trapezoid oracle") {
  CHECK(AdaptiveSimpson([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-10));
  auto f = [](double x) { return std::exp(-x * x); };
  CHECK(AdaptiveSimpson(f, 0.0, 2.0) ==
        doctest::Approx(oracle::Trapezoid(f, 0.0, 2.0, 200000)).epsilon(1e-9));
}

TEST_CASE("linear congestion and demand") {
  const auto g = CongestionFn::Linear();
  CHECK(g.is_linear());
  CHECK(g(0.4) == 0.4);
  CHECK(g.Deriv(0.4) == 1.0);
  CHECK(g.Deriv2(0.4) == 0.0);
  CHECK(g.Inverse(0.7) == 0.7);

  const auto P = DemandCurve::Linear();
  CHECK(P.is_linear());
  CHECK(P(0.25) == 0.75);
  CHECK(P(2.0) == 0.0);
  CHECK(P.MaxPrice() == 1.0);
  CHECK(P.ZeroMass() == 1.0);
}

TEST_CASE("power congestion derivatives and inverse") {
  const auto g = CongestionFn::Power(3.0);
  CHECK_FALSE(g.is_linear());
  CHECK(g(2.0) == doctest::Approx(8.0));
  CHECK(g.Deriv(2.0) == doctest::Approx(12.0));
  CHECK(g.Deriv2(2.0) == doctest::Approx(12.0));
  CHECK(g.Inverse(8.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK_NOTHROW(g.ValidateShape(10.0));
  CHECK_THROWS_AS(CongestionFn::Power(0.5), MarketError);
}

TEST_CASE("custom functions fall back to finite differences") {
  const auto g = CongestionFn::Custom([](double x) { return x * x; });
  CHECK(g.Deriv(0.7) == doctest::Approx(1.4).epsilon(1e-6));
  CHECK(g.Deriv2(0.7) == doctest::Approx(2.0).epsilon(1e-4));

  const auto P = DemandCurve::Custom([](double q) { return 2.0 - q; });
  CHECK(P.ZeroMass() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(P.Deriv(0.5) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("shape validation rejects non-convex congestion") {
  const auto concave =
      CongestionFn::Custom([](double x) { return std::sqrt(x); });
  CHECK_THROWS_AS(concave.ValidateShape(1.0), MarketError);
  const auto offset = CongestionFn::Custom([](double x) { return 1.0 + x; });
  CHECK_THROWS_AS(offset.ValidateShape(1.0), MarketError);
  const auto convex_demand = DemandCurve::Custom(
      [](double q) { return q < 1.0 ? (1.0 - q) * (1.0 - q) : 0.0; }, 1.0);
  CHECK_THROWS_AS(convex_demand.ValidateShape(), MarketError);
}

TEST_CASE("homogeneous demand") {
  const auto P = DemandCurve::Homogeneous(2.0, 3.0);
  CHECK(P.is_homogeneous());
  CHECK(P(1.0) == 3.0);
  CHECK(P(2.5) == 0.0);
  CHECK(P.market_size() == 2.0);
  CHECK(P.valuation() == 3.0);
  CHECK_THROWS_AS(DemandCurve::Homogeneous(-1.0, 1.0), MarketError);
}
