// Copyright 2026 The mgzz Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "mgzz/bounds.hpp"

namespace mgzz::bounds {
namespace {

TEST(Bounds, CriticalCount) {
  EXPECT_EQ(m_critical(12), 5);
  EXPECT_EQ(m_critical(13), 5);
  EXPECT_EQ(m_critical(6), 2);
  EXPECT_EQ(m_critical(2), 0);
  EXPECT_THROW(m_critical(1), std::invalid_argument);
}

TEST(Bounds, Binomials) {
  EXPECT_EQ(binomial_exact(12, 4), 495u);
  EXPECT_EQ(binomial_exact(64, 32), 1832624140942590534u);
  EXPECT_EQ(binomial(5, 7), 0.0);
  EXPECT_EQ(binomial(5, -1), 0.0);
  EXPECT_TRUE(std::isinf(log_binomial(5, 6)));
  for (int n = 1; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_NEAR(std::exp(log_binomial(n, k)) / static_cast<double>(binomial_exact(n, k)), 1.0, 1e-12);
}

TEST(Bounds, ChiGeneralExamples) {
  EXPECT_EQ(chi_general(5, 0, 10), 0.0);
  EXPECT_DOUBLE_EQ(chi_general(3, 1, 1), 15.0);
  EXPECT_DOUBLE_EQ(chi_general(4, 2, 10), 980.0);
  EXPECT_THROW(chi_general(4, 3, 1), std::out_of_range);
  EXPECT_THROW(chi_general(4, -1, 1), std::out_of_range);
}

TEST(Bounds, ChiLayeredExamples) {
  EXPECT_EQ(chi_layered(5, 0, 10), 0.0);
  EXPECT_DOUBLE_EQ(chi_layered(3, 1, 2), 15.0);
  EXPECT_DOUBLE_EQ(chi_layered(4, 2, 3), 168.0);
}

TEST(Bounds, ChiGeneralLogDomainAccuracy) {
  for (int n = 2; n <= 30; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      double exact = 0.0;
      for (int s = 1; s <= m; ++s) exact += static_cast<double>(binomial_exact(2 * n, 2 * m + 4 - 2 * s));
      if (exact == 0.0) {
        EXPECT_EQ(chi_general(n, m, 1), 0.0);
      } else {
        EXPECT_NEAR(chi_general(n, m, 1) / exact, 1.0, 1e-12) << n << " " << m;
      }
    }
  }
}

TEST(Bounds, GeneralClosedForm) {
  const double r = std::pow(4.0 / 9.0, 2);
  EXPECT_DOUBLE_EQ(ratio(6, 1), r);
  EXPECT_NEAR(bound_general(6, 1, 1), 495.0 / (1 - r), 1e-9);
  EXPECT_NEAR(bound_layered(6, 1, 2), 495.0 / ((1 - r) * (1 - r)), 1e-9);
  EXPECT_NEAR(bound_layered(6, 1, 2), bound_general(6, 1, 2) / 2.0 / (1 - r), 1e-9);
  EXPECT_THROW(bound_general(6, 3, 1), std::domain_error);
  EXPECT_THROW(bound_layered(6, 3, 1), std::domain_error);
}

TEST(Bounds, SmallRatioLimit) {
  // m = 0 at large n: r -> 0 and the bound approaches N C(2n, 2).
  EXPECT_NEAR(bound_general(200, 0, 3) / (3 * binomial(400, 2)), 1.0, 1e-4);
}

TEST(Bounds, DominanceGrid) {
  for (int n = 4; n <= 20; ++n) {
    for (int m = 1; m <= m_critical(n); ++m) {
      EXPECT_GE(bound_general(n, m, 7), chi_general(n, m, 7)) << n << " " << m;
      EXPECT_GE(bound_layered(n, m, 7), chi_layered(n, m, 7)) << n << " " << m;
    }
  }
}

TEST(Bounds, NormalCdf) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.0), 0.8413447460685429, 1e-7);
  EXPECT_NEAR(std::round(normal_cdf(1.0) * 100) / 100, 0.84, 1e-15);
  for (double a : {0.1, 0.7, 1.9, 3.3}) EXPECT_NEAR(normal_cdf(a) + normal_cdf(-a), 1.0, 1e-12);
}

TEST(Bounds, ExponentialForm) {
  // At m = m_c - 0.5 the normal factor is exactly 1/2; check the slope around it instead.
  const int n = 12, mc = m_critical(n);
  EXPECT_NEAR(bound_exponential(n, mc, 1), std::pow(2.0, 2 * n - 1) * normal_cdf(std::sqrt(8.0 / n) * 0.5), 1e-3);
  EXPECT_GT(bound_exponential(n, mc + 1, 1), bound_exponential(n, mc, 1));
  EXPECT_NEAR(bound_exponential(60, 58, 1) / std::pow(2.0, 119), 1.0, 1e-12);
  EXPECT_THROW(bound_exponential(n, mc - 1, 1), std::domain_error);
  EXPECT_THROW(bound_exponential(n, n - 1, 1), std::out_of_range);
}

TEST(Bounds, SweepSwitchesFormAtCritical) {
  const int n = 10, mc = m_critical(n);
  EXPECT_EQ(sweep_bound(n, mc - 1, 5), bound_general(n, mc - 1, 5));
  EXPECT_EQ(sweep_bound(n, mc, 5), bound_exponential(n, mc, 5));
}

TEST(Bounds, Report) {
  const BoundReport r = bound_report(12, 5, 100);
  EXPECT_EQ(r.m_c, 5);
  EXPECT_EQ(r.regime, Regime::Polynomial);
  EXPECT_GE(r.bound_general, r.chi_general);
  EXPECT_EQ(bound_report(12, 6, 100).regime, Regime::Exponential);
  EXPECT_EQ(to_string(Regime::Exponential), "exponential");
}

TEST(Bounds, PredictSpans) {
  EXPECT_EQ(predict_spans(1, 3, 0), (std::vector<int>{3, 4}));
  EXPECT_EQ(predict_spans(4, 2, 1), (std::vector<int>{2, 4}));
  EXPECT_EQ(predict_spans(4, 5, 1), (std::vector<int>{5, 7}));
  EXPECT_EQ(predict_spans(4, 4, 2), (std::vector<int>{4}));
  EXPECT_EQ(predict_spans(2, 3, 1), (std::vector<int>{3}));
  EXPECT_EQ(predict_spans(4, 4, 3), (std::vector<int>{2, 4}));
  EXPECT_THROW(predict_spans(2, 1, 2), std::invalid_argument);
}

TEST(Bounds, PolynomialSlopeAtOneZZ) {
  const double slope =
      (std::log(chi_general(30, 1, 1)) - std::log(chi_general(10, 1, 1))) / (std::log(30.0) - std::log(10.0));
  EXPECT_NEAR(slope, 4.0, 0.5);
  // Asymptotic slope approaches 4 from above.
  const double far =
      (std::log(chi_general(3000, 1, 1)) - std::log(chi_general(1000, 1, 1))) / (std::log(3.0));
  EXPECT_NEAR(far, 4.0, 0.01);
}

TEST(Bounds, LayeredEndpoints) {
  const LayeredEndpoints e = layered_exponential_endpoints(6, 10);
  EXPECT_NEAR(e.at_critical, 2.0 * 10 / 7 * 924, 1e-9);
  EXPECT_NEAR(e.at_maximum, 10 * 924, 1e-9);
}

}  // namespace
}  // namespace mgzz::bounds
