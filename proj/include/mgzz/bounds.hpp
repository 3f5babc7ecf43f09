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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mgzz::bounds {

enum class Regime { Polynomial, Exponential };

std::string to_string(Regime r);

/// Largest ZZ count for which the cost stays polynomial in n.
int m_critical(int n);

/// ln C(n, k) via lgamma; -inf outside 0 <= k <= n.
double log_binomial(int n, int k);
/// C(n, k) as a double; 0 outside 0 <= k <= n.
double binomial(int n, int k);
/// Exact C(n, k) for n <= 64.
std::uint64_t binomial_exact(unsigned n, unsigned k);

/// Staircase total for ZZ gates placed anywhere: N * sum_s C(2n, 2m+4-2s).
double chi_general(int n, int m, double gates);
/// Staircase total for equally spaced ZZ gates.
double chi_layered(int n, int m, double gates);

/// ((2m+2) / (2n-2m-1))^2, the ratio of the dominating geometric series.
double ratio(int n, int m);
double bound_general(int n, int m, double gates);
double bound_layered(int n, int m, double gates);
/// N 2^{2n-1} Phi(sqrt(8/n) (m - m_c + 0.5)).
double bound_exponential(int n, int m, double gates);

double normal_cdf(double alpha);

/// Degrees reachable from a degree-k monomial when conjugated by exp(i t c_D),
/// |D| = d, sharing `overlap` indices with it.
std::vector<int> predict_spans(int d, int k, int overlap);

/// Layered circuits past m_c: cost at m = m_c and the m = n-2 limit.
struct LayeredEndpoints {
  double at_critical = 0.0;
  double at_maximum = 0.0;
};
LayeredEndpoints layered_exponential_endpoints(int n, double gates);

/// Value used for sweep tables: the closed form below m_c, the normal-CDF
/// interpolation from m_c on.
double sweep_bound(int n, int m, double gates);

struct BoundReport {
  int n = 0;
  int m = 0;
  double gates = 0;
  int m_c = 0;
  Regime regime = Regime::Polynomial;
  double chi_general = 0.0;
  double chi_layered = 0.0;
  double bound_general = 0.0;
  double bound_layered = 0.0;
  double bound_exponential = 0.0;
  double r = 0.0;
};

BoundReport bound_report(int n, int m, double gates);

}  // namespace mgzz::bounds
