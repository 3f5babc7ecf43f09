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

#include "mgzz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mgzz::bounds {
namespace {

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
}

void check_m(int n, int m) {
  check_n(n);
  if (m < 0 || m > n - 2) {
    throw std::out_of_range("m = " + std::to_string(m) + " outside [0, " + std::to_string(n - 2) + "]");
  }
}

void check_gates(double gates) {
  if (!(gates >= 0.0)) throw std::invalid_argument("gate count must be non-negative");
}

}  // namespace

std::string to_string(Regime r) { return r == Regime::Polynomial ? "polynomial" : "exponential"; }

int m_critical(int n) {
  check_n(n);
  return n / 2 - 1;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 64) return static_cast<double>(binomial_exact(n, k));
  return std::exp(log_binomial(n, k));
}

std::uint64_t binomial_exact(unsigned n, unsigned k) {
  if (n > 64) throw std::out_of_range("binomial_exact supports n <= 64");
  if (k > n) return 0;
  k = std::min(k, n - k);
  // r * (n-k+i) is always divisible by i; 128-bit headroom covers n <= 64.
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

double chi_general(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  double sum = 0.0;
  for (int s = 1; s <= m; ++s) sum += binomial(2 * n, 2 * m + 4 - 2 * s);
  return gates * sum;
}

double chi_layered(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  double sum = 0.0;
  for (int s = 1; s <= m; ++s) sum += s * binomial(2 * n, 2 * m + 4 - 2 * s);
  return gates / (m + 1) * sum;
}

double ratio(int n, int m) {
  check_m(n, m);
  const double q = (2.0 * m + 2.0) / (2.0 * n - 2.0 * m - 1.0);
  return q * q;
}

double bound_general(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  if (m > m_critical(n)) throw std::domain_error("closed-form bound needs m <= m_c; use bound_exponential");
  return gates * binomial(2 * n, 2 * m + 2) / (1.0 - ratio(n, m));
}

double bound_layered(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  if (m > m_critical(n)) throw std::domain_error("closed-form bound needs m <= m_c");
  const double one_minus_r = 1.0 - ratio(n, m);
  return gates / (m + 1) * binomial(2 * n, 2 * m + 2) / (one_minus_r * one_minus_r);
}

double bound_exponential(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  const int mc = m_critical(n);
  if (m < mc) throw std::domain_error("normal-CDF bound needs m >= m_c");
  const double alpha = std::sqrt(8.0 / n) * (m - mc + 0.5);
  return gates * std::exp2(2.0 * n - 1.0) * normal_cdf(alpha);
}

double normal_cdf(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("normal_cdf needs a finite argument");
  return 0.5 * std::erfc(-alpha / std::sqrt(2.0));
}

std::vector<int> predict_spans(int d, int k, int overlap) {
  if (d < 0 || k < 0 || overlap < 0 || overlap > std::min(k, d)) {
    throw std::invalid_argument("predict_spans: need 0 <= l <= min(k, d)");
  }
  // c_D c_K = (-1)^{dk - l} c_K c_D.
  if ((d * k - overlap) % 2 == 0 || d == 2 * overlap) return {k};
  return {std::min(k, k + d - 2 * overlap), std::max(k, k + d - 2 * overlap)};
}

LayeredEndpoints layered_exponential_endpoints(int n, double gates) {
  check_n(n);
  check_gates(gates);
  const double central = binomial(2 * n, n);
  return {2.0 * gates / (n + 1) * central, gates * central};
}

double sweep_bound(int n, int m, double gates) {
  return m < m_critical(n) ? bound_general(n, m, gates) : bound_exponential(n, m, gates);
}

BoundReport bound_report(int n, int m, double gates) {
  check_m(n, m);
  check_gates(gates);
  BoundReport r;
  r.n = n;
  r.m = m;
  r.gates = gates;
  r.m_c = m_critical(n);
  r.regime = m <= r.m_c ? Regime::Polynomial : Regime::Exponential;
  r.chi_general = chi_general(n, m, gates);
  r.chi_layered = chi_layered(n, m, gates);
  r.r = ratio(n, m);
  if (m <= r.m_c) {
    r.bound_general = bound_general(n, m, gates);
    r.bound_layered = bound_layered(n, m, gates);
  }
  if (m >= r.m_c) r.bound_exponential = bound_exponential(n, m, gates);
  return r;
}

}  // namespace mgzz::bounds
