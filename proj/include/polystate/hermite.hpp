// Copyright 2026 The Polystate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYSTATE_HERMITE_HPP
#define POLYSTATE_HERMITE_HPP

// Oscillator eigenfunctions and Gauss-Hermite quadrature.
//
// h_m denotes the normalized Hermite polynomial H_m / sqrt(2^m m!), obeying
//   h_0 = 1,  h_1 = sqrt(2) x,
//   h_{m+1} = sqrt(2/(m+1)) x h_m - sqrt(m/(m+1)) h_{m-1},
// and u_m(x) = pi^{-1/4} h_m(x) exp(-x^2/2) is the m-th eigenfunction.
// Recurrences carry a separate log-scale so that neither large m nor large
// |x| overflows.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystate {

namespace detail {

inline constexpr double kRescaleAbove = 1e100;

/// Drives the h_m recurrence at one point, calling visit(m, h_m_scaled,
/// log_scale) for m = 0..m_max with h_m = h_m_scaled * exp(log_scale).
template <typename T, typename Visit>
void hermite_recurrence(T x, int m_max, Visit&& visit) {
  T prev{0.0};
  T cur{1.0};
  double log_scale = 0.0;
  visit(0, cur, log_scale);
  for (int m = 0; m < m_max; ++m) {
    const double md = static_cast<double>(m);
    const T next = std::sqrt(2.0 / (md + 1.0)) * x * cur -
                   std::sqrt(md / (md + 1.0)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > kRescaleAbove) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
    visit(m + 1, cur, log_scale);
  }
}

}  // namespace detail

/// u_0(x)..u_{m_max}(x).
inline std::vector<double> hermite_functions(double x, int m_max) {
  if (m_max < 0) {
    throw std::domain_error("hermite_functions: m_max must be >= 0");
  }
  std::vector<double> out(static_cast<std::size_t>(m_max) + 1);
  const double base = -0.5 * x * x - 0.25 * std::log(std::numbers::pi);
  detail::hermite_recurrence(x, m_max, [&](int m, double h, double log_scale) {
    out[static_cast<std::size_t>(m)] = h * std::exp(base + log_scale);
  });
  return out;
}

/// u_m(x) for a single m.
inline double hermite_function(int m, double x) {
  return hermite_functions(x, m).back();
}

/// Nodes and weights for int f(t) exp(-t^2) dt ~= sum_i w_i f(t_i), exact for
/// polynomials of degree <= 2N - 1. Weights are stored as logarithms.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> log_weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double weight(std::size_t i) const { return std::exp(log_weights[i]); }
};

inline constexpr int kMaxGaussHermiteNodes = 640;

namespace detail {

inline GaussHermiteRule build_gauss_hermite(int n) {
  // Golub-Welsch: zeros of h_N are the eigenvalues of the Jacobi matrix with
  // off-diagonal sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) {
    sub(k - 1) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Gauss-Hermite: eigenvalue solve failed for N=" +
                             std::to_string(n));
  }

  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.log_weights.resize(static_cast<std::size_t>(n));
  const double root2n = std::sqrt(2.0 * n);
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()(i);
    // Newton on h_N, with h_N' = sqrt(2N) h_{N-1}; the scale factor cancels.
    for (int iter = 0; iter < 3; ++iter) {
      double hn = 0.0;
      double hn1 = 0.0;
      hermite_recurrence(t, n, [&](int m, double h, double) {
        if (m == n - 1) hn1 = h;
        if (m == n) hn = h;
      });
      if (hn1 == 0.0) break;
      const double step = hn / (root2n * hn1);
      t -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(t))) break;
    }
    // Christoffel weight w = sqrt(pi) / sum_{k<N} h_k(t)^2.
    double sum = 0.0;
    double sum_scale = 0.0;
    hermite_recurrence(t, n - 1, [&](int, double h, double log_scale) {
      if (log_scale != sum_scale) {
        sum *= std::exp(2.0 * (sum_scale - log_scale));
        sum_scale = log_scale;
      }
      sum += h * h;
    });
    rule.nodes[static_cast<std::size_t>(i)] = t;
    rule.log_weights[static_cast<std::size_t>(i)] =
        0.5 * std::log(std::numbers::pi) - std::log(sum) - 2.0 * sum_scale;
  }
  return rule;
}

}  // namespace detail

/// Cached N-point rule; thread-safe, rules are immutable once built.
inline std::shared_ptr<const GaussHermiteRule> gauss_hermite(int n) {
  if (n < 1 || n > kMaxGaussHermiteNodes) {
    throw std::domain_error("gauss_hermite: node count " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxGaussHermiteNodes));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GaussHermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_shared<const GaussHermiteRule>(detail::build_gauss_hermite(n));
  }
  return slot;
}

}  // namespace polystate

#endif  // POLYSTATE_HERMITE_HPP
