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

#ifndef POLYSTATE_WIGNER_HPP
#define POLYSTATE_WIGNER_HPP

// Wigner function W(x, p) = (1/pi) int psi*(x + y) psi(x - y) exp(2 i p y) dy.
//
// Production path: the Fock expansion W = sum_{m,n} A_m A_n* W_{mn}, with
//   W_{m,m+k}(x, p) = ((-1)^m / pi) sqrt(m!/(m+k)!) (sqrt(2)(x + i p))^k
//                     exp(-(x^2 + p^2)) L_m^{(k)}(2(x^2 + p^2))
// for the element |m><m+k| and W_{m+k,m} its conjugate. The Laguerre factor
// is generated in normalized form so that nothing overflows at large m.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polystate/fock.hpp"
#include "polystate/fock_operator.hpp"
#include "polystate/hermite.hpp"

namespace polystate {

struct GridSpec {
  double x_min = -5.0;
  double x_max = 5.0;
  double p_min = -5.0;
  double p_max = 5.0;
  int points = 41;

  void validate() const {
    if (points < 2) {
      throw std::domain_error("GridSpec: need at least 2 points per axis");
    }
    if (!(x_max > x_min) || !(p_max > p_min) || !std::isfinite(x_min) ||
        !std::isfinite(x_max) || !std::isfinite(p_min) || !std::isfinite(p_max)) {
      throw std::domain_error("GridSpec: degenerate or non-finite bounds");
    }
  }
  double dx() const { return (x_max - x_min) / (points - 1); }
  double dp() const { return (p_max - p_min) / (points - 1); }
  double x(int i) const { return x_min + (x_max - x_min) * i / (points - 1); }
  double p(int j) const { return p_min + (p_max - p_min) * j / (points - 1); }

  static GridSpec square(double half_width, int points) {
    return {-half_width, half_width, -half_width, half_width, points};
  }
};

/// Values stored x-fastest: values[j * points + i] = W(x_i, p_j).
struct WignerGrid {
  GridSpec spec;
  std::vector<double> values;

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(j) * spec.points + i];
  }
  /// sum W dx dp.
  double normalization() const {
    double s = 0.0;
    for (double w : values) s += w;
    return s * spec.dx() * spec.dp();
  }
  double min_value() const {
    double m = values.front();
    for (double w : values) m = std::min(m, w);
    return m;
  }
};

namespace detail {

/// Calls visit(m, f) for m = 0..m_max where
/// f = sqrt(m!/(m+k)!) z^{k/2} exp(-z/2) L_m^{(k)}(z).
template <typename Visit>
void normalized_laguerre(int k, double z, int m_max, Visit&& visit) {
  if (m_max < 0) return;
  double f0;
  if (k == 0) {
    f0 = std::exp(-0.5 * z);
  } else if (z == 0.0) {
    f0 = 0.0;
  } else {
    f0 = std::exp(0.5 * k * std::log(z) - 0.5 * z - 0.5 * std::lgamma(k + 1.0));
  }
  visit(0, f0);
  if (m_max == 0) return;
  double prev = f0;
  double cur = (k + 1.0 - z) * f0 / std::sqrt(k + 1.0);
  visit(1, cur);
  for (int m = 1; m < m_max; ++m) {
    const double md = m;
    const double next = ((2.0 * md + k + 1.0 - z) * cur -
                         std::sqrt(md * (md + k)) * prev) /
                        std::sqrt((md + 1.0) * (md + k + 1.0));
    prev = cur;
    cur = next;
    visit(m + 1, cur);
  }
}

}  // namespace detail

/// All elements W_{|m><n|}(x, p), m, n = 0..n_max, from the Laguerre kernel.
inline MatrixC wigner_elements(int n_max, double x, double p) {
  FockVector::check_n_max(n_max);
  const double z = 2.0 * (x * x + p * p);
  const double phi = std::atan2(p, x);
  MatrixC w(n_max + 1, n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    const Complex rot = std::polar(1.0 / std::numbers::pi, k * phi);
    detail::normalized_laguerre(k, z, n_max - k, [&](int m, double f) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const Complex v = sign * f * rot;
      w(m, m + k) = v;
      w(m + k, m) = std::conj(v);
    });
  }
  return w;
}

/// W_{|m><n|}(x, p).
inline Complex wigner_element(int m, int n, double x, double p) {
  if (m < 0 || n < 0) {
    throw std::domain_error("wigner_element: negative level");
  }
  const int lo = std::min(m, n);
  const int k = std::abs(m - n);
  const double z = 2.0 * (x * x + p * p);
  double f = 0.0;
  detail::normalized_laguerre(k, z, lo, [&](int j, double v) {
    if (j == lo) f = v;
  });
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  const Complex v = sign * f * std::polar(1.0 / std::numbers::pi, k * std::atan2(p, x));
  return m <= n ? v : std::conj(v);
}

/// W_psi(x, p) = sum_m |A_m|^2 W_mm + 2 Re sum_{k>=1} sum_m A_m A_{m+k}* W_{m,m+k}.
inline double wigner_point(const FockVector& state, double x, double p) {
  const int n_max = state.n_max();
  const double z = 2.0 * (x * x + p * p);
  const double phi = std::atan2(p, x);
  double total = 0.0;
  for (int k = 0; k <= n_max; ++k) {
    Complex acc{0.0, 0.0};
    detail::normalized_laguerre(k, z, n_max - k, [&](int m, double f) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      acc += sign * f * state[static_cast<std::size_t>(m)] *
             std::conj(state[static_cast<std::size_t>(m + k)]);
    });
    const Complex term = acc * std::polar(1.0 / std::numbers::pi, k * phi);
    total += (k == 0 ? 1.0 : 2.0) * term.real();
  }
  return total;
}

/// W_rho(x, p) = sum_{m,n} rho_{mn} W_{|m><n|}(x, p).
inline double wigner_point(const FockOperator& rho, double x, double p) {
  const MatrixC w = wigner_elements(rho.n_max(), x, p);
  return trace_product(rho, FockOperator(w.transpose())).real();
}

inline WignerGrid wigner(const FockVector& state, const GridSpec& grid) {
  grid.validate();
  WignerGrid out{grid, std::vector<double>(static_cast<std::size_t>(grid.points) *
                                           grid.points)};
  for (int j = 0; j < grid.points; ++j) {
    for (int i = 0; i < grid.points; ++i) {
      out.values[static_cast<std::size_t>(j) * grid.points + i] =
          wigner_point(state, grid.x(i), grid.p(j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct evaluation of the defining integral (oracle)

struct DirectIntegralRule {
  double step = 0.05;
  double half_width = 12.0;
};

/// All elements W_{|m><n|}(x, p) = (1/pi) int u_n(x + y) u_m(x - y) e^{2ipy} dy
/// by the trapezoid rule, which converges spectrally for these integrands.
inline MatrixC wigner_elements_direct(int n_max, double x, double p,
                                      DirectIntegralRule rule = {}) {
  FockVector::check_n_max(n_max);
  const int half = static_cast<int>(std::ceil(rule.half_width / rule.step));
  const std::size_t count = 2 * static_cast<std::size_t>(half) + 1;
  const Eigen::Index dim = n_max + 1;
  Eigen::MatrixXd plus(dim, static_cast<Eigen::Index>(count));
  Eigen::MatrixXcd minus(dim, static_cast<Eigen::Index>(count));
  for (int j = -half; j <= half; ++j) {
    const double y = j * rule.step;
    const auto up = hermite_functions(x + y, n_max);
    const auto um = hermite_functions(x - y, n_max);
    const Complex phase = std::polar(rule.step / std::numbers::pi, 2.0 * p * y);
    const auto col = static_cast<Eigen::Index>(j + half);
    for (Eigen::Index m = 0; m < dim; ++m) {
      plus(m, col) = up[static_cast<std::size_t>(m)];
      minus(m, col) = um[static_cast<std::size_t>(m)] * phase;
    }
  }
  // (m, n) entry: sum_j u_m(x - y_j) phase_j u_n(x + y_j).
  return minus * plus.transpose().cast<Complex>();
}

/// W_psi(x, p) from the defining integral with psi(x) = sum_m A_m u_m(x).
inline double wigner_point_direct(const FockVector& state, double x, double p,
                                  DirectIntegralRule rule = {}) {
  const int half = static_cast<int>(std::ceil(rule.half_width / rule.step));
  Complex total{0.0, 0.0};
  for (int j = -half; j <= half; ++j) {
    const double y = j * rule.step;
    const auto up = hermite_functions(x + y, state.n_max());
    const auto um = hermite_functions(x - y, state.n_max());
    Complex psi_plus{0.0, 0.0};
    Complex psi_minus{0.0, 0.0};
    for (std::size_t m = 0; m < state.size(); ++m) {
      psi_plus += state[m] * up[m];
      psi_minus += state[m] * um[m];
    }
    total += std::conj(psi_plus) * psi_minus * std::polar(1.0, 2.0 * p * y);
  }
  return (total * rule.step / std::numbers::pi).real();
}

// ---------------------------------------------------------------------------
// Symmetry residuals

/// Image of (x, p) under the phase-space rotation zeta -> exp(i alpha) zeta,
/// zeta = x + i p.
inline std::pair<double, double> rotate_point(double x, double p, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {c * x - s * p, s * x + c * p};
}

/// Mirror image of (x, p) in the line through the origin at angle alpha.
inline std::pair<double, double> reflect_point(double x, double p, double alpha) {
  const double c = std::cos(2.0 * alpha);
  const double s = std::sin(2.0 * alpha);
  return {c * x + s * p, s * x - c * p};
}

/// max over the grid of |W(rotated by 2 pi / n) - W|.
inline double rotation_residual(const FockVector& state, int n, const GridSpec& grid) {
  grid.validate();
  if (n < 1) throw std::domain_error("rotation_residual: order must be >= 1");
  double worst = 0.0;
  for (int j = 0; j < grid.points; ++j) {
    for (int i = 0; i < grid.points; ++i) {
      const auto [xr, pr] = rotate_point(grid.x(i), grid.p(j), kTwoPi / n);
      worst = std::max(worst, std::abs(wigner_point(state, xr, pr) -
                                       wigner_point(state, grid.x(i), grid.p(j))));
    }
  }
  return worst;
}

/// max over the grid and over the n axes at angles pi k / n of
/// |W(reflected) - W|.
inline double reflection_residual(const FockVector& state, int n, const GridSpec& grid) {
  grid.validate();
  if (n < 1) throw std::domain_error("reflection_residual: order must be >= 1");
  double worst = 0.0;
  for (int axis = 0; axis < n; ++axis) {
    const double alpha = std::numbers::pi * axis / n;
    for (int j = 0; j < grid.points; ++j) {
      for (int i = 0; i < grid.points; ++i) {
        const auto [xr, pr] = reflect_point(grid.x(i), grid.p(j), alpha);
        worst = std::max(worst, std::abs(wigner_point(state, xr, pr) -
                                         wigner_point(state, grid.x(i), grid.p(j))));
      }
    }
  }
  return worst;
}

/// max over the grid of |W(x, p) - W(x, -p)|.
inline double inversion_asymmetry(const FockVector& state, const GridSpec& grid) {
  grid.validate();
  double worst = 0.0;
  for (int j = 0; j < grid.points; ++j) {
    for (int i = 0; i < grid.points; ++i) {
      worst = std::max(worst, std::abs(wigner_point(state, grid.x(i), grid.p(j)) -
                                       wigner_point(state, grid.x(i), -grid.p(j))));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// CSV

/// Header `x,p,w`, one row per node with x varying fastest, %.12e fields.
inline void write_csv(const WignerGrid& grid, std::ostream& os) {
  os << "x,p,w\n";
  char line[96];
  for (int j = 0; j < grid.spec.points; ++j) {
    for (int i = 0; i < grid.spec.points; ++i) {
      std::snprintf(line, sizeof line, "%.12e,%.12e,%.12e\n", grid.spec.x(i),
                    grid.spec.p(j), grid.at(i, j));
      os << line;
    }
  }
}

}  // namespace polystate

#endif  // POLYSTATE_WIGNER_HPP
