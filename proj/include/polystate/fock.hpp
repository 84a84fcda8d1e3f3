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

#ifndef POLYSTATE_FOCK_HPP
#define POLYSTATE_FOCK_HPP

// Truncated single-mode Fock space.
//
// Conventions used throughout the library:
//   x = (a + a^dag) / sqrt(2),   p = i (a^dag - a) / sqrt(2),
//   R(theta) = exp(-i theta n)   multiplies A_m by exp(-i theta m),
// so a coherent state |alpha> with real alpha > 0 has <x> = sqrt(2) alpha and
// R(theta) maps alpha to alpha exp(-i theta) (clockwise in the x-p plane).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polystate/group.hpp"

namespace polystate {

inline constexpr int kDefaultNMax = 64;
/// Tail masses above this mark a state as truncation-flagged.
inline constexpr double kTailTolerance = 1e-10;

class FockVector {
 public:
  /// The vacuum in a one-level space.
  FockVector() : amplitudes_{Complex{1.0, 0.0}} {}

  /// Wraps amplitudes A_0..A_{n_max}. Without an explicit tail mass the weight
  /// of the top level, |A_{n_max}|^2 / ||A||^2, is used as the estimate.
  explicit FockVector(std::vector<Complex> amplitudes,
                      double tail_mass = std::numeric_limits<double>::quiet_NaN())
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
      throw std::invalid_argument("FockVector: need at least one amplitude");
    }
    for (const Complex& z : amplitudes_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("FockVector: non-finite amplitude");
      }
    }
    if (std::isnan(tail_mass)) {
      const double total = norm_squared();
      tail_mass_ = total > 0.0 ? std::norm(amplitudes_.back()) / total : 0.0;
    } else {
      tail_mass_ = tail_mass;
    }
  }

  static FockVector zero(int n_max) {
    check_n_max(n_max);
    return FockVector(std::vector<Complex>(static_cast<std::size_t>(n_max) + 1),
                      0.0);
  }

  int n_max() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  Complex operator[](std::size_t m) const { return amplitudes_[m]; }
  /// A_m, or 0 beyond the truncation.
  Complex amplitude(std::size_t m) const noexcept {
    return m < amplitudes_.size() ? amplitudes_[m] : Complex{};
  }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const Complex& z : amplitudes_) {
      s += std::norm(z);
    }
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm_squared()); }

  FockVector normalized() const {
    const double nrm = norm();
    if (!(nrm > 0.0)) {
      throw std::domain_error("FockVector: cannot normalize the zero vector");
    }
    return scaled(Complex{1.0 / nrm, 0.0});
  }

  FockVector scaled(Complex factor) const {
    std::vector<Complex> out(amplitudes_);
    for (Complex& z : out) {
      z *= factor;
    }
    return FockVector(std::move(out), tail_mass_);
  }

  /// Zero-pads (or truncates) to a new n_max.
  FockVector resized(int n_max) const {
    check_n_max(n_max);
    std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
    std::copy_n(amplitudes_.begin(), std::min(out.size(), amplitudes_.size()),
                out.begin());
    return FockVector(std::move(out), tail_mass_);
  }

  double tail_mass() const noexcept { return tail_mass_; }
  bool tail_flagged(double tolerance = kTailTolerance) const noexcept {
    return tail_mass_ > tolerance;
  }
  FockVector with_tail_mass(double tail_mass) const {
    return FockVector(amplitudes_, tail_mass);
  }

  friend FockVector operator+(const FockVector& a, const FockVector& b) {
    return combine(a, b, Complex{1.0, 0.0});
  }
  friend FockVector operator-(const FockVector& a, const FockVector& b) {
    return combine(a, b, Complex{-1.0, 0.0});
  }
  friend FockVector operator*(Complex s, const FockVector& v) { return v.scaled(s); }

  static void check_n_max(int n_max) {
    if (n_max < 0) {
      throw std::domain_error("n_max must be >= 0, got " + std::to_string(n_max));
    }
  }

 private:
  static FockVector combine(const FockVector& a, const FockVector& b, Complex sb) {
    const std::size_t len = std::max(a.size(), b.size());
    std::vector<Complex> out(len);
    for (std::size_t m = 0; m < len; ++m) {
      out[m] = a.amplitude(m) + sb * b.amplitude(m);
    }
    return FockVector(std::move(out), std::max(a.tail_mass_, b.tail_mass_));
  }

  std::vector<Complex> amplitudes_;
  double tail_mass_ = 0.0;
};

/// Number state |k> in a space truncated at n_max.
inline FockVector fock_state(int k, int n_max) {
  FockVector::check_n_max(n_max);
  if (k < 0 || k > n_max) {
    throw std::domain_error("fock_state: level " + std::to_string(k) +
                            " outside 0.." + std::to_string(n_max));
  }
  std::vector<Complex> amps(static_cast<std::size_t>(n_max) + 1);
  amps[static_cast<std::size_t>(k)] = 1.0;
  return FockVector(std::move(amps), 0.0);
}

/// R(theta)|phi>: A_m -> exp(-i theta m) A_m.
inline FockVector rotate(const FockVector& state, double theta) {
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] *= std::polar(1.0, -theta * static_cast<double>(m));
  }
  return FockVector(std::move(out), state.tail_mass());
}

/// R(theta_r)|phi> for element r of C_n, with the phases mu_n^{-(r-1)m} taken
/// from exact residue arithmetic instead of theta_r * m.
inline FockVector rotate_element(const FockVector& state, int n, int r) {
  GroupSpec(n).check_element(r);
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] *= root_of_unity(-static_cast<std::int64_t>(r - 1) *
                                static_cast<std::int64_t>(m),
                            n);
  }
  return FockVector(std::move(out), state.tail_mass());
}

/// C|phi>: A_m -> conj(A_m).
inline FockVector conjugate(const FockVector& state) {
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (Complex& z : out) {
    z = std::conj(z);
  }
  return FockVector(std::move(out), state.tail_mass());
}

/// U_r|phi> = C R(theta_r)|phi>: A_m -> conj(A_m) exp(i theta_r m).
inline FockVector inversion(const FockVector& state, int r, int n) {
  return conjugate(rotate_element(state, n, r));
}

/// <bra|ket>, zero-padding the shorter vector.
inline Complex inner(const FockVector& bra, const FockVector& ket) {
  const std::size_t len = std::min(bra.size(), ket.size());
  Complex s{0.0, 0.0};
  for (std::size_t m = 0; m < len; ++m) {
    s += std::conj(bra[m]) * ket[m];
  }
  return s;
}

/// |<a|b>|^2 / (||a||^2 ||b||^2).
inline double fidelity(const FockVector& a, const FockVector& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (!(na > 0.0) || !(nb > 0.0)) {
    throw std::domain_error("fidelity: zero vector");
  }
  return std::norm(inner(a, b)) / (na * nb);
}

/// max_m |A_m(a) - e^{i phi} A_m(b)| with phi = arg <b|a>, the phase that best
/// aligns b onto a.
inline double phase_aligned_distance(const FockVector& a, const FockVector& b) {
  const Complex overlap = inner(b, a);
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double worst = 0.0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t m = 0; m < len; ++m) {
    worst = std::max(worst, std::abs(a.amplitude(m) - phase * b.amplitude(m)));
  }
  return worst;
}

/// max_m |A_m(a) - A_m(b)|.
inline double max_abs_difference(const FockVector& a, const FockVector& b) {
  double worst = 0.0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t m = 0; m < len; ++m) {
    worst = std::max(worst, std::abs(a.amplitude(m) - b.amplitude(m)));
  }
  return worst;
}

struct QuadratureMeans {
  double mean_x = 0.0;
  double mean_p = 0.0;
};

/// <a> = sum_m sqrt(m + 1) conj(A_m) A_{m+1}.
inline Complex mean_annihilation(const FockVector& state) {
  Complex s{0.0, 0.0};
  for (std::size_t m = 0; m + 1 < state.size(); ++m) {
    s += std::sqrt(static_cast<double>(m + 1)) * std::conj(state[m]) * state[m + 1];
  }
  return s;
}

inline QuadratureMeans quadrature_means(const FockVector& state) {
  const Complex a = mean_annihilation(state);
  return {std::sqrt(2.0) * a.real(), std::sqrt(2.0) * a.imag()};
}

/// Symmetrized covariance of (x, p), row-major {xx, xp, px, pp}.
inline std::array<double, 4> quadrature_covariance(const FockVector& state) {
  Complex a{0.0, 0.0};
  Complex a2{0.0, 0.0};
  double n = 0.0;
  for (std::size_t m = 0; m < state.size(); ++m) {
    const double md = static_cast<double>(m);
    n += md * std::norm(state[m]);
    if (m + 1 < state.size()) {
      a += std::sqrt(md + 1.0) * std::conj(state[m]) * state[m + 1];
    }
    if (m + 2 < state.size()) {
      a2 += std::sqrt((md + 1.0) * (md + 2.0)) * std::conj(state[m]) * state[m + 2];
    }
  }
  const double x = std::sqrt(2.0) * a.real();
  const double p = std::sqrt(2.0) * a.imag();
  const double xx = a2.real() + n + 0.5 - x * x;
  const double pp = -a2.real() + n + 0.5 - p * p;
  const double xp = a2.imag() - x * p;
  return {xx, xp, xp, pp};
}

struct PhotonMoments {
  double mean = 0.0;         // <n>
  double second = 0.0;       // <n^2>
  std::vector<double> distribution;  // p_m = |A_m|^2
};

inline PhotonMoments photon_moments(const FockVector& state) {
  PhotonMoments out;
  out.distribution.resize(state.size());
  for (std::size_t m = 0; m < state.size(); ++m) {
    const double pm = std::norm(state[m]);
    const double md = static_cast<double>(m);
    out.distribution[m] = pm;
    out.mean += md * pm;
    out.second += md * md * pm;
  }
  return out;
}

/// Residue class of lambda in C_n: photon numbers m == lambda - 1 (mod n).
inline bool in_class(std::size_t m, int n, int lambda) noexcept {
  return mod_floor(static_cast<std::int64_t>(m) - (lambda - 1), n) == 0;
}

/// w_k = sum_{m == k (mod n)} |A_m|^2 for k = 0..n-1.
inline std::vector<double> residue_class_masses(const FockVector& state, int n) {
  if (n < 1) {
    throw std::domain_error("residue_class_masses: order must be >= 1");
  }
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (std::size_t m = 0; m < state.size(); ++m) {
    w[m % static_cast<std::size_t>(n)] += std::norm(state[m]);
  }
  return w;
}

struct NoninvariantDiagnostics {
  QuadratureMeans means;
  /// max(|<x>|, |<p>|) > tol: the mean-quadrature sufficient condition.
  bool displaced = false;
  /// Mass of the seed in the class of lambda.
  double class_mass = 0.0;
  std::vector<double> class_masses;
  /// The (n, lambda) state exists: class_mass > tol^2.
  bool constructible = false;
};

inline NoninvariantDiagnostics check_noninvariant(const FockVector& state, int n,
                                                  int lambda, double tol) {
  if (n < 1 || lambda < 1 || lambda > n) {
    throw std::domain_error("check_noninvariant: need 1 <= lambda <= n");
  }
  NoninvariantDiagnostics d;
  d.means = quadrature_means(state);
  d.displaced = std::max(std::abs(d.means.mean_x), std::abs(d.means.mean_p)) > tol;
  d.class_masses = residue_class_masses(state, n);
  d.class_mass = d.class_masses[static_cast<std::size_t>(lambda - 1)];
  d.constructible = d.class_mass > tol * tol;
  return d;
}

/// Coherent state |alpha>, A_m = alpha^m e^{-|alpha|^2/2} / sqrt(m!), built by
/// ratio updates in log-magnitude and renormalized after truncation. The lost
/// Poisson weight beyond n_max is recorded as the tail mass.
inline FockVector coherent(Complex alpha, int n_max) {
  FockVector::check_n_max(n_max);
  const double r = std::abs(alpha);
  const double r2 = r * r;
  const double arg = std::arg(alpha);
  std::vector<Complex> amps(static_cast<std::size_t>(n_max) + 1);
  if (r == 0.0) {
    amps[0] = 1.0;
    return FockVector(std::move(amps), 0.0);
  }
  const double log_r = std::log(r);
  double log_mag = -0.5 * r2;
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) {
      log_mag += log_r - 0.5 * std::log(static_cast<double>(m));
    }
    amps[static_cast<std::size_t>(m)] = std::polar(std::exp(log_mag), arg * m);
  }

  // Poisson weight beyond the truncation, p_m = exp(2 log_mag).
  double tail = 0.0;
  double log_p = 2.0 * log_mag;
  for (int m = n_max + 1; m < n_max + 100000; ++m) {
    log_p += 2.0 * log_r - std::log(static_cast<double>(m));
    const double pm = std::exp(log_p);
    tail += pm;
    if (m > r2 && (pm == 0.0 || pm < 1e-18 * tail)) {
      break;
    }
  }
  tail = std::min(tail, 1.0);

  FockVector raw(std::move(amps), tail);
  return raw.normalized();
}

/// a|phi>, unnormalized: amplitude m = sqrt(m + 1) A_{m+1}, top level zero.
inline FockVector annihilate(const FockVector& state) {
  std::vector<Complex> out(state.size());
  for (std::size_t m = 0; m + 1 < state.size(); ++m) {
    out[m] = std::sqrt(static_cast<double>(m + 1)) * state[m + 1];
  }
  return FockVector(std::move(out), state.tail_mass());
}

}  // namespace polystate

#endif  // POLYSTATE_FOCK_HPP
