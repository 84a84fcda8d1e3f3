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

#ifndef POLYSTATE_GAUSSIAN_HPP
#define POLYSTATE_GAUSSIAN_HPP

// Position-space Gaussians psi(x) = C exp(-a x^2 + b x), Re a > 0, and their
// cyclic superpositions.
//
//   C = ((a + a*)/pi (1 + 2a)/(1 + 2a*))^{1/4} exp(-(b^2 + b b*)/(4(a + a*)))
//
// with the principal branch of the fourth root. The unit-modulus factor in C
// is what makes R(theta) applied to psi land exactly on the Gaussian with
// parameters (a(theta), b(theta)), global phase included.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "polystate/cyclic.hpp"
#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/group.hpp"
#include "polystate/hermite.hpp"

namespace polystate {

/// Tail masses above this mark a Gaussian embedding as under-resolved.
inline constexpr double kGaussianTailTolerance = 1e-8;

struct GaussianParams {
  Complex a{0.5, 0.0};
  Complex b{1.0, 0.0};

  void validate() const {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
      throw std::domain_error("GaussianParams: non-finite parameter");
    }
    if (!(a.real() > 0.0)) {
      throw std::domain_error("GaussianParams: Re(a) must be > 0");
    }
    if (b == Complex{}) {
      throw std::domain_error("GaussianParams: b must be nonzero");
    }
  }
};

/// The normalization prefactor C, including its b-dependent exponential.
inline Complex gaussian_prefactor(const GaussianParams& p) {
  const Complex s = p.a + std::conj(p.a);
  const Complex ratio = (1.0 + 2.0 * p.a) / (1.0 + 2.0 * std::conj(p.a));
  return std::pow(s / std::numbers::pi * ratio, 0.25) *
         std::exp(-(p.b * p.b + p.b * std::conj(p.b)) / (4.0 * s));
}

inline Complex wavefunction(const GaussianParams& p, double x) {
  return gaussian_prefactor(p) * std::exp(-p.a * x * x + p.b * x);
}

struct GaussianMoments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  /// Row-major {xx, xp, px, pp}.
  std::array<double, 4> covariance{};
  /// Largest imaginary part left over by the complex closed forms.
  double imag_residue = 0.0;

  double determinant() const {
    return covariance[0] * covariance[3] - covariance[1] * covariance[2];
  }
};

/// <x> = (b + b*)/(2(a + a*)), <p> = i(a b* - a* b)/(a + a*), and the
/// covariance (1/(2(a + a*))) [[1, i(a - a*)], [i(a - a*), 4|a|^2]] in (x, p)
/// order.
inline GaussianMoments moments(const GaussianParams& p) {
  p.validate();
  const Complex ac = std::conj(p.a);
  const Complex bc = std::conj(p.b);
  const Complex s = p.a + ac;
  const Complex ix = (p.b + bc) / (2.0 * s);
  const Complex ip = Complex{0.0, 1.0} * (p.a * bc - ac * p.b) / s;
  const Complex pref = 1.0 / (2.0 * s);
  const Complex cxx = pref;
  const Complex cxp = pref * Complex{0.0, 1.0} * (p.a - ac);
  const Complex cpp = pref * 4.0 * std::norm(p.a);

  GaussianMoments m;
  m.mean_x = ix.real();
  m.mean_p = ip.real();
  m.covariance = {cxx.real(), cxp.real(), cxp.real(), cpp.real()};
  for (const Complex& z : {ix, ip, cxx, cxp, cpp}) {
    m.imag_residue = std::max(m.imag_residue, std::abs(z.imag()));
  }
  return m;
}

/// Parameters of R(theta) psi:
///   a(theta) = (2 i a cos - sin) / (2 (i cos - 2 a sin)),
///   b(theta) = b / (cos + 2 i a sin).
inline GaussianParams rotate_params(const GaussianParams& p, double theta) {
  p.validate();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex i{0.0, 1.0};
  const Complex den = c + 2.0 * i * p.a * s;
  if (std::abs(den) < 1e-14) {
    throw std::domain_error("rotate_params: singular rotation at theta=" +
                            std::to_string(theta));
  }
  return {(2.0 * i * p.a * c - s) / (2.0 * (i * c - 2.0 * p.a * s)), p.b / den};
}

/// Fock amplitudes A_m = int u_m(x) psi(x) dx.
///
/// After completing the square, z = a + 1/2 and x0 = b / (2z), the integrand
/// is exp(-z (x - x0)^2) times a polynomial. Gauss-Hermite on the rotated line
/// x = x0 + exp(i beta) t / sqrt(|z|), beta = -arg(z)/2, then integrates it
/// exactly. The tail mass is 1 - sum |A_m|^2 before renormalization.
inline FockVector gaussian_to_fock(const GaussianParams& p, int n_max,
                                   int nodes = 0) {
  p.validate();
  FockVector::check_n_max(n_max);
  if (nodes <= 0) {
    nodes = std::min(2 * n_max + 32, kMaxGaussHermiteNodes);
  }
  if (nodes < n_max / 2 + 1) {
    throw std::domain_error("gaussian_to_fock: too few quadrature nodes");
  }
  const auto rule = gauss_hermite(nodes);

  const Complex z = p.a + 0.5;
  const Complex x0 = p.b / (2.0 * z);
  const double beta = -0.5 * std::arg(z);
  const Complex dir = std::polar(1.0 / std::sqrt(std::abs(z)), beta);
  const Complex k = std::pow(std::numbers::pi, -0.25) * gaussian_prefactor(p) *
                    std::exp(p.b * p.b / (4.0 * z)) * dir;

  std::vector<Complex> amps(static_cast<std::size_t>(n_max) + 1);
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const Complex x = x0 + dir * rule->nodes[i];
    const double lw = rule->log_weights[i];
    detail::hermite_recurrence(x, n_max, [&](int m, Complex h, double log_scale) {
      amps[static_cast<std::size_t>(m)] += std::exp(lw + log_scale) * h;
    });
  }
  double total = 0.0;
  for (Complex& amp : amps) {
    amp *= k;
    total += std::norm(amp);
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::runtime_error("gaussian_to_fock: quadrature produced no weight");
  }
  const double tail = std::max(0.0, 1.0 - total);
  return FockVector(std::move(amps), tail).normalized();
}

/// Cyclic state of the Fock embedding of psi.
inline CyclicState cyclic_gaussian(const GaussianParams& p, CyclicSpec spec,
                                   int n_max, Method method = Method::superposition) {
  return make_cyclic(gaussian_to_fock(p, n_max), spec, method);
}

/// sum_m A_m u_m(x).
inline Complex reconstruct_position(const FockVector& state, double x) {
  const auto u = hermite_functions(x, state.n_max());
  Complex s{0.0, 0.0};
  for (std::size_t m = 0; m < state.size(); ++m) {
    s += state[m] * u[m];
  }
  return s;
}

/// <psi_p|psi_q> for two Gaussians, in closed form.
inline Complex gaussian_overlap(const GaussianParams& p, const GaussianParams& q) {
  const Complex a = std::conj(p.a) + q.a;
  const Complex b = std::conj(p.b) + q.b;
  return std::conj(gaussian_prefactor(p)) * gaussian_prefactor(q) *
         std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a));
}

/// N_lambda sum_r chi(g_r) psi_r(x), with psi_r the Gaussian of
/// rotate_params(p, theta_r) and N_lambda real positive from the closed-form
/// overlaps.
class CyclicGaussianWave {
 public:
  CyclicGaussianWave(const GaussianParams& p, CyclicSpec spec) : spec_(spec) {
    p.validate();
    spec.validate();
    const GroupSpec group(spec.n);
    for (int r = 1; r <= spec.n; ++r) {
      terms_.push_back(rotate_params(p, group.angle(r)));
      prefactors_.push_back(gaussian_prefactor(terms_.back()));
      chars_.push_back(character(spec.n, spec.lambda, r));
    }
    Complex norm2{0.0, 0.0};
    for (int r = 0; r < spec.n; ++r) {
      for (int s = 0; s < spec.n; ++s) {
        norm2 += chars_[static_cast<std::size_t>(r)] *
                 std::conj(chars_[static_cast<std::size_t>(s)]) *
                 gaussian_overlap(terms_[static_cast<std::size_t>(s)],
                                  terms_[static_cast<std::size_t>(r)]);
      }
    }
    if (!(norm2.real() > 64.0 * spec.n * std::numeric_limits<double>::epsilon())) {
      throw EmptyRepresentation(spec.n, spec.lambda, {},
                                "Gaussian character sum has zero norm");
    }
    raw_norm_ = std::sqrt(norm2.real());
  }

  Complex operator()(double x) const {
    Complex s{0.0, 0.0};
    for (std::size_t r = 0; r < terms_.size(); ++r) {
      s += chars_[r] * prefactors_[r] *
           std::exp(-terms_[r].a * x * x + terms_[r].b * x);
    }
    return s / raw_norm_;
  }

  NormalizationRecord normalization() const {
    return {raw_norm_, 1.0 / raw_norm_, raw_norm_ / spec_.n};
  }
  const std::vector<GaussianParams>& rotated_params() const noexcept { return terms_; }
  CyclicSpec spec() const noexcept { return spec_; }

 private:
  CyclicSpec spec_;
  std::vector<GaussianParams> terms_;
  std::vector<Complex> prefactors_;
  std::vector<Complex> chars_;
  double raw_norm_ = 0.0;
};

/// N_{1,2} exp(-a x^2) (exp(b x) +- exp(-b x)) with
/// N_{1,2} = ((a + a*)/pi (1 + 2a)/(1 + 2a*))^{1/4}
///           exp(-(b^2 + b b*)/(4(a + a*))) / (sqrt(2) (1 +- exp(-b b*/(a + a*)))^{1/2}).
inline Complex c2_closed_form(const GaussianParams& p, int lambda, double x) {
  if (lambda != 1 && lambda != 2) {
    throw std::domain_error("c2_closed_form: lambda must be 1 or 2, got " +
                            std::to_string(lambda));
  }
  p.validate();
  const double sign = lambda == 1 ? 1.0 : -1.0;
  const Complex s = p.a + std::conj(p.a);
  const Complex overlap = std::exp(-p.b * std::conj(p.b) / s);
  const Complex norm = gaussian_prefactor(p) /
                       (std::sqrt(2.0) * std::sqrt(1.0 + sign * overlap));
  return norm * std::exp(-p.a * x * x) *
         (std::exp(p.b * x) + sign * std::exp(-p.b * x));
}

}  // namespace polystate

#endif  // POLYSTATE_GAUSSIAN_HPP
