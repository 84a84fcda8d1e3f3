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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polystate/gaussian.hpp"

using polystate::Complex;
using polystate::FockVector;
using polystate::GaussianParams;

namespace {

double norm_by_quadrature(const std::function<Complex(double)>& psi) {
  return oracle::integrate([&](double x) { return Complex(std::norm(psi(x)), 0.0); }, -14.0,
                           14.0)
      .real();
}

std::vector<GaussianParams> sample_params() {
  return {{{0.5, 0.0}, {1.0, 0.0}},   {{1.0, 0.0}, {std::sqrt(2.0), std::sqrt(2.0)}},
          {{0.3, 0.4}, {-1.2, 0.7}},  {{2.0, -1.0}, {0.4, -2.5}},
          {{1.0, 0.0}, {std::sqrt(6.0), 2.0}}, {{0.8, 1.5}, {2.0, 1.0}}};
}

}  // namespace

TEST(GaussianParams, Validation) {
  EXPECT_THROW((GaussianParams{{0.0, 1.0}, {1.0, 0.0}}).validate(), std::domain_error);
  EXPECT_THROW((GaussianParams{{-1.0, 0.0}, {1.0, 0.0}}).validate(), std::domain_error);
  EXPECT_THROW((GaussianParams{{1.0, 0.0}, {0.0, 0.0}}).validate(), std::domain_error);
  EXPECT_THROW((GaussianParams{{NAN, 0.0}, {1.0, 0.0}}).validate(), std::domain_error);
  EXPECT_NO_THROW((GaussianParams{{1.0, -3.0}, {0.0, 1.0}}).validate());
}

TEST(Wavefunction, VacuumLimit) {
  const GaussianParams p{{0.5, 0.0}, {1e-12, 0.0}};
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    const Complex ref = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    EXPECT_NEAR(std::abs(polystate::wavefunction(p, x) - ref), 0.0, 1e-6);
  }
}

TEST(Wavefunction, PeakAtMean) {
  const GaussianParams p{{0.5, 0.0}, {1.0, 0.0}};
  const double at = std::norm(polystate::wavefunction(p, 1.0));
  for (double dx : {-1e-3, 1e-3, -0.1, 0.1, 1.0}) {
    EXPECT_LT(std::norm(polystate::wavefunction(p, 1.0 + dx)), at);
  }
}

TEST(Wavefunction, NormalizedByQuadrature) {
  for (const auto& p : sample_params()) {
    EXPECT_NEAR(norm_by_quadrature([&](double x) { return polystate::wavefunction(p, x); }),
                1.0, 1e-10);
  }
}

TEST(Moments, Examples) {
  const auto m = polystate::moments({{0.5, 0.0}, {1.0, 0.0}});
  EXPECT_NEAR(m.mean_x, 1.0, 1e-15);
  EXPECT_NEAR(m.mean_p, 0.0, 1e-15);
  EXPECT_NEAR(m.covariance[0], 0.5, 1e-15);
  EXPECT_NEAR(m.covariance[1], 0.0, 1e-15);
  EXPECT_NEAR(m.covariance[3], 0.5, 1e-15);
  const auto mi = polystate::moments({{0.5, 0.0}, {0.0, 1.0}});
  EXPECT_NEAR(mi.mean_x, 0.0, 1e-15);
  EXPECT_NEAR(mi.mean_p, 1.0, 1e-15);
}

TEST(Moments, PureStateUncertainty) {
  for (const auto& p : sample_params()) {
    const auto m = polystate::moments(p);
    EXPECT_NEAR(m.determinant(), 0.25, 1e-12);
    EXPECT_LE(m.imag_residue, 1e-14);
  }
}

TEST(Moments, AgreeWithFockRoute) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ar(0.5, 1.5);
  std::uniform_real_distribution<double> ai(-0.5, 0.5);
  std::uniform_real_distribution<double> bb(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a_re = ar(rng);
    const double a_im = ai(rng);
    const double b_re = bb(rng);
    const double b_im = bb(rng);
    const GaussianParams p{{a_re, a_im}, {b_re, b_im}};
    const auto m = polystate::moments(p);
    const FockVector v = polystate::gaussian_to_fock(p, 96);
    const auto q = polystate::quadrature_means(v);
    const auto c = polystate::quadrature_covariance(v);
    EXPECT_NEAR(q.mean_x, m.mean_x, 1e-8);
    EXPECT_NEAR(q.mean_p, m.mean_p, 1e-8);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(c[k], m.covariance[k], 1e-8);
  }
}

TEST(RotateParams, Examples) {
  const GaussianParams p{{0.7, 0.3}, {1.1, -0.4}};
  const auto z = polystate::rotate_params(p, 0.0);
  EXPECT_NEAR(std::abs(z.a - p.a), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z.b - p.b), 0.0, 1e-15);
  const auto h = polystate::rotate_params(p, std::numbers::pi);
  EXPECT_NEAR(std::abs(h.a - p.a), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(h.b + p.b), 0.0, 1e-14);
  const Complex b{0.9, 0.2};
  const auto q = polystate::rotate_params({{0.5, 0.0}, b}, std::numbers::pi / 2.0);
  EXPECT_NEAR(std::abs(q.a - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.b - Complex(0.0, -1.0) * b), 0.0, 1e-15);
}

TEST(RotateParams, GroupLaw) {
  const GaussianParams p{{0.4, -0.6}, {1.3, 0.5}};
  const auto ab = polystate::rotate_params(polystate::rotate_params(p, 0.7), 1.2);
  const auto c = polystate::rotate_params(p, 1.9);
  EXPECT_NEAR(std::abs(ab.a - c.a), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(ab.b - c.b), 0.0, 1e-13);
}

TEST(RotateParams, CommutesWithFockRotation) {
  for (const auto& p : sample_params()) {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n;
        const FockVector fock_route = polystate::rotate(polystate::gaussian_to_fock(p, 64), theta);
        const FockVector param_route =
            polystate::gaussian_to_fock(polystate::rotate_params(p, theta), 64);
        EXPECT_GE(polystate::fidelity(fock_route, param_route), 1.0 - 1e-8);
        EXPECT_LE(polystate::max_abs_difference(fock_route, param_route), 1e-8);
      }
    }
  }
}

TEST(GaussianToFock, Examples) {
  const FockVector vac = polystate::gaussian_to_fock({{0.5, 0.0}, {1e-14, 0.0}}, 20);
  EXPECT_LE(polystate::max_abs_difference(vac, polystate::fock_state(0, 20)), 1e-7);

  for (double b : {0.4, 1.0, -2.3}) {
    const FockVector v = polystate::gaussian_to_fock({{0.5, 0.0}, {b, 0.0}}, 50);
    const FockVector d = oracle::displaced_vacuum(b / std::sqrt(2.0), 50);
    EXPECT_LE(polystate::max_abs_difference(v, d), 1e-12) << b;
    for (int m = 0; m <= 50; ++m) EXPECT_NEAR(v[m].imag(), 0.0, 1e-15);
  }

  const FockVector fig = polystate::gaussian_to_fock({{1.0, 0.0}, {std::sqrt(6.0), 2.0}}, 64);
  EXPECT_LT(fig.tail_mass(), 1e-8);
  EXPECT_FALSE(fig.tail_flagged(polystate::kGaussianTailTolerance));
}

TEST(GaussianToFock, MatchesProjectionQuadrature) {
  for (const auto& p : sample_params()) {
    const FockVector v = polystate::gaussian_to_fock(p, 24);
    const double scale = std::sqrt(1.0 - v.tail_mass());
    for (int m : {0, 1, 5, 12, 24}) {
      const Complex ref = oracle::integrate(
          [&](double x) { return oracle::hermite_function(m, x) * polystate::wavefunction(p, x); },
          -14.0, 14.0, 1e-13);
      EXPECT_NEAR(std::abs(scale * v[m] - ref), 0.0, 1e-10) << m;
    }
  }
}

TEST(GaussianToFock, TailFlaggedWhenUnderResolved) {
  const FockVector v = polystate::gaussian_to_fock({{1.0, 0.0}, {6.0, 0.0}}, 8);
  EXPECT_TRUE(v.tail_flagged(polystate::kGaussianTailTolerance));
  EXPECT_NEAR(v.norm(), 1.0, 1e-14);
}

TEST(GaussianToFock, RoundTripPosition) {
  const GaussianParams p{{0.8, 0.3}, {1.0, -0.5}};
  const FockVector v = polystate::gaussian_to_fock(p, 80);
  for (double x = -4.0; x <= 4.0; x += 0.5) {
    EXPECT_NEAR(std::abs(polystate::reconstruct_position(v, x) - polystate::wavefunction(p, x)),
                0.0, 1e-9);
  }
}

TEST(GaussianOverlap, MatchesQuadrature) {
  const auto ps = sample_params();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const Complex ref = oracle::integrate(
          [&](double x) {
            return std::conj(polystate::wavefunction(ps[i], x)) *
                   polystate::wavefunction(ps[j], x);
          },
          -14.0, 14.0);
      EXPECT_NEAR(std::abs(polystate::gaussian_overlap(ps[i], ps[j]) - ref), 0.0, 1e-12);
    }
  }
}

TEST(CyclicGaussian, Examples) {
  const GaussianParams p{{1.0, 0.0}, {1.5, 0.0}};
  const FockVector seed = polystate::gaussian_to_fock(p, 64);
  const auto one = polystate::cyclic_gaussian(p, {1, 1}, 64);
  EXPECT_LE(polystate::max_abs_difference(one.state, seed), 1e-15);

  const polystate::CyclicGaussianWave even(p, {2, 1});
  for (double x = 0.0; x <= 5.0; x += 0.25) {
    EXPECT_NEAR(std::abs(even(x) - even(-x)), 0.0, 1e-10);
  }
}

TEST(CyclicGaussian, WaveMatchesFockRoute) {
  const GaussianParams p{{1.0, 0.0}, {std::sqrt(2.0), std::sqrt(2.0)}};
  for (int lam = 1; lam <= 3; ++lam) {
    const polystate::CyclicGaussianWave wave(p, {3, lam});
    const auto fock = polystate::cyclic_gaussian(p, {3, lam}, 80, polystate::Method::superposition);
    EXPECT_NEAR(wave.normalization().raw_norm, fock.normalization.raw_norm, 1e-9);
    for (double x = -4.0; x <= 4.0; x += 0.5) {
      EXPECT_NEAR(std::abs(wave(x) - polystate::reconstruct_position(fock.state, x)), 0.0, 1e-8);
    }
    EXPECT_NEAR(norm_by_quadrature(wave), 1.0, 1e-10);
  }
}

TEST(CyclicGaussian, RoutesAgree) {
  const GaussianParams p{{0.6, 0.2}, {1.0, 1.0}};
  for (int n : {2, 3, 4}) {
    for (int lam = 1; lam <= n; ++lam) {
      const auto a = polystate::cyclic_gaussian(p, {n, lam}, 64, polystate::Method::erasure);
      const auto b = polystate::cyclic_gaussian(p, {n, lam}, 64, polystate::Method::superposition);
      EXPECT_LE(polystate::max_abs_difference(a.state, b.state), 1e-12);
    }
  }
}

TEST(C2ClosedForm, Parity) {
  const GaussianParams p{{0.7, 0.4}, {1.2, -0.8}};
  for (double x = 0.0; x <= 5.0; x += 0.25) {
    EXPECT_NEAR(std::abs(polystate::c2_closed_form(p, 1, x) - polystate::c2_closed_form(p, 1, -x)),
                0.0, 1e-14);
    EXPECT_NEAR(std::abs(polystate::c2_closed_form(p, 2, x) + polystate::c2_closed_form(p, 2, -x)),
                0.0, 1e-14);
  }
  EXPECT_EQ(std::abs(polystate::c2_closed_form(p, 2, 0.0)), 0.0);
  EXPECT_THROW(polystate::c2_closed_form(p, 3, 0.0), std::domain_error);
}

TEST(C2ClosedForm, OrthonormalByQuadrature) {
  for (const auto& p : sample_params()) {
    auto psi1 = [&](double x) { return polystate::c2_closed_form(p, 1, x); };
    auto psi2 = [&](double x) { return polystate::c2_closed_form(p, 2, x); };
    EXPECT_NEAR(norm_by_quadrature(psi1), 1.0, 1e-10);
    EXPECT_NEAR(norm_by_quadrature(psi2), 1.0, 1e-10);
    const Complex cross = oracle::integrate(
        [&](double x) { return std::conj(psi1(x)) * psi2(x); }, -14.0, 14.0);
    EXPECT_LE(std::abs(cross), 1e-10);
  }
}

TEST(C2ClosedForm, MatchesFockReconstruction) {
  const GaussianParams p{{1.0, 0.0}, {std::sqrt(2.0), std::sqrt(2.0)}};
  for (int lam = 1; lam <= 2; ++lam) {
    const auto psi = polystate::cyclic_gaussian(p, {2, lam}, 80, polystate::Method::superposition);
    for (double x = -5.0; x <= 5.0; x += 0.125) {
      EXPECT_NEAR(std::abs(polystate::reconstruct_position(psi.state, x) -
                           polystate::c2_closed_form(p, lam, x)),
                  0.0, 1e-6);
    }
  }
}
