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
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "polystate/cyclic.hpp"
#include "polystate/gaussian.hpp"
#include "polystate/wigner.hpp"

using polystate::Complex;
using polystate::FockVector;

namespace {

double coherent_wigner(Complex alpha, double x, double p) {
  const double x0 = std::sqrt(2.0) * alpha.real();
  const double p0 = std::sqrt(2.0) * alpha.imag();
  return std::exp(-(x - x0) * (x - x0) - (p - p0) * (p - p0)) / std::numbers::pi;
}

// psi(x) = sum_m A_m u_m(x) with Boost Hermite functions.
std::function<Complex(double)> position_oracle(const FockVector& v) {
  return [v](double x) {
    Complex s{};
    for (std::size_t m = 0; m < v.size(); ++m) {
      s += v[m] * oracle::hermite_function(static_cast<int>(m), x);
    }
    return s;
  };
}

}  // namespace

TEST(Wigner, NumberStatesAtOrigin) {
  EXPECT_NEAR(polystate::wigner_point(polystate::fock_state(0, 4), 0.0, 0.0),
              1.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(polystate::wigner_point(polystate::fock_state(1, 4), 0.0, 0.0),
              -1.0 / std::numbers::pi, 1e-15);
  for (int k = 0; k <= 20; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(polystate::wigner_point(polystate::fock_state(k, 20), 0.0, 0.0),
                sign / std::numbers::pi, 1e-13);
  }
}

TEST(Wigner, CoherentClosedForm) {
  const Complex alpha{1.1, -0.6};
  const FockVector c = polystate::coherent(alpha, 60);
  for (double x = -3.0; x <= 3.0; x += 0.5) {
    for (double p = -3.0; p <= 3.0; p += 0.5) {
      EXPECT_NEAR(polystate::wigner_point(c, x, p), coherent_wigner(alpha, x, p), 1e-12);
    }
  }
}

TEST(Wigner, KernelMatchesAdaptiveIntegral) {
  std::mt19937_64 rng(51);
  for (int n_max : {4, 10, 16}) {
    const FockVector v = oracle::random_state(rng, n_max);
    const auto psi = position_oracle(v);
    for (auto [x, p] : {std::pair{0.0, 0.0}, {0.7, -1.2}, {-2.1, 0.4}, {3.0, 2.5}}) {
      EXPECT_NEAR(polystate::wigner_point(v, x, p), oracle::wigner_integral(psi, x, p), 1e-9)
          << n_max << " " << x << " " << p;
    }
  }
}

TEST(Wigner, ElementsMatchDirectRule) {
  for (auto [x, p] : {std::pair{0.3, 0.1}, {-1.5, 2.0}, {2.4, -0.8}}) {
    const auto k = polystate::wigner_elements(16, x, p);
    const auto d = polystate::wigner_elements_direct(16, x, p);
    EXPECT_LE((k - d).cwiseAbs().maxCoeff(), 1e-10);
    for (int m : {0, 3, 16}) {
      for (int n : {0, 7, 16}) {
        EXPECT_NEAR(std::abs(polystate::wigner_element(m, n, x, p) - k(m, n)), 0.0, 1e-15);
      }
    }
  }
}

TEST(Wigner, OperatorMatchesPure) {
  std::mt19937_64 rng(52);
  const FockVector v = oracle::random_state(rng, 12);
  const auto rho = polystate::outer(v);
  for (auto [x, p] : {std::pair{0.0, 0.5}, {1.3, -0.2}, {-0.9, -1.7}}) {
    EXPECT_NEAR(polystate::wigner_point(rho, x, p), polystate::wigner_point(v, x, p), 1e-14);
  }
}

TEST(Wigner, GridNormalizationRefines) {
  const FockVector v = polystate::cyclic_gaussian({{1.0, 0.0}, {1.0, 1.0}}, {3, 2}, 48).state;
  double prev = std::numeric_limits<double>::infinity();
  for (int pts : {9, 13, 17, 25, 33}) {
    const auto grid = polystate::wigner(v, polystate::GridSpec::square(7.0, pts));
    const double err = std::abs(grid.normalization() - 1.0);
    EXPECT_LT(err, prev) << pts;
    prev = err;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(Wigner, CyclicRotationSymmetry) {
  const polystate::GaussianParams p{{1.0, 0.0}, {std::sqrt(2.0), std::sqrt(2.0)}};
  const auto grid = polystate::GridSpec::square(4.0, 21);
  for (int lam = 1; lam <= 3; ++lam) {
    const FockVector v = polystate::cyclic_gaussian(p, {3, lam}, 64).state;
    const double rot = polystate::rotation_residual(v, 3, grid);
    EXPECT_LE(rot, 1e-8);
    EXPECT_GT(polystate::inversion_asymmetry(v, grid), 10.0 * rot);
  }
}

TEST(Wigner, DihedralReflectionSymmetry) {
  const polystate::GaussianParams p{{1.0, 0.0}, {1.0, 1.0}};
  const FockVector seed = polystate::gaussian_to_fock(p, 64);
  const auto grid = polystate::GridSpec::square(4.0, 15);
  for (int lam = 1; lam <= 3; ++lam) {
    const FockVector g = polystate::dihedral_state(seed, {3, lam}).state;
    EXPECT_LE(polystate::reflection_residual(g, 3, grid), 1e-8);
    EXPECT_LE(polystate::rotation_residual(g, 3, grid), 1e-8);
  }
}

TEST(Wigner, ConjugationReflectsMomentum) {
  std::mt19937_64 rng(53);
  const FockVector v = oracle::random_state(rng, 10);
  const FockVector c = polystate::conjugate(v);
  for (auto [x, p] : {std::pair{0.4, 0.9}, {-1.0, 0.3}}) {
    EXPECT_NEAR(polystate::wigner_point(c, x, p), polystate::wigner_point(v, x, -p), 1e-14);
  }
}

TEST(Wigner, RotationCovariance) {
  std::mt19937_64 rng(54);
  const FockVector v = oracle::random_state(rng, 10);
  const double theta = 0.9;
  const FockVector r = polystate::rotate(v, theta);
  for (auto [x, p] : {std::pair{0.4, 0.9}, {-1.0, 0.3}}) {
    const auto [xr, pr] = polystate::rotate_point(x, p, theta);
    EXPECT_NEAR(polystate::wigner_point(r, x, p), polystate::wigner_point(v, xr, pr), 1e-13);
  }
}

TEST(Wigner, GridValidation) {
  EXPECT_THROW(polystate::GridSpec::square(1.0, 1).validate(), std::domain_error);
  EXPECT_THROW((polystate::GridSpec{1.0, 1.0, -1.0, 1.0, 5}).validate(), std::domain_error);
  EXPECT_THROW(polystate::wigner(polystate::fock_state(0, 1), polystate::GridSpec{0, 1, 1, 0, 3}),
               std::domain_error);
}

TEST(Wigner, CsvLayout) {
  const auto grid = polystate::wigner(polystate::fock_state(0, 2), polystate::GridSpec::square(1.0, 3));
  std::ostringstream os;
  polystate::write_csv(grid, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "x,p,w");
  std::getline(is, line);
  EXPECT_EQ(line, "-1.000000000000e+00,-1.000000000000e+00,4.307855860370e-02");
  std::getline(is, line);
  EXPECT_EQ(line.substr(0, 38), "0.000000000000e+00,-1.000000000000e+00");
  int rows = 1;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 8);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", 1.0 / std::numbers::pi);
  EXPECT_NE(os.str().find(std::string("0.000000000000e+00,0.000000000000e+00,") + buf),
            std::string::npos);
}
