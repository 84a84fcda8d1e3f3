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
#include "polystate/cyclic.hpp"

using polystate::Complex;
using polystate::CyclicSpec;
using polystate::DihedralVariant;
using polystate::FockVector;
using polystate::Method;

namespace {

FockVector from(std::vector<Complex> amps) {
  return FockVector(std::move(amps), 0.0).normalized();
}

// Independent class projection of a seed, built from the angle form of R.
FockVector rotation_sum(const FockVector& phi, int n, int lambda) {
  std::vector<Complex> acc(phi.size());
  for (int r = 1; r <= n; ++r) {
    const double theta = 2.0 * std::numbers::pi * (r - 1) / n;
    const Complex chi = std::polar(1.0, theta * (lambda - 1));
    for (std::size_t m = 0; m < acc.size(); ++m) {
      acc[m] += chi * std::polar(1.0, -theta * static_cast<double>(m)) * phi[m];
    }
  }
  return FockVector(std::move(acc), 0.0);
}

}  // namespace

TEST(Superposition, Examples) {
  const auto even = polystate::cyclic_superposition(from({1.0, 1.0}), {2, 1});
  EXPECT_LE(polystate::max_abs_difference(even.state, polystate::fock_state(0, 1)), 1e-15);

  std::mt19937_64 rng(21);
  const FockVector phi = oracle::random_state(rng, 20);
  const auto trivial = polystate::cyclic_superposition(phi, {1, 1});
  EXPECT_LE(polystate::max_abs_difference(trivial.state, phi), 1e-15);
  EXPECT_NEAR(trivial.normalization.n_lambda, 1.0, 1e-15);
}

TEST(Superposition, CatStates) {
  const Complex alpha{1.3, 0.4};
  const int n_max = 70;
  std::vector<Complex> plus(n_max + 1);
  std::vector<Complex> minus(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    plus[m] = oracle::coherent_amplitude(alpha, m) + oracle::coherent_amplitude(-alpha, m);
    minus[m] = oracle::coherent_amplitude(alpha, m) - oracle::coherent_amplitude(-alpha, m);
  }
  const double np = 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * std::norm(alpha))));
  const double nm = 1.0 / std::sqrt(2.0 * (1.0 - std::exp(-2.0 * std::norm(alpha))));
  const FockVector seed = polystate::coherent(alpha, n_max);
  const auto even = polystate::cyclic_superposition(seed, {2, 1});
  const auto odd = polystate::cyclic_superposition(seed, {2, 2});
  EXPECT_LE(polystate::max_abs_difference(even.state, FockVector(plus, 0.0).scaled(np)), 1e-13);
  EXPECT_LE(polystate::max_abs_difference(odd.state, FockVector(minus, 0.0).scaled(nm)), 1e-13);
  EXPECT_NEAR(even.normalization.n_lambda, np, 1e-13);
  EXPECT_NEAR(odd.normalization.n_lambda, nm, 1e-13);
}

TEST(Superposition, MatchesAngleOracle) {
  std::mt19937_64 rng(22);
  for (int n : {2, 3, 5, 8}) {
    const FockVector phi = oracle::random_state(rng, 40);
    for (int l = 1; l <= n; ++l) {
      const FockVector raw = rotation_sum(phi, n, l);
      const auto psi = polystate::cyclic_superposition(phi, {n, l});
      EXPECT_NEAR(psi.normalization.raw_norm, raw.norm(), 1e-12);
      EXPECT_LE(polystate::max_abs_difference(psi.state, raw.normalized()), 1e-12);
    }
  }
}

TEST(Superposition, EmptyRepresentationNamesClass) {
  try {
    polystate::cyclic_superposition(polystate::fock_state(0, 4), {2, 2});
    FAIL() << "expected EmptyRepresentation";
  } catch (const polystate::EmptyRepresentation& e) {
    EXPECT_EQ(e.order(), 2);
    EXPECT_EQ(e.lambda(), 2);
    ASSERT_EQ(e.class_masses().size(), 2u);
    EXPECT_EQ(e.class_masses()[1], 0.0);
    EXPECT_NE(std::string(e.what()).find("n=2"), std::string::npos);
  }
  EXPECT_THROW(polystate::cyclic_erasure(polystate::fock_state(0, 4), {2, 2}),
               polystate::EmptyRepresentation);
  EXPECT_THROW(polystate::cyclic_superposition(polystate::fock_state(0, 4), {2, 3}),
               std::domain_error);
}

TEST(Erasure, Examples) {
  const auto one = polystate::cyclic_erasure(from({1.0, 1.0, 1.0}), {3, 2});
  EXPECT_LE(polystate::max_abs_difference(one.state, polystate::fock_state(1, 2)), 1e-15);

  const FockVector supported = from({0.0, 0.0, Complex(0.3, 0.1), 0.0, 0.0, Complex(-0.2, 0.5)});
  const auto same = polystate::cyclic_erasure(supported, {3, 3});
  EXPECT_LE(polystate::max_abs_difference(same.state, supported), 1e-15);
}

TEST(Erasure, EqualsSuperpositionWithoutPhase) {
  std::mt19937_64 rng(23);
  const FockVector phi = oracle::random_state(rng, 40);
  const auto sup = polystate::cyclic_superposition(phi, {5, 3});
  const auto era = polystate::cyclic_erasure(phi, {5, 3});
  EXPECT_LE(polystate::max_abs_difference(era.state, sup.state), 1e-12);
  EXPECT_NEAR(era.normalization.raw_norm, sup.normalization.raw_norm, 1e-12);
  EXPECT_NEAR(era.normalization.n_lambda, sup.normalization.n_lambda, 1e-12);
  const Complex ratio = polystate::inner(sup.state, era.state);
  EXPECT_NEAR(std::abs(ratio - 1.0), 0.0, 1e-12);
}

TEST(Erasure, RoutesAgreeForAllIrreps) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 8;
    const FockVector phi = oracle::random_state(rng, 32);
    for (int l = 1; l <= n; ++l) {
      const auto a = polystate::make_cyclic(phi, {n, l}, Method::erasure);
      const auto b = polystate::make_cyclic(phi, {n, l}, Method::superposition);
      EXPECT_LE(polystate::max_abs_difference(a.state, b.state), 1e-12);
      EXPECT_EQ(a.method, Method::erasure);
      EXPECT_EQ(b.method, Method::superposition);
    }
  }
}

TEST(Erasure, ClassNormRecord) {
  std::mt19937_64 rng(25);
  const FockVector phi = oracle::random_state(rng, 30);
  const auto masses = polystate::residue_class_masses(phi, 4);
  const auto psi = polystate::cyclic_erasure(phi, {4, 2});
  EXPECT_NEAR(psi.normalization.class_norm, std::sqrt(masses[1]), 1e-15);
  EXPECT_NEAR(psi.normalization.raw_norm, 4.0 * std::sqrt(masses[1]), 1e-14);
}

TEST(Gram, Orthonormal) {
  std::mt19937_64 rng(26);
  for (int n : {2, 3, 5, 8}) {
    const FockVector phi = oracle::random_state(rng, 48);
    const auto g = polystate::cyclic_gram(phi, n);
    const double dev = (g - polystate::MatrixC::Identity(n, n)).cwiseAbs().maxCoeff();
    EXPECT_LE(dev, 1e-12);
  }
}

TEST(RotationPhase, Examples) {
  std::mt19937_64 rng(27);
  const FockVector phi = oracle::random_state(rng, 30);
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; l <= n; ++l) {
      const auto psi = polystate::cyclic_superposition(phi, {n, l});
      const auto id = polystate::rotation_phase_check(psi.state, {n, l}, 1);
      EXPECT_NEAR(id.measured_phase, 0.0, 1e-14);
      EXPECT_NEAR(id.fidelity, 1.0, 1e-14);
    }
    const auto inv = polystate::cyclic_superposition(phi, {n, 1});
    for (int l = 1; l <= n; ++l) {
      EXPECT_NEAR(polystate::rotation_phase_check(inv.state, {n, 1}, l).measured_phase, 0.0,
                  1e-13);
    }
  }
}

TEST(RotationPhase, FourfoldThirdIrrepSecondElement) {
  std::mt19937_64 rng(28);
  const FockVector phi = oracle::random_state(rng, 30);
  const auto psi = polystate::cyclic_superposition(phi, {4, 3});
  const Complex direct =
      polystate::inner(psi.state, polystate::rotate(psi.state, std::numbers::pi / 2.0));
  EXPECT_NEAR(std::abs(std::abs(std::arg(direct)) - std::numbers::pi), 0.0, 1e-12);
  const auto chk = polystate::rotation_phase_check(psi.state, {4, 3}, 2);
  EXPECT_NEAR(std::abs(chk.measured_phase), std::numbers::pi, 1e-12);
  EXPECT_LE(chk.phase_residual, 1e-12);
  EXPECT_NEAR(chk.index_phase_residual, std::numbers::pi, 1e-12);
}

TEST(RotationPhase, EigenphaseForEveryElement) {
  std::mt19937_64 rng(29);
  for (int n : {2, 3, 5, 8}) {
    const FockVector phi = oracle::random_state(rng, 40);
    for (int lam = 1; lam <= n; ++lam) {
      const auto psi = polystate::cyclic_superposition(phi, {n, lam});
      for (int l = 1; l <= n; ++l) {
        const auto chk = polystate::rotation_phase_check(psi.state, {n, lam}, l);
        EXPECT_NEAR(chk.fidelity, 1.0, 1e-12);
        const double expect = -2.0 * std::numbers::pi * (lam - 1) * (l - 1) / n;
        EXPECT_NEAR(std::abs(std::remainder(chk.measured_phase - expect, 2 * std::numbers::pi)),
                    0.0, 1e-12);
      }
    }
  }
}

TEST(Density, Examples) {
  const auto vac = polystate::outer(polystate::fock_state(0, 3));
  EXPECT_LE(polystate::max_abs_difference(polystate::cyclic_density(vac, {2, 1}), vac), 1e-15);

  polystate::MatrixC mix = polystate::MatrixC::Zero(2, 2);
  mix(0, 0) = 0.5;
  mix(1, 1) = 0.5;
  const auto odd = polystate::cyclic_density(polystate::FockOperator(mix), {2, 2});
  EXPECT_LE(polystate::max_abs_difference(odd, polystate::outer(polystate::fock_state(1, 1))),
            1e-15);

  std::mt19937_64 rng(30);
  const FockVector phi = oracle::random_state(rng, 20);
  const auto pure = polystate::cyclic_density(polystate::outer(phi), {3, 2});
  const auto via_state = polystate::outer(polystate::cyclic_erasure(phi, {3, 2}).state);
  EXPECT_LE(polystate::max_abs_difference(pure, via_state), 1e-14);
}

TEST(Density, RoutesAgreeAndInvariant) {
  std::mt19937_64 rng(31);
  for (int n : {2, 3, 4, 6}) {
    const auto rho = oracle::random_density(rng, 24, 3);
    std::vector<polystate::FockOperator> parts;
    for (int l = 1; l <= n; ++l) {
      const auto a = polystate::cyclic_density_character_sum(rho, {n, l});
      const auto b = polystate::cyclic_density_projection(rho, {n, l});
      EXPECT_LE(polystate::max_abs_difference(a, b), 1e-12);
      EXPECT_TRUE(b.is_density(1e-12, true));
      for (int r = 1; r <= n; ++r) {
        EXPECT_LE(polystate::max_abs_difference(polystate::rotate_element(b, n, r), b), 1e-14);
      }
      parts.push_back(b);
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) {
          EXPECT_LE(std::abs(polystate::trace_product(parts[a], parts[b])), 1e-12);
        }
      }
    }
  }
}

TEST(Density, EmptyClassThrows) {
  const auto vac = polystate::outer(polystate::fock_state(0, 3));
  EXPECT_THROW(polystate::cyclic_density(vac, {2, 2}), polystate::EmptyRepresentation);
  EXPECT_THROW(polystate::cyclic_density_character_sum(vac, {2, 2}),
               polystate::EmptyRepresentation);
}

TEST(CircleLimit, Examples) {
  std::mt19937_64 rng(32);
  const FockVector phi = oracle::random_state(rng, 12);
  EXPECT_EQ(polystate::max_abs_difference(polystate::circle_limit(phi, 1),
                                          polystate::fock_state(0, 12)),
            0.0);
  const FockVector coh = polystate::coherent(1.0, 30);
  EXPECT_EQ(polystate::max_abs_difference(polystate::circle_limit(coh, 3),
                                          polystate::fock_state(2, 30)),
            0.0);
  const FockVector five = polystate::fock_state(5, 8);
  EXPECT_EQ(polystate::max_abs_difference(polystate::circle_limit(five, 6), five), 0.0);
  EXPECT_THROW(polystate::circle_limit(five, 2), polystate::EmptyRepresentation);
}

TEST(CircleLimit, QuadratureAgrees) {
  std::mt19937_64 rng(33);
  const FockVector phi = oracle::random_state(rng, 24);
  for (int l = 1; l <= 25; ++l) {
    const FockVector q = polystate::circle_limit_quadrature(phi, l);
    EXPECT_LE(polystate::phase_aligned_distance(q, polystate::circle_limit(phi, l)), 1e-10);
  }
}

TEST(CircleLimit, LargeOrderApproaches) {
  const FockVector coh = polystate::coherent({0.7, 0.2}, 40);
  double prev = 0.0;
  for (int n : {2, 3, 4, 6}) {
    const auto psi = polystate::cyclic_superposition(coh, {n, 2});
    const double f = polystate::fidelity(psi.state, polystate::fock_state(1, 40));
    EXPECT_GT(f, prev);
    prev = f;
  }
  EXPECT_GT(prev, 1.0 - 1e-4);
}

TEST(Dihedral, RealSeedSumEqualsCyclic) {
  const FockVector phi = polystate::coherent(1.1, 40);
  for (int n : {2, 3, 5}) {
    for (int l = 1; l <= n; ++l) {
      const auto d = polystate::dihedral_state(phi, {n, l}, DihedralVariant::sum);
      const auto c = polystate::cyclic_superposition(phi, {n, l});
      EXPECT_LE(polystate::max_abs_difference(d.state, c.state), 1e-12);
      EXPECT_THROW(polystate::dihedral_state(phi, {n, l}, DihedralVariant::difference),
                   polystate::EmptyRepresentation);
    }
  }
}

TEST(Dihedral, RoutesAgree) {
  std::mt19937_64 rng(34);
  const FockVector phi = oracle::random_state(rng, 30);
  for (auto variant : {DihedralVariant::sum, DihedralVariant::difference}) {
    for (int n : {2, 3, 4}) {
      for (int l = 1; l <= n; ++l) {
        const auto a = polystate::dihedral_state(phi, {n, l}, variant);
        const auto b = polystate::dihedral_erasure(phi, {n, l}, variant);
        EXPECT_LE(polystate::phase_aligned_distance(a.state, b.state), 1e-12);
      }
    }
  }
}

TEST(Dihedral, OrthonormalAcrossIrreps) {
  std::mt19937_64 rng(35);
  for (int n : {2, 3, 4, 5, 6}) {
    const FockVector phi = oracle::random_state(rng, 36);
    for (auto variant : {DihedralVariant::sum, DihedralVariant::difference}) {
      const auto g = polystate::dihedral_gram(phi, n, variant);
      EXPECT_LE((g - polystate::MatrixC::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Dihedral, InversionPhase) {
  std::mt19937_64 rng(36);
  const FockVector phi = oracle::random_state(rng, 30);
  for (int n : {2, 3, 5}) {
    for (int lam = 1; lam <= n; ++lam) {
      for (auto variant : {DihedralVariant::sum, DihedralVariant::difference}) {
        const double sign = variant == DihedralVariant::sum ? 1.0 : -1.0;
        const auto gamma = polystate::dihedral_state(phi, {n, lam}, variant);
        for (int l = 1; l <= n; ++l) {
          const auto chk = polystate::inversion_phase_check(gamma.state, {n, lam}, l);
          const Complex expect =
              sign * std::polar(1.0, 2.0 * std::numbers::pi * (lam - 1) * (l - 1) / n);
          EXPECT_NEAR(std::abs(chk.overlap - expect), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(Dihedral, RotationEigenstate) {
  std::mt19937_64 rng(37);
  const FockVector phi = oracle::random_state(rng, 30);
  const auto gamma = polystate::dihedral_state(phi, {3, 2}, DihedralVariant::difference);
  for (int l = 1; l <= 3; ++l) {
    EXPECT_NEAR(polystate::rotation_phase_check(gamma.state, {3, 2}, l).fidelity, 1.0, 1e-12);
  }
}

TEST(AnnihilationShift, Examples) {
  const FockVector coh = polystate::coherent({1.2, 0.3}, 60);
  const auto odd = polystate::cyclic_superposition(coh, {2, 2});
  const auto shifted = polystate::annihilation_irrep_shift(odd.state, {2, 2});
  EXPECT_EQ(shifted.new_lambda, 1);
  EXPECT_LE(shifted.leakage, 1e-14);

  const auto c3 = polystate::cyclic_superposition(coh, {3, 1});
  const auto s3 = polystate::annihilation_irrep_shift(c3.state, {3, 1});
  EXPECT_EQ(s3.new_lambda, 3);
  EXPECT_LE(s3.leakage, 1e-14);

  for (int n : {3, 4, 5}) {
    for (int lam = 1; lam <= n; ++lam) {
      FockVector cur = polystate::cyclic_superposition(coh, {n, lam}).state;
      int l = lam;
      for (int step = 0; step < n; ++step) {
        const auto s = polystate::annihilation_irrep_shift(cur, {n, l});
        EXPECT_LE(s.leakage, 1e-14);
        cur = s.state;
        l = s.new_lambda;
      }
      EXPECT_EQ(l, lam);
    }
  }
  EXPECT_THROW(polystate::annihilation_irrep_shift(polystate::fock_state(0, 3), {2, 1}),
               std::domain_error);
}
