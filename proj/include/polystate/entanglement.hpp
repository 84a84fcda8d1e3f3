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

#ifndef POLYSTATE_ENTANGLEMENT_HPP
#define POLYSTATE_ENTANGLEMENT_HPP

// Two-mode states |T> = sum_r c_r |phi_r>_1 |varphi_r>_2 built from rotated
// copies of two seeds, and their linear entropy.
//
// Every rotated seed expands in the cyclic states of its own mode,
//   |phi_r> = (1/n) sum_l mu_n^{(1-r)(l-1)} (1/N_l) |psi^(l)>,
// so |T> has coefficient matrix sum_r D_{r,l,l'} in the orthonormal product
// basis |psi^(l)>|psi'^(l')>, with
//   D_{r,l,l'} = mu_n^{(1-r)(l+l'-2)} c_r / (n^2 N_l^(1) N_l'^(2)).

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polystate/cyclic.hpp"
#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/fock_operator.hpp"
#include "polystate/group.hpp"

namespace polystate {

/// Default memory budget of the dense two-mode oracle, in bytes.
inline constexpr std::size_t kDefaultOracleBudget = std::size_t{512} << 20;
/// Specs whose normalization condition is off by more than this are rejected.
inline constexpr double kBipartiteNormTolerance = 1e-10;

struct BipartiteSpec {
  int n = 1;
  std::vector<Complex> c;
  FockVector seed_1;
  FockVector seed_2;

  void validate() const {
    if (n < 1) {
      throw std::domain_error("BipartiteSpec: order must be >= 1");
    }
    if (c.size() != static_cast<std::size_t>(n)) {
      throw std::domain_error("BipartiteSpec: need " + std::to_string(n) +
                              " coefficients, got " + std::to_string(c.size()));
    }
  }
};

/// sum_{r,r'} c_r c_{r'}* <phi_{r'}|phi_r> <varphi_{r'}|varphi_r>.
inline double bipartite_norm_squared(const BipartiteSpec& spec) {
  spec.validate();
  std::vector<FockVector> r1;
  std::vector<FockVector> r2;
  for (int r = 1; r <= spec.n; ++r) {
    r1.push_back(rotate_element(spec.seed_1, spec.n, r));
    r2.push_back(rotate_element(spec.seed_2, spec.n, r));
  }
  Complex s{0.0, 0.0};
  for (std::size_t r = 0; r < r1.size(); ++r) {
    for (std::size_t rp = 0; rp < r1.size(); ++rp) {
      s += spec.c[r] * std::conj(spec.c[rp]) * inner(r1[rp], r1[r]) * inner(r2[rp], r2[r]);
    }
  }
  return s.real();
}

inline double normalization_residual(const BipartiteSpec& spec) {
  return std::abs(bipartite_norm_squared(spec) - 1.0);
}

/// Rescales c uniformly so the two-mode state has unit norm.
inline BipartiteSpec bipartite_normalize(const BipartiteSpec& spec) {
  const double norm2 = bipartite_norm_squared(spec);
  if (!(norm2 > 0.0)) {
    throw std::domain_error("bipartite_normalize: two-mode state has zero norm");
  }
  BipartiteSpec out = spec;
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& cr : out.c) cr *= scale;
  return out;
}

/// (1/n) sum_l mu_n^{(1-r)(l-1)} (1/N_l) |psi^(l)>, which equals R(theta_r)|phi>.
inline FockVector reconstruct_rotated(const std::vector<CyclicState>& set, int r) {
  if (set.empty()) {
    throw std::domain_error("reconstruct_rotated: empty cyclic set");
  }
  const int n = set.front().spec.n;
  if (set.size() != static_cast<std::size_t>(n)) {
    throw std::domain_error("reconstruct_rotated: need all " + std::to_string(n) +
                            " irreps, got " + std::to_string(set.size()));
  }
  GroupSpec(n).check_element(r);
  FockVector acc = FockVector::zero(set.front().state.n_max());
  for (int lambda = 1; lambda <= n; ++lambda) {
    const CyclicState& psi = set[static_cast<std::size_t>(lambda - 1)];
    if (psi.spec.n != n || psi.spec.lambda != lambda) {
      throw std::domain_error("reconstruct_rotated: entry " + std::to_string(lambda) +
                              " is not the (n=" + std::to_string(n) + ", lambda=" +
                              std::to_string(lambda) + ") state");
    }
    if (!(psi.normalization.raw_norm > 0.0)) {
      throw EmptyRepresentation(n, lambda, {}, "missing irrep in cyclic set");
    }
    const Complex w = root_of_unity(static_cast<std::int64_t>(1 - r) * (lambda - 1), n) *
                      psi.normalization.raw_norm;
    acc = acc + w * psi.state;
  }
  return acc.scaled(1.0 / n).with_tail_mass(set.front().state.tail_mass());
}

struct EntanglementResult {
  double s_linear = 0.0;
  /// F(l, m) = sum_{r,s,l'} D_{r,l,l'} conj(D_{s,m,l'}).
  MatrixC f_matrix;
  /// d_tensor[r - 1](l - 1, l' - 1) = D_{r,l,l'}.
  std::vector<MatrixC> d_tensor;
};

/// Linear entropy of the mode-1 reduced state via the cyclic decomposition.
inline EntanglementResult linear_entropy(const BipartiteSpec& spec) {
  spec.validate();
  if (normalization_residual(spec) > kBipartiteNormTolerance) {
    throw std::domain_error("linear_entropy: spec is not normalized");
  }
  const int n = spec.n;
  const auto set_1 = cyclic_set(spec.seed_1, n, Method::erasure);
  const auto set_2 = cyclic_set(spec.seed_2, n, Method::erasure);

  EntanglementResult out;
  out.d_tensor.assign(static_cast<std::size_t>(n), MatrixC::Zero(n, n));
  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  for (int r = 1; r <= n; ++r) {
    MatrixC& d = out.d_tensor[static_cast<std::size_t>(r - 1)];
    for (int l = 1; l <= n; ++l) {
      const double r1 = set_1[static_cast<std::size_t>(l - 1)].normalization.raw_norm;
      for (int lp = 1; lp <= n; ++lp) {
        const double r2 = set_2[static_cast<std::size_t>(lp - 1)].normalization.raw_norm;
        d(l - 1, lp - 1) =
            root_of_unity(static_cast<std::int64_t>(1 - r) * (l + lp - 2), n) *
            spec.c[static_cast<std::size_t>(r - 1)] * inv_n2 * r1 * r2;
      }
    }
  }
  MatrixC coeff = MatrixC::Zero(n, n);
  for (const MatrixC& d : out.d_tensor) coeff += d;
  out.f_matrix = coeff * coeff.adjoint();
  out.s_linear = 1.0 - out.f_matrix.cwiseAbs2().sum();
  return out;
}

/// Bytes needed by linear_entropy_oracle.
inline std::size_t oracle_bytes(const BipartiteSpec& spec) {
  const std::size_t d1 = spec.seed_1.size();
  const std::size_t d2 = spec.seed_2.size();
  return sizeof(Complex) * (d1 * d2 + d1 * d1);
}

/// 1 - Tr(rho_1^2) with rho_1 = T T^dag from the dense amplitude tensor
/// T(m, m') = sum_r c_r A_m(phi_r) A_m'(varphi_r).
inline double linear_entropy_oracle(const BipartiteSpec& spec,
                                    std::size_t budget = kDefaultOracleBudget) {
  spec.validate();
  const std::size_t need = oracle_bytes(spec);
  if (need > budget) {
    throw MemoryBudgetExceeded(need, budget);
  }
  const auto d1 = static_cast<Eigen::Index>(spec.seed_1.size());
  const auto d2 = static_cast<Eigen::Index>(spec.seed_2.size());
  MatrixC t = MatrixC::Zero(d1, d2);
  for (int r = 1; r <= spec.n; ++r) {
    const FockVector p1 = rotate(spec.seed_1, element_angle(spec.n, r));
    const FockVector p2 = rotate(spec.seed_2, element_angle(spec.n, r));
    Eigen::VectorXcd v1(d1);
    Eigen::VectorXcd v2(d2);
    for (Eigen::Index m = 0; m < d1; ++m) v1(m) = p1[static_cast<std::size_t>(m)];
    for (Eigen::Index m = 0; m < d2; ++m) v2(m) = p2[static_cast<std::size_t>(m)];
    t += spec.c[static_cast<std::size_t>(r - 1)] * v1 * v2.transpose();
  }
  const MatrixC rho = t * t.adjoint();
  return 1.0 - rho.cwiseAbs2().sum();
}

}  // namespace polystate

#endif  // POLYSTATE_ENTANGLEMENT_HPP
