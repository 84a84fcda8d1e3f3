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

#ifndef POLYSTATE_CYCLIC_HPP
#define POLYSTATE_CYCLIC_HPP

// Symmetry-adapted states of C_n and D_n.
//
// A cyclic state for irrep lambda is the character-weighted superposition
//   |psi_n^(lambda)> = N_lambda sum_r chi^(lambda)(g_r) R(theta_r)|phi>,
// which only keeps photon numbers m == lambda - 1 (mod n). The same vector is
// obtained by deleting every other Fock component and renormalizing
// ("erasure"). Both routes are provided; erasure is O(n_max), the
// superposition is O(n n_max) and serves as the cross-check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/fock_operator.hpp"
#include "polystate/group.hpp"

namespace polystate {

struct CyclicSpec {
  int n = 1;
  int lambda = 1;

  void validate() const {
    if (n < 1) {
      throw std::domain_error("CyclicSpec: order must be >= 1, got " +
                              std::to_string(n));
    }
    if (lambda < 1 || lambda > n) {
      throw std::domain_error("CyclicSpec: irrep " + std::to_string(lambda) +
                              " outside 1.." + std::to_string(n));
    }
  }
};

enum class Method { superposition, erasure };

inline const char* to_string(Method m) noexcept {
  return m == Method::superposition ? "superposition" : "erasure";
}

/// N_lambda = 1 / raw_norm, real and positive, where raw_norm is the norm of the
/// unnormalized character sum. Both construction routes report the same
/// record; class_norm = raw_norm / n is the norm of the kept Fock components.
struct NormalizationRecord {
  double raw_norm = 0.0;
  double n_lambda = 0.0;
  double class_norm = 0.0;
};

inline NormalizationRecord normalization_from_class_norm(double class_norm, int n) {
  const double raw = n * class_norm;
  return {raw, 1.0 / raw, class_norm};
}

struct CyclicState {
  FockVector state;
  NormalizationRecord normalization;
  CyclicSpec spec;
  Method method = Method::erasure;
};

namespace detail {

/// Below this raw norm the character sum is indistinguishable from the
/// cancellation noise of n unit-modulus terms.
inline double superposition_floor(int n, double seed_norm) {
  return 64.0 * n * std::numeric_limits<double>::epsilon() * seed_norm;
}

inline double propagated_tail(const FockVector& phi, double class_mass) {
  return class_mass > 0.0 ? std::min(1.0, phi.tail_mass() / class_mass) : 1.0;
}

inline double wrap_phase(double phi) {
  return std::remainder(phi, kTwoPi);
}

}  // namespace detail

/// N_lambda sum_r chi^(lambda)(g_r) R(theta_r)|phi>, normalized with real
/// positive N_lambda.
inline CyclicState cyclic_superposition(const FockVector& phi, CyclicSpec spec) {
  spec.validate();
  const auto masses = residue_class_masses(phi, spec.n);
  const double w = masses[static_cast<std::size_t>(spec.lambda - 1)];
  if (w == 0.0) {
    throw EmptyRepresentation(spec.n, spec.lambda, masses);
  }

  std::vector<Complex> raw(phi.size());
  for (int r = 1; r <= spec.n; ++r) {
    const Complex chi = character(spec.n, spec.lambda, r);
    for (std::size_t m = 0; m < raw.size(); ++m) {
      const Complex rot = root_of_unity(
          -static_cast<std::int64_t>(r - 1) * static_cast<std::int64_t>(m), spec.n);
      raw[m] += chi * rot * phi[m];
    }
  }
  FockVector raw_vec(std::move(raw), detail::propagated_tail(phi, w));
  const double raw_norm = raw_vec.norm();
  if (!(raw_norm > detail::superposition_floor(spec.n, phi.norm()))) {
    throw EmptyRepresentation(spec.n, spec.lambda, masses,
                              "character sum cancels to rounding level");
  }
  const double n_lambda = 1.0 / raw_norm;
  return {raw_vec.scaled(n_lambda), {raw_norm, n_lambda, raw_norm / spec.n}, spec,
          Method::superposition};
}

/// Keep only m with mod(m - lambda + 1, n) = 0, then renormalize.
inline CyclicState cyclic_erasure(const FockVector& phi, CyclicSpec spec) {
  spec.validate();
  std::vector<Complex> kept(phi.size());
  double w = 0.0;
  for (std::size_t m = 0; m < kept.size(); ++m) {
    if (in_class(m, spec.n, spec.lambda)) {
      kept[m] = phi[m];
      w += std::norm(phi[m]);
    }
  }
  if (w == 0.0) {
    throw EmptyRepresentation(spec.n, spec.lambda, residue_class_masses(phi, spec.n));
  }
  const double class_norm = std::sqrt(w);
  FockVector raw_vec(std::move(kept), detail::propagated_tail(phi, w));
  return {raw_vec.scaled(1.0 / class_norm),
          normalization_from_class_norm(class_norm, spec.n), spec, Method::erasure};
}

inline CyclicState make_cyclic(const FockVector& phi, CyclicSpec spec,
                               Method method = Method::erasure) {
  return method == Method::erasure ? cyclic_erasure(phi, spec)
                                   : cyclic_superposition(phi, spec);
}

/// All n cyclic states of phi, lambda = 1..n in order.
inline std::vector<CyclicState> cyclic_set(const FockVector& phi, int n,
                                           Method method = Method::superposition) {
  std::vector<CyclicState> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int lambda = 1; lambda <= n; ++lambda) {
    out.push_back(make_cyclic(phi, {n, lambda}, method));
  }
  return out;
}

/// Gram matrix G(l, l') = <psi^(l)|psi^(l')> of the n cyclic states of phi.
inline MatrixC cyclic_gram(const FockVector& phi, int n,
                           Method method = Method::superposition) {
  const auto set = cyclic_set(phi, n, method);
  MatrixC g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g(a, b) = inner(set[static_cast<std::size_t>(a)].state,
                      set[static_cast<std::size_t>(b)].state);
    }
  }
  return g;
}

struct RotationPhaseCheck {
  Complex overlap;               // <psi|R(theta_l)|psi>
  double fidelity = 0.0;         // |overlap|
  double measured_phase = 0.0;   // arg(overlap)
  /// |arg| distance to exp(-i (lambda - 1) theta_l) = mu_n^{(1-lambda)(l-1)}.
  double phase_residual = 0.0;
  /// |arg| distance to mu_n^{(1-lambda) l}, the phase obtained when g_l is read
  /// as a shift by l steps rather than l - 1.
  double index_phase_residual = 0.0;
};

inline RotationPhaseCheck rotation_phase_check(const FockVector& psi,
                                               CyclicSpec spec, int l) {
  spec.validate();
  GroupSpec(spec.n).check_element(l);
  RotationPhaseCheck out;
  out.overlap = inner(psi, rotate_element(psi, spec.n, l));
  out.fidelity = std::abs(out.overlap);
  out.measured_phase = std::arg(out.overlap);
  const Complex eigen_phase = root_of_unity(
      static_cast<std::int64_t>(1 - spec.lambda) * (l - 1), spec.n);
  const Complex index_phase =
      root_of_unity(static_cast<std::int64_t>(1 - spec.lambda) * l, spec.n);
  out.phase_residual =
      std::abs(detail::wrap_phase(out.measured_phase - std::arg(eigen_phase)));
  out.index_phase_residual =
      std::abs(detail::wrap_phase(out.measured_phase - std::arg(index_phase)));
  return out;
}

// ---------------------------------------------------------------------------
// Density matrices

/// Diagonal weight of rho in the class of lambda.
inline double class_trace(const FockOperator& rho, CyclicSpec spec) {
  double w = 0.0;
  for (Eigen::Index m = 0; m < rho.dim(); ++m) {
    if (in_class(static_cast<std::size_t>(m), spec.n, spec.lambda)) {
      w += rho(m, m).real();
    }
  }
  return w;
}

inline std::vector<double> class_traces(const FockOperator& rho, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int lambda = 1; lambda <= n; ++lambda) {
    out[static_cast<std::size_t>(lambda - 1)] = class_trace(rho, {n, lambda});
  }
  return out;
}

/// N sum_{r,s} chi(g_r) conj(chi(g_s)) R(theta_r) rho R(theta_s)^dag with
/// N^{-1} the trace of the double sum.
inline FockOperator cyclic_density_character_sum(const FockOperator& rho,
                                                 CyclicSpec spec) {
  spec.validate();
  const Eigen::Index dim = rho.dim();
  if (!(class_trace(rho, spec) > 0.0)) {
    throw EmptyRepresentation(spec.n, spec.lambda, class_traces(rho, spec.n));
  }
  // R(theta_r) as the diagonal phase vector mu_n^{-(r-1)m}.
  std::vector<Eigen::VectorXcd> rot(static_cast<std::size_t>(spec.n),
                                    Eigen::VectorXcd(dim));
  for (int r = 1; r <= spec.n; ++r) {
    for (Eigen::Index m = 0; m < dim; ++m) {
      rot[static_cast<std::size_t>(r - 1)](m) =
          root_of_unity(-static_cast<std::int64_t>(r - 1) * m, spec.n);
    }
  }
  MatrixC sum = MatrixC::Zero(dim, dim);
  for (int r = 1; r <= spec.n; ++r) {
    const Complex chi_r = character(spec.n, spec.lambda, r);
    const auto& ur = rot[static_cast<std::size_t>(r - 1)];
    for (int s = 1; s <= spec.n; ++s) {
      const Complex weight = chi_r * std::conj(character(spec.n, spec.lambda, s));
      const auto& us = rot[static_cast<std::size_t>(s - 1)];
      sum += weight * (ur.asDiagonal() * rho.matrix() * us.conjugate().asDiagonal());
    }
  }
  const Complex tr = sum.trace();
  if (!(std::abs(tr) > detail::superposition_floor(spec.n * spec.n, 1.0))) {
    throw EmptyRepresentation(spec.n, spec.lambda, class_traces(rho, spec.n),
                              "character double sum has zero trace");
  }
  return FockOperator(sum / tr);
}

/// Keep A_{m,m'} with both m, m' in the class of lambda; renormalize the trace.
inline FockOperator cyclic_density_projection(const FockOperator& rho,
                                              CyclicSpec spec) {
  spec.validate();
  const double w = class_trace(rho, spec);
  if (!(w > 0.0)) {
    throw EmptyRepresentation(spec.n, spec.lambda, class_traces(rho, spec.n));
  }
  MatrixC out = MatrixC::Zero(rho.dim(), rho.dim());
  for (Eigen::Index m = 0; m < rho.dim(); ++m) {
    if (!in_class(static_cast<std::size_t>(m), spec.n, spec.lambda)) continue;
    for (Eigen::Index mp = 0; mp < rho.dim(); ++mp) {
      if (in_class(static_cast<std::size_t>(mp), spec.n, spec.lambda)) {
        out(m, mp) = rho(m, mp) / w;
      }
    }
  }
  return FockOperator(std::move(out));
}

inline FockOperator cyclic_density(const FockOperator& rho, CyclicSpec spec) {
  return cyclic_density_projection(rho, spec);
}

// ---------------------------------------------------------------------------
// Circle limit (n -> infinity)

/// The continuous-angle projection selects the single level lambda - 1.
inline FockVector circle_limit(const FockVector& phi, int lambda) {
  if (lambda < 1) {
    throw std::domain_error("circle_limit: irrep index must be >= 1");
  }
  const auto level = static_cast<std::size_t>(lambda - 1);
  if (phi.amplitude(level) == Complex{}) {
    throw EmptyRepresentation(0, lambda, {},
                              "seed has no amplitude on level " +
                                  std::to_string(lambda - 1));
  }
  return fock_state(lambda - 1, std::max(phi.n_max(), lambda - 1));
}

/// Same projection evaluated as a periodic trapezoid rule in theta:
/// (1/K) sum_k exp(i theta_k (lambda - 1)) R(theta_k)|phi>, renormalized.
/// The default node count K = 4 (n_max + 1) exceeds every frequency present.
inline FockVector circle_limit_quadrature(const FockVector& phi, int lambda,
                                          int nodes = 0) {
  if (lambda < 1) {
    throw std::domain_error("circle_limit: irrep index must be >= 1");
  }
  if (nodes <= 0) {
    nodes = 4 * (phi.n_max() + 1);
  }
  const auto level = static_cast<std::size_t>(lambda - 1);
  if (phi.amplitude(level) == Complex{}) {
    throw EmptyRepresentation(0, lambda, {},
                              "seed has no amplitude on level " +
                                  std::to_string(lambda - 1));
  }
  FockVector padded = phi.resized(std::max(phi.n_max(), lambda - 1));
  std::vector<Complex> acc(padded.size());
  for (int k = 0; k < nodes; ++k) {
    const double theta = kTwoPi * k / nodes;
    for (std::size_t m = 0; m < acc.size(); ++m) {
      const double freq = static_cast<double>(lambda - 1) - static_cast<double>(m);
      acc[m] += std::polar(1.0, theta * freq) * padded[m];
    }
  }
  for (Complex& z : acc) {
    z /= static_cast<double>(nodes);
  }
  return FockVector(std::move(acc), 0.0).normalized();
}

// ---------------------------------------------------------------------------
// Dihedral states

enum class DihedralVariant { sum, difference };

inline const char* to_string(DihedralVariant v) noexcept {
  return v == DihedralVariant::sum ? "sum" : "difference";
}

struct DihedralState {
  FockVector state;
  NormalizationRecord normalization;
  CyclicSpec spec;
  DihedralVariant variant = DihedralVariant::sum;
};

/// N sum_r (chi(g_r) R(theta_r)|phi> +- conj(chi(g_r)) U_r|phi>), normalized
/// with real positive N.
inline DihedralState dihedral_state(const FockVector& phi, CyclicSpec spec,
                                    DihedralVariant variant = DihedralVariant::sum) {
  spec.validate();
  const double sign = variant == DihedralVariant::sum ? 1.0 : -1.0;
  FockVector raw = FockVector::zero(phi.n_max()).with_tail_mass(phi.tail_mass());
  for (int r = 1; r <= spec.n; ++r) {
    const Complex chi = character(spec.n, spec.lambda, r);
    raw = raw + chi * rotate_element(phi, spec.n, r) +
          (sign * std::conj(chi)) * inversion(phi, r, spec.n);
  }
  const double raw_norm = raw.norm();
  if (!(raw_norm > detail::superposition_floor(2 * spec.n, phi.norm()))) {
    throw EmptyRepresentation(
        spec.n, spec.lambda, residue_class_masses(phi, spec.n),
        std::string("dihedral ") + to_string(variant) + " superposition vanishes");
  }
  const double n_lambda = 1.0 / raw_norm;
  return {raw.scaled(n_lambda), {raw_norm, n_lambda, raw_norm / spec.n}, spec, variant};
}

/// Erasure route for dihedral states: the class of lambda kept from
/// |phi> +- |phi*>, renormalized.
inline DihedralState dihedral_erasure(const FockVector& phi, CyclicSpec spec,
                                      DihedralVariant variant = DihedralVariant::sum) {
  spec.validate();
  const FockVector mixed =
      variant == DihedralVariant::sum ? phi + conjugate(phi) : phi - conjugate(phi);
  std::vector<Complex> kept(mixed.size());
  double w = 0.0;
  for (std::size_t m = 0; m < kept.size(); ++m) {
    if (in_class(m, spec.n, spec.lambda)) {
      kept[m] = mixed[m];
      w += std::norm(mixed[m]);
    }
  }
  if (!(std::sqrt(w) > detail::superposition_floor(2, phi.norm()))) {
    throw EmptyRepresentation(
        spec.n, spec.lambda, residue_class_masses(mixed, spec.n),
        std::string("dihedral ") + to_string(variant) + " erasure is empty");
  }
  const double class_norm = std::sqrt(w);
  return {FockVector(std::move(kept), phi.tail_mass()).scaled(1.0 / class_norm),
          normalization_from_class_norm(class_norm, spec.n), spec, variant};
}

struct InversionPhaseCheck {
  Complex overlap;              // <gamma|U_l gamma>
  double modulus = 0.0;
  double measured_phase = 0.0;
};

inline InversionPhaseCheck inversion_phase_check(const FockVector& gamma,
                                                 CyclicSpec spec, int l) {
  spec.validate();
  InversionPhaseCheck out;
  out.overlap = inner(gamma, inversion(gamma, l, spec.n));
  out.modulus = std::abs(out.overlap);
  out.measured_phase = std::arg(out.overlap);
  return out;
}

/// Gram matrix of the n dihedral states of one variant.
inline MatrixC dihedral_gram(const FockVector& phi, int n,
                             DihedralVariant variant = DihedralVariant::sum) {
  std::vector<FockVector> states;
  for (int lambda = 1; lambda <= n; ++lambda) {
    states.push_back(dihedral_state(phi, {n, lambda}, variant).state);
  }
  MatrixC g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g(a, b) = inner(states[static_cast<std::size_t>(a)],
                      states[static_cast<std::size_t>(b)]);
    }
  }
  return g;
}

/// <gamma_sum^(lambda)|gamma_difference^(lambda)>; generally nonzero.
inline Complex dihedral_variant_overlap(const FockVector& phi, CyclicSpec spec) {
  return inner(dihedral_state(phi, spec, DihedralVariant::sum).state,
               dihedral_state(phi, spec, DihedralVariant::difference).state);
}

// ---------------------------------------------------------------------------
// Annihilation operator on cyclic states

struct IrrepShift {
  FockVector state;  // a|psi> / ||a|psi>||
  int new_lambda = 1;
  /// Largest |amplitude| outside the class of new_lambda.
  double leakage = 0.0;
};

/// a lowers every photon number by one, moving class lambda - 1 to lambda - 2
/// (mod n): lambda -> lambda - 1, and 1 -> n.
inline IrrepShift annihilation_irrep_shift(const FockVector& psi, CyclicSpec spec) {
  spec.validate();
  const FockVector lowered = annihilate(psi);
  if (!(lowered.norm() > 0.0)) {
    throw std::domain_error("annihilation_irrep_shift: a|psi> = 0");
  }
  IrrepShift out{lowered.normalized(), spec.lambda >= 2 ? spec.lambda - 1 : spec.n,
                 0.0};
  for (std::size_t m = 0; m < out.state.size(); ++m) {
    if (!in_class(m, spec.n, out.new_lambda)) {
      out.leakage = std::max(out.leakage, std::abs(out.state[m]));
    }
  }
  return out;
}

}  // namespace polystate

#endif  // POLYSTATE_CYCLIC_HPP
