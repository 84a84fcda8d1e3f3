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

#ifndef POLYSTATE_FOCK_OPERATOR_HPP
#define POLYSTATE_FOCK_OPERATOR_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "polystate/fock.hpp"

namespace polystate {

using MatrixC = Eigen::MatrixXcd;

/// Operator on the truncated space, matrix element (m, m') = <m|O|m'>.
class FockOperator {
 public:
  explicit FockOperator(MatrixC matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
      throw std::invalid_argument("FockOperator: need a non-empty square matrix");
    }
    if (!matrix_.allFinite()) {
      throw std::invalid_argument("FockOperator: non-finite matrix element");
    }
  }

  static FockOperator zero(int n_max) {
    FockVector::check_n_max(n_max);
    return FockOperator(MatrixC::Zero(n_max + 1, n_max + 1));
  }

  int n_max() const noexcept { return static_cast<int>(matrix_.rows()) - 1; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const MatrixC& matrix() const noexcept { return matrix_; }
  Complex operator()(Eigen::Index m, Eigen::Index mp) const { return matrix_(m, mp); }

  Complex trace() const { return matrix_.trace(); }

  /// max |O - O^dag| entrywise.
  double hermiticity_residual() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  }

  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const {
    const MatrixC h = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixC> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }

  /// Hermitian and unit trace within tol; PSD (eigenvalues >= -psd_tol) on request.
  bool is_density(double tol = 1e-12, bool check_psd = false,
                  double psd_tol = 1e-10) const {
    if (hermiticity_residual() > tol) return false;
    if (std::abs(trace() - Complex{1.0, 0.0}) > tol) return false;
    return !check_psd || min_eigenvalue() >= -psd_tol;
  }

 private:
  MatrixC matrix_;
};

/// |psi><psi|.
inline FockOperator outer(const FockVector& psi) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
  for (std::size_t m = 0; m < psi.size(); ++m) {
    v(static_cast<Eigen::Index>(m)) = psi[m];
  }
  return FockOperator(v * v.adjoint());
}

/// R(theta) O R(theta)^dag: element (m, m') picks up exp(-i theta (m - m')).
inline FockOperator rotate(const FockOperator& op, double theta) {
  MatrixC out = op.matrix();
  for (Eigen::Index m = 0; m < out.rows(); ++m) {
    for (Eigen::Index mp = 0; mp < out.cols(); ++mp) {
      out(m, mp) *= std::polar(1.0, -theta * static_cast<double>(m - mp));
    }
  }
  return FockOperator(std::move(out));
}

/// R(theta_r) O R(theta_r)^dag for element r of C_n, with exact residue phases.
inline FockOperator rotate_element(const FockOperator& op, int n, int r) {
  GroupSpec(n).check_element(r);
  MatrixC out = op.matrix();
  for (Eigen::Index m = 0; m < out.rows(); ++m) {
    for (Eigen::Index mp = 0; mp < out.cols(); ++mp) {
      out(m, mp) *= root_of_unity(-static_cast<std::int64_t>(r - 1) * (m - mp), n);
    }
  }
  return FockOperator(std::move(out));
}

/// Tr(A B).
inline Complex trace_product(const FockOperator& a, const FockOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_product: dimension mismatch");
  }
  return (a.matrix().transpose().cwiseProduct(b.matrix())).sum();
}

/// max |A - B| entrywise.
inline double max_abs_difference(const FockOperator& a, const FockOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_difference: dimension mismatch");
  }
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace polystate

#endif  // POLYSTATE_FOCK_OPERATOR_HPP
