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

#ifndef POLYSTATE_GROUP_HPP
#define POLYSTATE_GROUP_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystate {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Non-negative residue of k modulo n (n >= 1).
constexpr std::int64_t mod_floor(std::int64_t k, std::int64_t n) noexcept {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

/// mu_n^k = exp(2 pi i k / n).
///
/// Every root of unity in the library goes through this one expression. The
/// exponent is reduced modulo n before the angle is formed, so the phase error
/// does not grow with |k| and mu_n^{k+n} == mu_n^k bit for bit. Quarter turns
/// are returned exactly.
inline Complex root_of_unity(std::int64_t k, std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("root_of_unity: order must be >= 1, got " +
                            std::to_string(n));
  }
  const std::int64_t reduced = mod_floor(k, n);
  if ((4 * reduced) % n == 0) {
    static constexpr double kQuarter[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto q = static_cast<std::size_t>(4 * reduced / n);
    return {kQuarter[q][0], kQuarter[q][1]};
  }
  return std::polar(1.0, kTwoPi * static_cast<double>(reduced) /
                             static_cast<double>(n));
}

enum class GroupKind { cyclic, dihedral };

inline const char* to_string(GroupKind kind) noexcept {
  return kind == GroupKind::cyclic ? "cyclic" : "dihedral";
}

/// C_n (or the rotation subgroup of D_n) with 1-based element labels.
///
/// Element r is the rotation by theta_r = 2 pi (r - 1) / n, so theta_1 = 0 is
/// the identity.
class GroupSpec {
 public:
  explicit GroupSpec(int order, GroupKind kind = GroupKind::cyclic)
      : order_(order), kind_(kind) {
    if (order < 1) {
      throw std::domain_error("GroupSpec: order must be >= 1, got " +
                              std::to_string(order));
    }
  }

  int order() const noexcept { return order_; }
  GroupKind kind() const noexcept { return kind_; }

  double angle(int r) const {
    check_element(r);
    return kTwoPi * static_cast<double>(r - 1) / static_cast<double>(order_);
  }

  std::vector<double> angles() const {
    std::vector<double> out(static_cast<std::size_t>(order_));
    for (int r = 1; r <= order_; ++r) {
      out[static_cast<std::size_t>(r - 1)] = angle(r);
    }
    return out;
  }

  void check_element(int r) const {
    if (r < 1 || r > order_) {
      throw std::domain_error("group element index " + std::to_string(r) +
                              " outside 1.." + std::to_string(order_));
    }
  }

 private:
  int order_;
  GroupKind kind_;
};

/// Angle of element r of C_n, theta_r = 2 pi (r - 1) / n.
inline double element_angle(int n, int r) { return GroupSpec(n).angle(r); }

/// chi_n^(lambda)(g_r) = exp(2 pi i (lambda - 1)(r - 1) / n).
inline Complex character(int n, int lambda, int r) {
  if (n < 1) {
    throw std::domain_error("character: order must be >= 1");
  }
  if (lambda < 1 || lambda > n) {
    throw std::domain_error("character: irrep index " + std::to_string(lambda) +
                            " outside 1.." + std::to_string(n));
  }
  if (r < 1 || r > n) {
    throw std::domain_error("character: element index " + std::to_string(r) +
                            " outside 1.." + std::to_string(n));
  }
  return root_of_unity(static_cast<std::int64_t>(lambda - 1) * (r - 1), n);
}

/// Sum_{j=1..n} mu_n^{j r}, evaluated term by term.
inline Complex root_sum(int n, std::int64_t r) {
  if (n < 1) {
    throw std::domain_error("root_sum: order must be >= 1");
  }
  Complex sum{0.0, 0.0};
  for (std::int64_t j = 1; j <= n; ++j) {
    sum += root_of_unity(j * r, n);
  }
  return sum;
}

struct OrthogonalityReport {
  /// max_{l,l'} |(1/n) sum_r chi^(l)(g_r) conj(chi^(l')(g_r)) - delta_{l l'}|
  double irrep_residual = 0.0;
  /// max_{r,r'} |(1/n) sum_l chi^(l)(g_r) conj(chi^(l)(g_r')) - delta_{r r'}|
  double element_residual = 0.0;
};

inline OrthogonalityReport character_orthogonality_report(int n) {
  if (n < 1) {
    throw std::domain_error("character_orthogonality_report: order must be >= 1");
  }
  std::vector<Complex> table(static_cast<std::size_t>(n) * n);
  auto at = [&](int lambda, int r) -> Complex& {
    return table[static_cast<std::size_t>(lambda - 1) * n + (r - 1)];
  };
  for (int lambda = 1; lambda <= n; ++lambda) {
    for (int r = 1; r <= n; ++r) {
      at(lambda, r) = character(n, lambda, r);
    }
  }

  OrthogonalityReport report;
  const double inv_n = 1.0 / n;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      Complex rows{0.0, 0.0};
      Complex cols{0.0, 0.0};
      for (int k = 1; k <= n; ++k) {
        rows += at(a, k) * std::conj(at(b, k));
        cols += at(k, a) * std::conj(at(k, b));
      }
      const double delta = a == b ? 1.0 : 0.0;
      report.irrep_residual =
          std::max(report.irrep_residual, std::abs(rows * inv_n - delta));
      report.element_residual =
          std::max(report.element_residual, std::abs(cols * inv_n - delta));
    }
  }
  return report;
}

}  // namespace polystate

#endif  // POLYSTATE_GROUP_HPP
