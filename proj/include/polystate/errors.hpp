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

#ifndef POLYSTATE_ERRORS_HPP
#define POLYSTATE_ERRORS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polystate {

/// Raised when a symmetry-adapted construction has nothing to project onto:
/// the seed carries no weight in the requested residue class (or the raw
/// superposition cancels to zero).
class EmptyRepresentation : public std::domain_error {
 public:
  EmptyRepresentation(int order, int lambda, std::vector<double> class_masses,
                      const std::string& detail = {})
      : std::domain_error(format(order, lambda, class_masses, detail)),
        order_(order),
        lambda_(lambda),
        class_masses_(std::move(class_masses)) {}

  int order() const noexcept { return order_; }
  int lambda() const noexcept { return lambda_; }
  /// Weight of the seed in each residue class, index k <-> m = k (mod n).
  const std::vector<double>& class_masses() const noexcept {
    return class_masses_;
  }

 private:
  static std::string format(int order, int lambda,
                            const std::vector<double>& masses,
                            const std::string& detail) {
    std::ostringstream os;
    os << "empty representation for (n=" << order << ", lambda=" << lambda
       << ")";
    if (!detail.empty()) {
      os << ": " << detail;
    }
    if (!masses.empty()) {
      os << "; class masses [";
      for (std::size_t k = 0; k < masses.size(); ++k) {
        os << (k ? ", " : "") << masses[k];
      }
      os << "]";
    }
    return os.str();
  }

  int order_;
  int lambda_;
  std::vector<double> class_masses_;
};

/// The dense two-mode oracle would need more memory than allowed.
class MemoryBudgetExceeded : public std::runtime_error {
 public:
  MemoryBudgetExceeded(std::size_t required, std::size_t budget)
      : std::runtime_error("two-mode tensor needs " + std::to_string(required) +
                           " bytes, budget is " + std::to_string(budget) +
                           " bytes"),
        required_(required),
        budget_(budget) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

/// Malformed state/operator/spec documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polystate

#endif  // POLYSTATE_ERRORS_HPP
