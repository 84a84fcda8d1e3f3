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

// Even and odd cat states as the C_2 cyclic states of a coherent seed, and the
// photon-number class each one occupies.

#include <cstdio>

#include "polystate/polystate.hpp"

int main() {
  using namespace polystate;
  const FockVector seed = coherent({2.0, 0.0}, 40);
  for (int lambda = 1; lambda <= 2; ++lambda) {
    const CyclicState cat = cyclic_erasure(seed, {2, lambda});
    const MandelReport m = mandel_report(cat.state);
    std::printf("lambda=%d  N=%.6f  <n>=%.6f  M_Q=%.6f (%s)\n", lambda,
                cat.normalization.n_lambda, m.mean, m.m_q, to_string(m.label));
    for (int k = 0; k < 6; ++k) {
      std::printf("  p_%d = %.6f\n", k, std::norm(cat.state[static_cast<std::size_t>(k)]));
    }
  }
  // Rebuild |alpha> and |-alpha> from the two cats.
  const auto set = cyclic_set(seed, 2);
  for (int r = 1; r <= 2; ++r) {
    std::printf("R(theta_%d) seed recovered to %.2e\n", r,
                max_abs_difference(reconstruct_rotated(set, r), rotate_element(seed, 2, r)));
  }
  return 0;
}
