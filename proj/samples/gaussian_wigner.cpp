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

// Wigner grid of a C_3 cyclic Gaussian state, written as CSV to stdout.

#include <iostream>

#include "polystate/polystate.hpp"

int main() {
  using namespace polystate;
  const GaussianParams params{{1.0, 0.0}, {1.4142135623730951, 1.4142135623730951}};
  const CyclicState psi = cyclic_gaussian(params, {3, 2}, 64);
  const WignerGrid grid = wigner(psi.state, GridSpec::square(4.0, 81));
  write_csv(grid, std::cout);
  std::cerr << "normalization " << grid.normalization() << ", min " << grid.min_value()
            << ", C_3 residual " << rotation_residual(psi.state, 3, GridSpec::square(4.0, 21))
            << "\n";
  return 0;
}
