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

#ifndef POLYSTATE_POLYSTATE_HPP
#define POLYSTATE_POLYSTATE_HPP

#include "polystate/group.hpp"
#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/fock_operator.hpp"
#include "polystate/hermite.hpp"
#include "polystate/cyclic.hpp"
#include "polystate/gaussian.hpp"
#include "polystate/wigner.hpp"
#include "polystate/mandel.hpp"
#include "polystate/entanglement.hpp"

#endif  // POLYSTATE_POLYSTATE_HPP
