// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

#include "dqc1/circuit.hpp"
#include "dqc1/random.hpp"

namespace dqc1 {

/// `gate_count` gates drawn uniformly from `kinds` with uniformly chosen
/// distinct wires. Kinds that need more wires than the circuit has are
/// skipped; multi-controlled kinds get 1..wires-1 controls.
Circuit random_circuit(std::size_t wires, std::size_t gate_count, std::span<const GateKind> kinds,
                       CounterRng& rng);

/// {H, T, CX}.
std::span<const GateKind> clifford_t_kinds();
/// Every supported gate kind.
std::span<const GateKind> all_gate_kinds();

}  // namespace dqc1
