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

#include "dqc1/random_circuit.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "dqc1/errors.hpp"

namespace dqc1 {

namespace {

constexpr std::array<GateKind, 3> kCliffordT{GateKind::H, GateKind::T, GateKind::CX};
constexpr std::array<GateKind, 14> kAll{
    GateKind::H,  GateKind::X,  GateKind::Y,    GateKind::Z,   GateKind::S,
    GateKind::Sdg, GateKind::T, GateKind::Tdg,  GateKind::CX,  GateKind::CZ,
    GateKind::SWAP, GateKind::CCX, GateKind::MCX, GateKind::MCX0,
};

std::size_t min_wires(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::MCX:
    case GateKind::MCX0:
      return 2;
    case GateKind::CCX:
      return 3;
    default:
      return 1;
  }
}

std::size_t below(CounterRng& rng, std::size_t bound) { return rng() % bound; }

}  // namespace

std::span<const GateKind> clifford_t_kinds() { return kCliffordT; }
std::span<const GateKind> all_gate_kinds() { return kAll; }

Circuit random_circuit(std::size_t wires, std::size_t gate_count, std::span<const GateKind> kinds,
                       CounterRng& rng) {
  std::vector<GateKind> usable;
  for (GateKind k : kinds) {
    if (min_wires(k) <= wires) usable.push_back(k);
  }
  if (usable.empty()) throw ValidationError("no gate kind fits on " + std::to_string(wires) + " wires");

  Circuit circuit(wires);
  std::vector<Wire> order(wires);
  for (std::size_t g = 0; g < gate_count; ++g) {
    const GateKind kind = usable[below(rng, usable.size())];
    for (std::size_t i = 0; i < wires; ++i) order[i] = i;
    // Partial Fisher-Yates: the first few entries become a random distinct set.
    for (std::size_t i = 0; i < wires; ++i) std::swap(order[i], order[i + below(rng, wires - i)]);

    std::size_t controls = 0;
    switch (kind) {
      case GateKind::CX:
      case GateKind::CZ: controls = 1; break;
      case GateKind::CCX: controls = 2; break;
      case GateKind::MCX:
      case GateKind::MCX0: controls = 1 + below(rng, wires - 1); break;
      default: break;
    }
    Gate gate{kind, {}, {}};
    if (kind == GateKind::SWAP) {
      gate.targets = {order[0], order[1]};
    } else {
      gate.controls.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(controls));
      gate.targets = {order[controls]};
    }
    circuit.append(std::move(gate));
  }
  return circuit;
}

}  // namespace dqc1
