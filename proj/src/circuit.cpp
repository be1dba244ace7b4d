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

#include "dqc1/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "dqc1/errors.hpp"

namespace dqc1 {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 14> kKinds{{
    {GateKind::H, "h"},       {GateKind::X, "x"},     {GateKind::Y, "y"},
    {GateKind::Z, "z"},       {GateKind::S, "s"},     {GateKind::Sdg, "sdg"},
    {GateKind::T, "t"},       {GateKind::Tdg, "tdg"}, {GateKind::CX, "cx"},
    {GateKind::CZ, "cz"},     {GateKind::SWAP, "swap"},
    {GateKind::CCX, "ccx"},   {GateKind::MCX, "mcx"}, {GateKind::MCX0, "mcx0"},
}};

bool is_single_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
      return true;
    default:
      return false;
  }
}

std::string describe(const Gate& gate) { return std::string(mnemonic(gate.kind)); }

}  // namespace

std::string_view mnemonic(GateKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "?";
}

std::optional<GateKind> kind_from_mnemonic(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& info : kKinds) {
    if (info.name == lower) return info.kind;
  }
  return std::nullopt;
}

void validate(const Gate& gate, std::size_t wires) {
  const std::size_t nc = gate.controls.size();
  const std::size_t nt = gate.targets.size();
  const std::size_t want_targets = gate.kind == GateKind::SWAP ? 2 : 1;
  if (nt != want_targets) {
    throw ValidationError(describe(gate) + " needs " + std::to_string(want_targets) +
                          " target wire(s), got " + std::to_string(nt));
  }
  bool arity_ok = true;
  if (is_single_qubit(gate.kind) || gate.kind == GateKind::SWAP) {
    arity_ok = nc == 0;
  } else if (gate.kind == GateKind::CX || gate.kind == GateKind::CZ) {
    arity_ok = nc == 1;
  } else if (gate.kind == GateKind::CCX) {
    arity_ok = nc == 2;
  } else {
    arity_ok = nc >= 1;
  }
  if (!arity_ok) {
    throw ValidationError(describe(gate) + " has the wrong number of controls (" +
                          std::to_string(nc) + ")");
  }

  std::vector<Wire> all(gate.controls);
  all.insert(all.end(), gate.targets.begin(), gate.targets.end());
  for (Wire w : all) {
    if (w >= wires) {
      throw ValidationError(describe(gate) + ": wire " + std::to_string(w) +
                            " out of range for " + std::to_string(wires) + " wires");
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ValidationError(describe(gate) + ": duplicate wire " +
                          std::to_string(*std::adjacent_find(all.begin(), all.end())));
  }
}

Gate adjoint(const Gate& gate) {
  Gate out = gate;
  switch (gate.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    default: break;
  }
  return out;
}

namespace gates {
Gate h(Wire q) { return {GateKind::H, {}, {q}}; }
Gate x(Wire q) { return {GateKind::X, {}, {q}}; }
Gate y(Wire q) { return {GateKind::Y, {}, {q}}; }
Gate z(Wire q) { return {GateKind::Z, {}, {q}}; }
Gate s(Wire q) { return {GateKind::S, {}, {q}}; }
Gate sdg(Wire q) { return {GateKind::Sdg, {}, {q}}; }
Gate t(Wire q) { return {GateKind::T, {}, {q}}; }
Gate tdg(Wire q) { return {GateKind::Tdg, {}, {q}}; }
Gate cx(Wire control, Wire target) { return {GateKind::CX, {control}, {target}}; }
Gate cz(Wire control, Wire target) { return {GateKind::CZ, {control}, {target}}; }
Gate swap(Wire a, Wire b) { return {GateKind::SWAP, {}, {a, b}}; }
Gate ccx(Wire c1, Wire c2, Wire target) { return {GateKind::CCX, {c1, c2}, {target}}; }
Gate mcx(std::vector<Wire> controls, Wire target) {
  return {GateKind::MCX, std::move(controls), {target}};
}
Gate mcx0(std::vector<Wire> controls, Wire target) {
  return {GateKind::MCX0, std::move(controls), {target}};
}
}  // namespace gates

Gate build_zero_controlled_toffoli(std::size_t n_controls, Wire target,
                                   std::vector<Wire> controls) {
  if (n_controls == 0 || n_controls != controls.size()) {
    throw ValidationError("zero-controlled Toffoli: expected " +
                          std::to_string(n_controls) + " controls, got " +
                          std::to_string(controls.size()));
  }
  Gate gate = gates::mcx0(std::move(controls), target);
  std::size_t span = target + 1;
  for (Wire c : gate.controls) span = std::max(span, c + 1);
  validate(gate, span);
  return gate;
}

// Circuit ---------------------------------------------------------------------

Circuit::Circuit(std::size_t wires) : wires_(wires) {
  if (wires == 0) throw ValidationError("a circuit needs at least one wire");
}

Circuit::Circuit(std::size_t wires, std::vector<Gate> gates) : Circuit(wires) {
  for (const auto& g : gates) validate(g, wires_);
  gates_ = std::move(gates);
}

Circuit& Circuit::append(Gate gate) {
  validate(gate, wires_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.wires() > wires_) {
    throw ValidationError("cannot append a " + std::to_string(other.wires()) +
                          "-wire circuit to a " + std::to_string(wires_) + "-wire one");
  }
  gates_.insert(gates_.end(), other.gates().begin(), other.gates().end());
  return *this;
}

Circuit invert(const Circuit& circuit) {
  std::vector<Gate> out;
  out.reserve(circuit.size());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    out.push_back(adjoint(*it));
  }
  return Circuit(circuit.wires(), std::move(out));
}

Circuit relabel(const Circuit& circuit, std::size_t wires, std::size_t offset) {
  std::vector<Gate> out;
  out.reserve(circuit.size());
  for (Gate g : circuit.gates()) {
    for (Wire& w : g.controls) w += offset;
    for (Wire& w : g.targets) w += offset;
    out.push_back(std::move(g));
  }
  return Circuit(wires, std::move(out));
}

Dqc1Instance::Dqc1Instance(Circuit circuit, std::size_t mixed_width,
                           std::size_t measured_width)
    : circuit_(std::move(circuit)),
      mixed_width_(mixed_width),
      measured_width_(measured_width) {
  if (circuit_.wires() != 1 + mixed_width_) {
    throw ValidationError("instance has " + std::to_string(circuit_.wires()) +
                          " wires but mixed width " + std::to_string(mixed_width_) +
                          " requires " + std::to_string(1 + mixed_width_));
  }
  if (measured_width_ < 1 || measured_width_ > circuit_.wires()) {
    throw ValidationError("measured width " + std::to_string(measured_width_) +
                          " outside [1, " + std::to_string(circuit_.wires()) + "]");
  }
}

BqpCircuit::BqpCircuit(Circuit circuit, double delta, Wire output_wire)
    : circuit_(std::move(circuit)), delta_(delta), output_wire_(output_wire) {
  if (output_wire_ >= circuit_.wires()) {
    throw ValidationError("output wire " + std::to_string(output_wire_) +
                          " out of range");
  }
  if (!(delta_ > 0.0 && delta_ < 0.5)) {
    throw ValidationError("delta must lie in (0, 1/2), got " + std::to_string(delta_));
  }
}

}  // namespace dqc1
