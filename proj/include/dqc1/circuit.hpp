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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dqc1 {

using Wire = std::size_t;

enum class GateKind {
  H, X, Y, Z, S, Sdg, T, Tdg,
  CX, CZ, SWAP, CCX,
  MCX,   // multi-controlled X, fires when every control reads 1
  MCX0,  // multi-controlled X, fires when every control reads 0
};

std::string_view mnemonic(GateKind kind);
std::optional<GateKind> kind_from_mnemonic(std::string_view text);

/// One elementary operation. `targets` has one wire, two for SWAP.
struct Gate {
  GateKind kind;
  std::vector<Wire> controls;
  std::vector<Wire> targets;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws ValidationError unless the gate's arity matches its kind, its wires
/// are pairwise distinct and all lie below `wires`.
void validate(const Gate& gate, std::size_t wires);

/// The adjoint gate: S <-> Sdg, T <-> Tdg, everything else is self-inverse.
Gate adjoint(const Gate& gate);

namespace gates {
Gate h(Wire q);
Gate x(Wire q);
Gate y(Wire q);
Gate z(Wire q);
Gate s(Wire q);
Gate sdg(Wire q);
Gate t(Wire q);
Gate tdg(Wire q);
Gate cx(Wire control, Wire target);
Gate cz(Wire control, Wire target);
Gate swap(Wire a, Wire b);
Gate ccx(Wire c1, Wire c2, Wire target);
Gate mcx(std::vector<Wire> controls, Wire target);
Gate mcx0(std::vector<Wire> controls, Wire target);
}  // namespace gates

/// Zero-controlled Toffoli: flips `target` exactly when all `controls` read 0.
/// `n_controls` must equal `controls.size()`.
Gate build_zero_controlled_toffoli(std::size_t n_controls, Wire target,
                                   std::vector<Wire> controls);

/// Ordered gate list over a fixed number of wires. Always valid once built.
class Circuit {
 public:
  explicit Circuit(std::size_t wires);
  Circuit(std::size_t wires, std::vector<Gate> gates);

  std::size_t wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t wires_;
  std::vector<Gate> gates_;
};

/// Reversed gate order with every gate replaced by its adjoint.
Circuit invert(const Circuit& circuit);

/// Copy of `circuit` on `wires` wires with every index shifted by `offset`.
Circuit relabel(const Circuit& circuit, std::size_t wires, std::size_t offset);

/// A one-clean-qubit instance: wire 0 starts in |0>, wires 1..mixed_width are
/// maximally mixed, and wires 0..measured_width-1 are read out at the end.
class Dqc1Instance {
 public:
  Dqc1Instance(Circuit circuit, std::size_t mixed_width,
               std::size_t measured_width = 1);

  const Circuit& circuit() const { return circuit_; }
  std::size_t mixed_width() const { return mixed_width_; }
  std::size_t measured_width() const { return measured_width_; }

  friend bool operator==(const Dqc1Instance&, const Dqc1Instance&) = default;

 private:
  Circuit circuit_;
  std::size_t mixed_width_;
  std::size_t measured_width_;
};

/// A promise-problem circuit acting on |0...0>, accepting when `output_wire`
/// reads 0. `delta` is the error tolerance, 0 < delta < 1/2.
class BqpCircuit {
 public:
  BqpCircuit(Circuit circuit, double delta, Wire output_wire = 0);

  const Circuit& circuit() const { return circuit_; }
  std::size_t width() const { return circuit_.wires(); }
  Wire output_wire() const { return output_wire_; }
  double delta() const { return delta_; }

 private:
  Circuit circuit_;
  double delta_;
  Wire output_wire_;
};

// Text format -----------------------------------------------------------------

/// Contents of a circuit file. `mixed` and `measure` are present only when the
/// file carries the corresponding headers.
struct CircuitFile {
  Circuit circuit;
  std::optional<std::size_t> mixed;
  std::optional<std::size_t> measure;
};

CircuitFile parse_circuit_file(std::string_view text);
Circuit parse_circuit(std::string_view text);

/// Interprets a parsed file as an instance. Missing `mixed` defaults to
/// wires - 1 and missing `measure` to 1.
Dqc1Instance to_instance(const CircuitFile& file);
Dqc1Instance parse_instance(std::string_view text);

std::string format_circuit(const Circuit& circuit);
std::string format_instance(const Dqc1Instance& instance);

}  // namespace dqc1
