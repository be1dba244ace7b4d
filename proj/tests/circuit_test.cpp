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

#include <gtest/gtest.h>

#include <string>

#include "dqc1/circuit.hpp"
#include "dqc1/errors.hpp"
#include "dqc1/linalg.hpp"
#include "dqc1/random.hpp"
#include "dqc1/random_circuit.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1 {
namespace {

using namespace gates;

TEST(ParseCircuit, BellPair) {
  const Circuit c = parse_circuit("wires 2\nh 0\ncx 0 1");
  EXPECT_EQ(c, Circuit(2, {h(0), cx(0, 1)}));
}

TEST(ParseCircuit, EmptyCircuit) {
  const Circuit c = parse_circuit("wires 1\n");
  EXPECT_EQ(c.wires(), 1u);
  EXPECT_EQ(c.size(), 0u);
}

TEST(ParseCircuit, DuplicateWireReportsPosition) {
  try {
    parse_circuit("wires 2\ncx 0 0");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(ParseCircuit, CommentsCaseAndWhitespace) {
  const char* text =
      "# a comment line\n"
      "WIRES 4   # trailing comment\n"
      "\n"
      "  H 0\n"
      "Sdg 1\n"
      "tdg 2\n"
      "Swap 0 3\n"
      "ccx 0 1 2\n"
      "mcx 0 1 2 3\n"
      "MCX0 1 2 0\n"
      "cz 3 0\n";
  const Circuit c = parse_circuit(text);
  const Circuit expected(4, {h(0), sdg(1), tdg(2), swap(0, 3), ccx(0, 1, 2), mcx({0, 1, 2}, 3),
                             mcx0({1, 2}, 0), cz(3, 0)});
  EXPECT_EQ(c, expected);
}

TEST(ParseCircuit, InstanceHeaders) {
  const CircuitFile file = parse_circuit_file("wires 3\nmixed 2\nmeasure 2\nh 0\n");
  ASSERT_TRUE(file.mixed && file.measure);
  EXPECT_EQ(*file.mixed, 2u);
  EXPECT_EQ(*file.measure, 2u);
  const Dqc1Instance inst = to_instance(file);
  EXPECT_EQ(inst.mixed_width(), 2u);
  EXPECT_EQ(inst.measured_width(), 2u);

  const Dqc1Instance defaults = parse_instance("wires 3\nh 0\n");
  EXPECT_EQ(defaults.mixed_width(), 2u);
  EXPECT_EQ(defaults.measured_width(), 1u);
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportsPosition) {
  const BadInput& bad = GetParam();
  try {
    parse_circuit_file(bad.text);
    FAIL() << "expected ParseError for: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_EQ(e.column(), bad.column) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    CircuitFormat, ParseErrors,
    ::testing::Values(BadInput{"h 0\n", 1, 1},                      // gates before header
                      BadInput{"wires 2\nfoo 1\n", 2, 1},           // unknown mnemonic
                      BadInput{"wires 2\nh 2\n", 2, 3},             // out of range
                      BadInput{"wires 2\nh x\n", 2, 3},             // not an integer
                      BadInput{"wires 2\nh -1\n", 2, 3},            // negative
                      BadInput{"wires 2\ncx 0\n", 2, 1},            // arity
                      BadInput{"wires 3\nmcx0 1\n", 2, 1},          // missing target
                      BadInput{"wires 2\nh 0\nmixed 1\n", 3, 1},    // header after gates
                      BadInput{"wires 2\nwires 2\n", 2, 1},         // duplicate header
                      BadInput{"wires 0\n", 1, 7},                  // zero wires
                      BadInput{"# nothing\n", 2, 1},                // missing header
                      BadInput{"wires 3\nccx 0 1 1\n", 2, 9}));     // duplicate wire

TEST(ParseCircuit, InstanceWidthMismatchIsValidationError) {
  EXPECT_THROW(parse_instance("wires 3\nmixed 1\n"), ValidationError);
  EXPECT_THROW(parse_instance("wires 3\nmeasure 4\n"), ValidationError);
  EXPECT_THROW(parse_instance("wires 3\nmeasure 0\n"), ValidationError);
}

TEST(GateValidation, ArityAndWires) {
  EXPECT_THROW(validate(Gate{GateKind::H, {1}, {0}}, 2), ValidationError);
  EXPECT_THROW(validate(Gate{GateKind::CX, {}, {0}}, 2), ValidationError);
  EXPECT_THROW(validate(Gate{GateKind::CCX, {0}, {1}}, 3), ValidationError);
  EXPECT_THROW(validate(Gate{GateKind::MCX0, {}, {0}}, 2), ValidationError);
  EXPECT_THROW(validate(Gate{GateKind::SWAP, {}, {0}}, 2), ValidationError);
  EXPECT_THROW(validate(cx(0, 5), 2), ValidationError);
  EXPECT_THROW(validate(mcx({1, 2, 1}, 0), 3), ValidationError);
  EXPECT_NO_THROW(validate(mcx0({1, 2, 3}, 0), 4));
  EXPECT_THROW(Circuit(0), ValidationError);
  EXPECT_THROW(Circuit(2).append(h(2)), ValidationError);
}

// Maps a wire-ordered basis bitstring through the circuit, asserting the
// result is again a basis state.
std::string map_basis(const Circuit& c, const std::string& input) {
  const StateVectorXd psi = run_statevector(c, input);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (std::abs(psi[i] - Complex<double>(1)) < 1e-12) {
      return outcome_bitstring(static_cast<std::size_t>(i), c.wires());
    }
  }
  ADD_FAILURE() << "not a basis state";
  return {};
}

TEST(ZeroControlledToffoli, OneControl) {
  const Circuit c(2, {build_zero_controlled_toffoli(1, 1, {0})});
  EXPECT_EQ(map_basis(c, "00"), "01");
  EXPECT_EQ(map_basis(c, "01"), "00");
  EXPECT_EQ(map_basis(c, "10"), "10");
  EXPECT_EQ(map_basis(c, "11"), "11");
}

TEST(ZeroControlledToffoli, TwoControls) {
  const Circuit c(3, {build_zero_controlled_toffoli(2, 2, {0, 1})});
  EXPECT_EQ(map_basis(c, "000"), "001");
  EXPECT_EQ(map_basis(c, "010"), "010");
  EXPECT_EQ(map_basis(c, "100"), "100");
  EXPECT_EQ(map_basis(c, "110"), "110");
}

TEST(ZeroControlledToffoli, RejectsBadArguments) {
  EXPECT_THROW(build_zero_controlled_toffoli(2, 0, {1}), ValidationError);
  EXPECT_THROW(build_zero_controlled_toffoli(2, 0, {1, 1}), ValidationError);
  EXPECT_THROW(build_zero_controlled_toffoli(1, 0, {0}), ValidationError);
  EXPECT_THROW(build_zero_controlled_toffoli(0, 0, {}), ValidationError);
}

TEST(ZeroControlledToffoli, MatchesDefiningOperator) {
  // X (x) |0><0|^n + I (x) (I - |0><0|^n) with the target as the first factor.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Wire> controls;
    for (Wire w = 1; w <= n; ++w) controls.push_back(w);
    const OperatorXd u =
        gate_operator<double>(build_zero_controlled_toffoli(n, 0, controls), n + 1);
    const std::size_t dim = dimension(n + 1);
    OperatorXd expected = OperatorXd::Identity(dim, dim);
    // Register all-zero means basis indices 0 and 1; swap them.
    expected(0, 0) = expected(1, 1) = 0.0;
    expected(0, 1) = expected(1, 0) = 1.0;
    EXPECT_LE((u - expected).cwiseAbs().maxCoeff(), 0.0) << "n = " << n;
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Circuit(1, {h(0)})), Circuit(1, {h(0)}));
  EXPECT_EQ(invert(Circuit(2, {s(0), cx(0, 1)})), Circuit(2, {cx(0, 1), sdg(0)}));
  EXPECT_EQ(invert(Circuit(1, {t(0), tdg(0), sdg(0)})), Circuit(1, {s(0), t(0), tdg(0)}));
}

TEST(Invert, InvolutionProperty) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    CounterRng rng(11, i);
    const std::size_t wires = 1 + rng() % 5;
    const Circuit c = random_circuit(wires, rng() % 25, all_gate_kinds(), rng);
    EXPECT_EQ(invert(invert(c)), c);
  }
}

TEST(Invert, ComposesToIdentityOnBasisStates) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    CounterRng rng(12, i);
    const std::size_t wires = 2 + rng() % 4;
    const Circuit c = random_circuit(wires, 5 + rng() % 20, all_gate_kinds(), rng);
    Circuit round_trip = c;
    round_trip.append(invert(c));
    for (std::uint64_t b = 0; b < dimension(wires); ++b) {
      const StateVectorXd psi = run_statevector(round_trip, b);
      EXPECT_LE((psi - basis_state<double>(wires, b)).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Format, RoundTripProperty) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    CounterRng rng(13, i);
    const std::size_t wires = 1 + rng() % 6;
    const Circuit c = random_circuit(wires, rng() % 30, all_gate_kinds(), rng);
    EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    if (wires >= 1) {
      const Dqc1Instance inst(c, wires - 1, 1 + rng() % wires);
      EXPECT_EQ(parse_instance(format_instance(inst)), inst);
    }
  }
}

TEST(GateMatrices, EveryKindIsUnitary) {
  for (GateKind kind : all_gate_kinds()) {
    Gate g{kind, {}, {0}};
    switch (kind) {
      case GateKind::SWAP: g = swap(0, 2); break;
      case GateKind::CX:
      case GateKind::CZ: g.controls = {1}; break;
      case GateKind::CCX: g = ccx(1, 2, 0); break;
      case GateKind::MCX:
      case GateKind::MCX0: g.controls = {1, 2}; break;
      default: break;
    }
    const OperatorXd u = gate_operator<double>(g, 3);
    const OperatorXd residual = u.adjoint() * u - OperatorXd::Identity(8, 8);
    EXPECT_LE(residual.cwiseAbs().maxCoeff(), 1e-12) << mnemonic(kind);
  }
}

TEST(GateMatrices, TwoQubitOperatorsMatchHandWrittenMatrices) {
  // Basis index bit k is wire k: index = q0 + 2 q1.
  OperatorXd cx01 = OperatorXd::Zero(4, 4);  // control 0, target 1
  cx01(0, 0) = cx01(3, 1) = cx01(2, 2) = cx01(1, 3) = 1.0;
  EXPECT_LE((gate_operator<double>(cx(0, 1), 2) - cx01).cwiseAbs().maxCoeff(), 1e-15);

  OperatorXd sw = OperatorXd::Zero(4, 4);
  sw(0, 0) = sw(2, 1) = sw(1, 2) = sw(3, 3) = 1.0;
  EXPECT_LE((gate_operator<double>(swap(0, 1), 2) - sw).cwiseAbs().maxCoeff(), 1e-15);

  OperatorXd czm = OperatorXd::Identity(4, 4);
  czm(3, 3) = -1.0;
  EXPECT_LE((gate_operator<double>(cz(1, 0), 2) - czm).cwiseAbs().maxCoeff(), 1e-15);
}

}  // namespace
}  // namespace dqc1
