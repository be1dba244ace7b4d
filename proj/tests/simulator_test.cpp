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

#include <Eigen/Eigenvalues>

#include <cmath>

#include "dqc1/circuit.hpp"
#include "dqc1/errors.hpp"
#include "dqc1/random.hpp"
#include "dqc1/random_circuit.hpp"
#include "dqc1/reduction.hpp"
#include "dqc1/simulator.hpp"
#include "oracle.hpp"

namespace dqc1 {
namespace {

using namespace gates;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Dqc1Instance random_instance(std::uint64_t seed, std::uint64_t i, std::size_t max_wires,
                             std::size_t max_measured) {
  CounterRng rng(seed, i);
  const std::size_t m = 1 + rng() % max_measured;
  const std::size_t lo = std::max<std::size_t>(m, 2);
  const std::size_t wires = lo + rng() % (max_wires - lo + 1);
  return Dqc1Instance(random_circuit(wires, 4 + rng() % 24, all_gate_kinds(), rng), wires - 1, m);
}

TEST(RunStatevector, Hadamard) {
  const StateVectorXd psi = run_statevector(Circuit(1, {h(0)}), "0");
  EXPECT_NEAR(psi[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(psi[1].real(), kInvSqrt2, 1e-15);
}

TEST(RunStatevector, EmptyCircuitIsIdentity) {
  const StateVectorXd psi = run_statevector(Circuit(3), "101");
  EXPECT_EQ(psi, basis_state<double>(3, 0b101));
}

TEST(RunStatevector, BellPair) {
  const StateVectorXd psi = run_statevector(Circuit(2, {h(0), cx(0, 1)}), "00");
  EXPECT_NEAR(std::abs(psi[0b00]), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(psi[0b11]), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(psi[0b01]) + std::abs(psi[0b10]), 0.0, 1e-15);
}

TEST(RunStatevector, RejectsWrongInputWidth) {
  EXPECT_THROW(run_statevector(Circuit(2), "0"), ValidationError);
  EXPECT_THROW(run_statevector(Circuit(2), "02"), ValidationError);
}

TEST(ApplyGate, AgreesWithExplicitOperatorAndPreservesNorm) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    CounterRng rng(21, i);
    const std::size_t wires = 1 + rng() % 5;
    StateVectorXd psi = StateVectorXd::Zero(dimension(wires));
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      psi[k] = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    }
    psi.normalize();
    const Circuit c = random_circuit(wires, 10, all_gate_kinds(), rng);
    for (const Gate& g : c.gates()) {
      const StateVectorXd expected = gate_operator<double>(g, wires) * psi;
      apply_gate(psi, g);
      ASSERT_LE((psi - expected).cwiseAbs().maxCoeff(), 1e-12) << mnemonic(g.kind);
      ASSERT_NEAR(psi.squaredNorm(), 1.0, 1e-10);
    }
  }
}

// Closed-form cases shared by both exact backends.
struct ClosedForm {
  Circuit circuit;
  double p0;
};

std::vector<ClosedForm> closed_forms() {
  return {{Circuit(2), 1.0}, {Circuit(2, {h(0)}), 0.5}, {Circuit(2, {swap(0, 1)}), 0.5}};
}

TEST(Dqc1Exact, ClosedFormCases) {
  for (const auto& [circuit, p0] : closed_forms()) {
    const auto dist = dqc1_exact(Dqc1Instance(circuit, 1, 1));
    EXPECT_EQ(dist.kind, DistributionKind::Exact);
    EXPECT_NEAR(dist[0], p0, 1e-15);
    EXPECT_NEAR(dist[1], 1.0 - p0, 1e-15);
  }
}

TEST(Dqc1Density, ClosedFormCases) {
  for (const auto& [circuit, p0] : closed_forms()) {
    const auto dist = dqc1_density(Dqc1Instance(circuit, 1, 1));
    EXPECT_NEAR(dist[0], p0, 1e-15);
    EXPECT_NEAR(dist[1], 1.0 - p0, 1e-15);
  }
}

TEST(Dqc1Exact, MatchesUnitaryOracle) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Dqc1Instance inst = random_instance(22, i, 6, 3);
    const auto dist = dqc1_exact(inst);
    const auto expected = oracle::dqc1_probabilities(inst);
    for (std::size_t a = 0; a < expected.size(); ++a) EXPECT_NEAR(dist[a], expected[a], 1e-12);
  }
}

TEST(Dqc1Density, RandomFourWireInstanceMatchesEnumeration) {
  const Dqc1Instance inst = random_instance(23, 0, 4, 1);
  ASSERT_EQ(inst.circuit().wires() <= 4, true);
  const auto a = dqc1_exact(inst);
  const auto b = dqc1_density(inst);
  for (std::size_t k = 0; k < a.outcomes(); ++k) EXPECT_LE(std::abs(a[k] - b[k]), 1e-10);
}

TEST(Dqc1Density, BackendEquivalenceProperty) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const Dqc1Instance inst = random_instance(24, i, 6, 3);
    const auto a = dqc1_exact(inst);
    const auto b = dqc1_density(inst);
    for (std::size_t k = 0; k < a.outcomes(); ++k) ASSERT_LE(std::abs(a[k] - b[k]), 1e-10);
  }
}

TEST(Dqc1Density, DensityMatrixInvariants) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Dqc1Instance inst = random_instance(25, i, 5, 2);
    const DensityMatrixXd rho = dqc1_density_matrix(inst);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
    EXPECT_NEAR(rho.trace().imag(), 0.0, 1e-10);
    EXPECT_LE((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::SelfAdjointEigenSolver<DensityMatrixXd> eig(rho, Eigen::EigenvaluesOnly);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(Dqc1Density, PermutationCircuitsGiveDyadicProbabilities) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    CounterRng rng(26, i);
    const std::size_t wires = 2 + rng() % 5;
    const std::array<GateKind, 1> kinds{GateKind::MCX0};
    const Dqc1Instance inst(random_circuit(wires, 1 + rng() % 8, kinds, rng), wires - 1, 1);
    const double scale = static_cast<double>(dimension(inst.mixed_width()));
    for (const auto& dist : {dqc1_density(inst), dqc1_exact(inst)}) {
      for (double p : dist.probabilities) {
        EXPECT_NEAR(p * scale, std::round(p * scale), 1e-10);
      }
    }
  }
}

TEST(Dqc1Exact, NormalizationProperty) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Dqc1Instance inst = random_instance(27, i, 7, 4);
    double total = 0.0;
    for (double p : dqc1_exact(inst).probabilities) {
      EXPECT_GE(p, -1e-15);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Dqc1Exact, ThreadCountDoesNotChangeBits) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Dqc1Instance inst = random_instance(28, i, 9, 2);
    SimulatorLimits serial;
    serial.threads = 1;
    SimulatorLimits parallel;
    parallel.threads = 4;
    EXPECT_EQ(dqc1_exact(inst, serial).probabilities, dqc1_exact(inst, parallel).probabilities);
  }
}

TEST(Dqc1Exact, CapsAreEnforced) {
  SimulatorLimits limits;
  limits.max_mixed_width = 2;
  limits.max_density_wires = 2;
  const Dqc1Instance inst(Circuit(4), 3, 1);
  EXPECT_THROW(dqc1_exact(inst, limits), CapExceeded);
  EXPECT_THROW(dqc1_density(inst, limits), CapExceeded);
  EXPECT_THROW(dqc1_sample(inst, 10, 1, limits), CapExceeded);
  EXPECT_THROW(dqc1_exact(Dqc1Instance(Circuit(22), 21, 1)), CapExceeded);
  EXPECT_THROW(dqc1_density(Dqc1Instance(Circuit(9), 8, 1)), CapExceeded);
}

TEST(Dqc1Exact, MeasuringEveryWire) {
  // With m = 1 + n and the identity, the readout is 0 on wire 0 and uniform on the rest.
  const auto dist = dqc1_exact(Dqc1Instance(Circuit(3), 2, 3));
  for (std::size_t a = 0; a < dist.outcomes(); ++a) {
    EXPECT_DOUBLE_EQ(dist[a], (a & 1U) ? 0.0 : 0.25);
  }
}

TEST(Dqc1Sample, HadamardConcentration) {
  const auto dist = dqc1_sample(Dqc1Instance(Circuit(2, {h(0)}), 1, 1), 1000000, 7);
  EXPECT_EQ(dist.kind, DistributionKind::Empirical);
  EXPECT_EQ(dist.shots, 1000000u);
  EXPECT_LE(std::abs(dist[0] - 0.5), 0.002);
}

TEST(Dqc1Sample, DeterministicOutcome) {
  for (std::uint64_t shots : {1u, 17u, 1000u}) {
    const auto dist = dqc1_sample(Dqc1Instance(Circuit(3), 2, 1), shots, 3);
    EXPECT_EQ(dist[0], 1.0);
    EXPECT_EQ(dist.counts[0], shots);
  }
}

TEST(Dqc1Sample, ReproducibleAcrossRunsAndThreadCounts) {
  const Dqc1Instance inst = random_instance(29, 0, 5, 2);
  SimulatorLimits one;
  one.threads = 1;
  SimulatorLimits many;
  many.threads = 3;
  const auto a = dqc1_sample(inst, 20000, 99, one);
  const auto b = dqc1_sample(inst, 20000, 99, many);
  const auto c = dqc1_sample(inst, 20000, 100, one);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_NE(a.counts, c.counts);
}

TEST(Dqc1Sample, CachedAndDirectPathsAgree) {
  for (std::uint64_t i = 0; i < 5; ++i) {
    const Dqc1Instance inst = random_instance(30, i, 5, 3);
    SimulatorLimits direct;
    direct.sample_table_entries = 0;
    EXPECT_EQ(dqc1_sample(inst, 3000, 5).counts, dqc1_sample(inst, 3000, 5, direct).counts);
  }
}

TEST(Dqc1Sample, SoundnessAcrossSeeds) {
  const Dqc1Instance inst = random_instance(31, 3, 4, 2);
  const auto exact = dqc1_exact(inst);
  constexpr std::uint64_t kShots = 4000;
  int within = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto dist = dqc1_sample(inst, kShots, seed);
    for (std::size_t a = 0; a < exact.outcomes(); ++a) {
      const double p = exact[a];
      const double tol = 4.0 * std::sqrt(p * (1.0 - p) / kShots) + 1e-12;
      within += std::abs(dist[a] - p) <= tol ? 1 : 0;
      ++total;
    }
  }
  EXPECT_GE(static_cast<double>(within) / total, 0.99);
}

TEST(Dqc1Sample, RejectsZeroShots) {
  EXPECT_THROW(dqc1_sample(Dqc1Instance(Circuit(2), 1, 1), 0, 1), ValidationError);
}

TEST(BqpAcceptProb, Examples) {
  EXPECT_DOUBLE_EQ(bqp_accept_prob(BqpCircuit(Circuit(2), 0.1)), 1.0);
  EXPECT_DOUBLE_EQ(bqp_accept_prob(BqpCircuit(Circuit(2, {x(0)}), 0.1)), 0.0);
  EXPECT_NEAR(bqp_accept_prob(BqpCircuit(Circuit(2, {h(0)}), 0.1)), 0.5, 1e-15);
}

TEST(BqpAcceptProb, MatchesUnitaryOracleOnAnyOutputWire) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    CounterRng rng(32, i);
    const std::size_t wires = 1 + rng() % 6;
    const Circuit c = random_circuit(wires, 3 + rng() % 20, all_gate_kinds(), rng);
    const Wire out = rng() % wires;
    EXPECT_NEAR(bqp_accept_prob(BqpCircuit(c, 0.2, out)), oracle::accept_probability(c, out),
                1e-12);
  }
}

TEST(AllMixed, ReducedInstancesLoseTheirBias) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    CounterRng rng(33, i);
    const std::size_t n = 1 + rng() % 5;
    const BqpCircuit bqp(random_circuit(n, 2 + rng() % 15, clifford_t_kinds(), rng), 0.125);
    const auto artifact = reduce_bqp_to_dqc1(bqp);
    EXPECT_NEAR(dqc1_exact_all_mixed(artifact.instance)[0], 0.5, 1e-12);
  }
}

TEST(Bitstrings, WireZeroFirst) {
  EXPECT_EQ(outcome_bitstring(0b011, 3), "110");
  EXPECT_EQ(outcome_index("110"), 0b011u);
  EXPECT_THROW(outcome_index("1a"), ValidationError);
  EXPECT_THROW(outcome_index(""), ValidationError);
  for (std::size_t v = 0; v < 64; ++v) EXPECT_EQ(outcome_index(outcome_bitstring(v, 6)), v);
}

}  // namespace
}  // namespace dqc1
