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

TEST(PredictedP0, Values) {
  EXPECT_DOUBLE_EQ(predicted_p0(1.0, 3), 0.625);
  EXPECT_DOUBLE_EQ(predicted_p0(0.0, 3), 0.375);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_DOUBLE_EQ(predicted_p0(0.5, n), 0.5);
}

TEST(PredictedP0, MonotoneWithinRangeAndInvertible) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const double lo = 0.5 - std::ldexp(1.0, -static_cast<int>(n));
    const double hi = 0.5 + std::ldexp(1.0, -static_cast<int>(n));
    double previous = -1.0;
    for (int k = 0; k <= 64; ++k) {
      const double q = k / 64.0;
      const double p = predicted_p0(q, n);
      EXPECT_GT(p, previous);
      EXPECT_GE(p, lo);
      EXPECT_LE(p, hi);
      EXPECT_NEAR(q_from_p0(p, n), q, 1e-12);
      previous = p;
    }
  }
}

TEST(Reduce, Examples) {
  EXPECT_DOUBLE_EQ(reduce_bqp_to_dqc1(BqpCircuit(Circuit(2), 0.125)).predicted_p0, 0.75);
  EXPECT_DOUBLE_EQ(reduce_bqp_to_dqc1(BqpCircuit(Circuit(2, {x(0)}), 0.125)).predicted_p0, 0.25);
  EXPECT_NEAR(reduce_bqp_to_dqc1(BqpCircuit(Circuit(1, {h(0)}), 0.125)).predicted_p0, 0.5, 1e-15);
}

TEST(Reduce, CanonicalLayout) {
  const Circuit source(3, {h(0), cx(0, 2), t(1)});
  const auto artifact = reduce_bqp_to_dqc1(BqpCircuit(source, 0.125));
  const Dqc1Instance& inst = artifact.instance;
  EXPECT_EQ(inst.mixed_width(), 3u);
  EXPECT_EQ(inst.measured_width(), 1u);
  const Circuit expected(4, {mcx0({1, 2, 3}, 0), h(1), cx(1, 3), t(2), cx(1, 0), x(0)});
  EXPECT_EQ(inst.circuit(), expected);
  EXPECT_EQ(inst.circuit().size(), source.size() + 3);
}

TEST(Reduce, OutputWireIsNormalizedWithSwap) {
  const Circuit source(3, {h(2), t(2), h(2), cx(0, 1)});
  const BqpCircuit bqp(source, 0.125, 2);
  const Circuit normalized = normalize_output_wire(bqp);
  EXPECT_EQ(normalized.gates().back(), swap(0, 2));
  const auto check = verify_identity(bqp);
  EXPECT_NEAR(check.q, oracle::accept_probability(source, 2), 1e-12);
  EXPECT_LE(check.residual, 1e-10);
}

TEST(VerifyIdentity, IdentityCircuit) {
  const auto check = verify_identity(BqpCircuit(Circuit(2), 0.125));
  EXPECT_DOUBLE_EQ(check.q, 1.0);
  EXPECT_NEAR(check.observed_p0, 0.75, 1e-12);
  EXPECT_LE(check.residual, 1e-12);
}

TEST(VerifyIdentity, BellPair) {
  const auto check = verify_identity(BqpCircuit(Circuit(2, {h(0), cx(0, 1)}), 0.125));
  EXPECT_NEAR(check.q, 0.5, 1e-15);
  EXPECT_NEAR(check.predicted_p0, 0.5, 1e-15);
  EXPECT_NEAR(check.observed_p0, 0.5, 1e-12);
}

TEST(VerifyIdentity, RandomCliffordTAgainstUnitaryOracle) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    CounterRng rng(41, i);
    const std::size_t n = 1 + rng() % 5;
    const BqpCircuit bqp(random_circuit(n, 3 + rng() % 20, clifford_t_kinds(), rng), 0.125);
    const auto check = verify_identity(bqp);
    worst = std::max(worst, check.residual);
    // Both sides against the brute-force unitary.
    const double q = oracle::accept_probability(bqp.circuit(), 0);
    const double p0 = oracle::dqc1_probabilities(reduce_bqp_to_dqc1(bqp).instance)[0];
    EXPECT_NEAR(check.q, q, 1e-12);
    EXPECT_NEAR(check.observed_p0, p0, 1e-12);
    EXPECT_NEAR(p0, q / std::ldexp(1.0, static_cast<int>(n) - 1) + 0.5 -
                        std::ldexp(1.0, -static_cast<int>(n)),
                1e-12);
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(VerifyIdentity, AffineLinkAndSign) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    CounterRng rng(42, i);
    const std::size_t n = 1 + rng() % 5;
    const BqpCircuit bqp(random_circuit(n, 3 + rng() % 15, all_gate_kinds(), rng), 0.125);
    const auto check = verify_identity(bqp);
    const double gap = check.observed_p0 - 0.5;
    const double expected = (2.0 * check.q - 1.0) / std::ldexp(1.0, static_cast<int>(n));
    EXPECT_NEAR(gap, expected, 1e-12);
    if (std::abs(check.q - 0.5) > 1e-9) {
      EXPECT_EQ(gap > 0.0, check.q > 0.5);
    }
  }
}

TEST(Reduce, PerBranchAcceptance) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    CounterRng rng(43, i);
    const std::size_t n = 1 + rng() % 4;
    const BqpCircuit bqp(random_circuit(n, 3 + rng() % 15, all_gate_kinds(), rng), 0.125);
    const auto artifact = reduce_bqp_to_dqc1(bqp);
    double f_total = 0.0;
    for (std::uint64_t x = 0; x < dimension(n); ++x) {
      const double f = oracle::branch_acceptance(bqp.circuit(), x);
      f_total += f;
      const double accept =
          branch_distribution(artifact.instance.circuit(), 1, mixed_input_index(x))[0];
      EXPECT_NEAR(accept, x == 0 ? artifact.q : 1.0 - f, 1e-12) << "x = " << x;
    }
    EXPECT_NEAR(f_total, std::ldexp(1.0, static_cast<int>(n) - 1), 1e-10);
  }
}

TEST(Reduce, CapExceeded) {
  SimulatorLimits limits;
  limits.max_mixed_width = 3;
  EXPECT_THROW(reduce_bqp_to_dqc1(BqpCircuit(Circuit(4), 0.125), limits), CapExceeded);
  EXPECT_THROW(verify_identity(BqpCircuit(Circuit(4), 0.125), limits), CapExceeded);
}

}  // namespace
}  // namespace dqc1
