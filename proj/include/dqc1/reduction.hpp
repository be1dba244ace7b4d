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

#include "dqc1/circuit.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1 {

/// A BQP circuit compiled into a one-clean-qubit instance.
///
/// Wire 0 of `instance` is the clean qubit, wires 1..n carry the source
/// register. The circuit is
///
///   mcx0(1..n -> 0);  V on wires 1..n;  cx(1 -> 0);  x(0)
///
/// and measuring wire 0 gives P(0) = q / 2^(n-1) + 1/2 - 1/2^n. Conditioned on
/// the mixed register holding x, wire 0 reads 0 with probability q when x = 0
/// and 1 - f(x) otherwise, with f(x) the acceptance probability of V on |x>;
/// the f(x) sum to 2^(n-1).
struct ReductionArtifact {
  BqpCircuit source;
  Dqc1Instance instance;
  double q;
  double predicted_p0;
};

/// q / 2^(n-1) + 1/2 - 1/2^n. Increasing in q, ranging over
/// [1/2 - 1/2^n, 1/2 + 1/2^n] for q in [0, 1].
double predicted_p0(double q, std::size_t n);

/// Inverse of predicted_p0: q = 2^(n-1) (p0 - 1/2 + 1/2^n).
double q_from_p0(double p0, std::size_t n);

/// The source circuit with its output moved to wire 0 (a trailing SWAP when
/// the output wire is elsewhere).
Circuit normalize_output_wire(const BqpCircuit& bqp);

ReductionArtifact reduce_bqp_to_dqc1(const BqpCircuit& bqp, const SimulatorLimits& limits = {});

struct IdentityCheck {
  double q;
  double predicted_p0;
  double observed_p0;
  double residual;  // |observed_p0 - predicted_p0|
};

/// Reduces `bqp`, simulates the instance exactly and compares P(0) against
/// predicted_p0(q, n).
IdentityCheck verify_identity(const BqpCircuit& bqp, const SimulatorLimits& limits = {});

}  // namespace dqc1
