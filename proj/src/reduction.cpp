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

#include "dqc1/reduction.hpp"

#include <cmath>
#include <numeric>

#include "dqc1/errors.hpp"

namespace dqc1 {

double predicted_p0(double q, std::size_t n) {
  const int e = static_cast<int>(n);
  return std::ldexp(q, 1 - e) + 0.5 - std::ldexp(1.0, -e);
}

double q_from_p0(double p0, std::size_t n) {
  const int e = static_cast<int>(n);
  return std::ldexp(p0 - 0.5 + std::ldexp(1.0, -e), e - 1);
}

Circuit normalize_output_wire(const BqpCircuit& bqp) {
  Circuit out = bqp.circuit();
  if (bqp.output_wire() != 0) out.append(gates::swap(0, bqp.output_wire()));
  return out;
}

ReductionArtifact reduce_bqp_to_dqc1(const BqpCircuit& bqp, const SimulatorLimits& limits) {
  const std::size_t n = bqp.width();
  if (n > limits.max_mixed_width || n + 1 > limits.max_statevector_wires) {
    throw CapExceeded("source circuit with " + std::to_string(n) +
                      " wires exceeds the reduction cap of " +
                      std::to_string(limits.max_mixed_width));
  }
  const Circuit source = normalize_output_wire(bqp);

  std::vector<Wire> register_wires(n);
  std::iota(register_wires.begin(), register_wires.end(), Wire{1});

  Circuit reduced(n + 1);
  reduced.append(build_zero_controlled_toffoli(n, 0, register_wires));
  reduced.append(relabel(source, n + 1, 1));
  reduced.append(gates::cx(1, 0));
  reduced.append(gates::x(0));

  const double q = bqp_accept_prob(bqp, limits);
  return ReductionArtifact{bqp, Dqc1Instance(std::move(reduced), n, 1), q, predicted_p0(q, n)};
}

IdentityCheck verify_identity(const BqpCircuit& bqp, const SimulatorLimits& limits) {
  const ReductionArtifact artifact = reduce_bqp_to_dqc1(bqp, limits);
  const double observed = dqc1_exact(artifact.instance, limits)[0];
  return IdentityCheck{artifact.q, artifact.predicted_p0, observed,
                       std::abs(observed - artifact.predicted_p0)};
}

}  // namespace dqc1
