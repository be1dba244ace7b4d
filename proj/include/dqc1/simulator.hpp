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
#include <string>
#include <string_view>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/linalg.hpp"

namespace dqc1 {

/// Feasibility guards for the exponential-cost routines.
struct SimulatorLimits {
  std::size_t max_mixed_width = 20;        // enumeration over 2^n inputs
  std::size_t max_density_wires = 8;       // dense 4^wires density matrix
  std::size_t max_statevector_wires = 26;  // single state-vector run
  std::size_t sample_table_entries = std::size_t{1} << 22;  // sampler's branch cache
  unsigned threads = 0;                    // 0 picks hardware concurrency
};

enum class DistributionKind { Exact, Empirical };

/// Probabilities of the 2^m readouts of the measured prefix. Outcome index bit
/// k is the value read on wire k.
struct OutputDistribution {
  std::size_t measured_width = 1;
  DistributionKind kind = DistributionKind::Exact;
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;  // empirical only
  std::uint64_t shots = 0;            // empirical only
  std::uint64_t seed = 0;             // empirical only

  double operator[](std::size_t outcome) const { return probabilities.at(outcome); }
  std::size_t outcomes() const { return probabilities.size(); }
};

/// Outcome index as a bitstring, character k = wire k.
std::string outcome_bitstring(std::size_t outcome, std::size_t width);
/// Inverse of outcome_bitstring. Throws ValidationError on non-binary input.
std::size_t outcome_index(std::string_view bits);

/// Runs the circuit on a computational basis state.
StateVectorXd run_statevector(const Circuit& circuit, std::uint64_t basis_index,
                              const SimulatorLimits& limits = {});
/// `basis_input` lists wire values, character k = wire k.
StateVectorXd run_statevector(const Circuit& circuit, std::string_view basis_input,
                              const SimulatorLimits& limits = {});

/// Readout distribution of wires 0..m-1 after running on one basis input.
std::vector<double> branch_distribution(const Circuit& circuit, std::size_t measured_width,
                                        std::uint64_t basis_index,
                                        const SimulatorLimits& limits = {});

/// Basis index of the instance input with the clean qubit at 0 and the mixed
/// register holding `x` (bit j of x on wire j + 1).
constexpr std::uint64_t mixed_input_index(std::uint64_t x) { return x << 1; }

/// Exact output distribution by averaging the 2^n mixed-register branches.
/// Blocked compensated summation in ascending x; the result does not depend on
/// the thread count.
OutputDistribution dqc1_exact(const Dqc1Instance& instance, const SimulatorLimits& limits = {});

/// Final density matrix of the instance, evolved gate by gate as U rho U^dag
/// with explicit gate operators.
DensityMatrixXd dqc1_density_matrix(const Dqc1Instance& instance,
                                    const SimulatorLimits& limits = {});

/// Exact output distribution from the diagonal of dqc1_density_matrix.
OutputDistribution dqc1_density(const Dqc1Instance& instance, const SimulatorLimits& limits = {});

/// Shot sampling: each shot draws x uniformly, runs the branch and samples the
/// measured prefix. Shot i uses CounterRng(seed, i).
OutputDistribution dqc1_sample(const Dqc1Instance& instance, std::uint64_t shots,
                               std::uint64_t seed, const SimulatorLimits& limits = {});

/// Same as dqc1_exact but with the clean qubit replaced by a maximally mixed one.
OutputDistribution dqc1_exact_all_mixed(const Dqc1Instance& instance,
                                        const SimulatorLimits& limits = {});

/// q = <0^n| V^dag (|0><0|_out (x) I) V |0^n>.
double bqp_accept_prob(const BqpCircuit& bqp, const SimulatorLimits& limits = {});

}  // namespace dqc1
