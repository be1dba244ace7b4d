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

#include "dqc1/simulator.hpp"

#include <algorithm>
#include <mutex>

#include "dqc1/errors.hpp"
#include "dqc1/random.hpp"
#include "parallel.hpp"

namespace dqc1 {

namespace {

// Upper bound on (number of blocks) x (number of outcomes) kept in memory for
// the blocked reduction.
constexpr std::uint64_t kPartialBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kMinBlock = 64;

void check_statevector_cap(std::size_t wires, const SimulatorLimits& limits) {
  if (wires > limits.max_statevector_wires) {
    throw CapExceeded("state vector on " + std::to_string(wires) + " wires exceeds cap of " +
                      std::to_string(limits.max_statevector_wires));
  }
}

void check_mixed_cap(const Dqc1Instance& instance, const SimulatorLimits& limits) {
  if (instance.mixed_width() > limits.max_mixed_width) {
    throw CapExceeded("mixed width " + std::to_string(instance.mixed_width()) +
                      " exceeds enumeration cap of " + std::to_string(limits.max_mixed_width));
  }
  check_statevector_cap(instance.circuit().wires(), limits);
}

void marginalize(const StateVectorXd& psi, std::size_t measured_width, std::vector<double>& out) {
  const std::uint64_t mask = (std::uint64_t{1} << measured_width) - 1;
  std::fill(out.begin(), out.end(), 0.0);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    out[static_cast<std::uint64_t>(i) & mask] += std::norm(psi[i]);
  }
}

// Average of branch_distribution over `inputs` basis inputs, where input x is
// mapped to a basis index by `to_index`. Blocks are fixed by (inputs,
// outcomes) alone so any thread count gives the same bits.
template <typename ToIndex>
std::vector<double> average_branches(const Circuit& circuit, std::size_t measured_width,
                                     std::uint64_t inputs, ToIndex to_index,
                                     const SimulatorLimits& limits) {
  const std::uint64_t outcomes = std::uint64_t{1} << measured_width;
  std::uint64_t block = kMinBlock;
  while ((inputs + block - 1) / block * outcomes > kPartialBudget) block *= 2;
  const std::uint64_t blocks = (inputs + block - 1) / block;

  std::vector<std::vector<double>> partial(blocks);
  detail::parallel_for(blocks, limits.threads, [&](std::size_t b) {
    std::vector<detail::CompensatedSum> acc(outcomes);
    std::vector<double> probs(outcomes);
    const std::uint64_t end = std::min(inputs, (b + 1) * block);
    for (std::uint64_t x = b * block; x < end; ++x) {
      StateVectorXd psi = basis_state<double>(circuit.wires(), to_index(x));
      apply_circuit(psi, circuit);
      marginalize(psi, measured_width, probs);
      for (std::uint64_t a = 0; a < outcomes; ++a) acc[a].add(probs[a]);
    }
    partial[b].resize(outcomes);
    for (std::uint64_t a = 0; a < outcomes; ++a) partial[b][a] = acc[a].value();
  });

  std::vector<double> result(outcomes);
  for (std::uint64_t a = 0; a < outcomes; ++a) {
    detail::CompensatedSum total;
    for (std::uint64_t b = 0; b < blocks; ++b) total.add(partial[b][a]);
    result[a] = total.value() / static_cast<double>(inputs);
  }
  return result;
}

std::size_t sample_outcome(const std::vector<double>& probs, double u) {
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    if (probs[a] <= 0.0) continue;
    last_nonzero = a;
    cumulative += probs[a];
    if (u < cumulative) return a;
  }
  return last_nonzero;
}

}  // namespace

std::string outcome_bitstring(std::size_t outcome, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if ((outcome >> k) & 1U) out[k] = '1';
  }
  return out;
}

std::size_t outcome_index(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) {
    throw ValidationError("bitstring must have between 1 and 63 characters");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      index |= std::size_t{1} << k;
    } else if (bits[k] != '0') {
      throw ValidationError("bitstring '" + std::string(bits) + "' is not binary");
    }
  }
  return index;
}

StateVectorXd run_statevector(const Circuit& circuit, std::uint64_t basis_index,
                              const SimulatorLimits& limits) {
  check_statevector_cap(circuit.wires(), limits);
  if (basis_index >= dimension(circuit.wires())) {
    throw ValidationError("basis index " + std::to_string(basis_index) + " out of range");
  }
  StateVectorXd psi = basis_state<double>(circuit.wires(), basis_index);
  apply_circuit(psi, circuit);
  return psi;
}

StateVectorXd run_statevector(const Circuit& circuit, std::string_view basis_input,
                              const SimulatorLimits& limits) {
  if (basis_input.size() != circuit.wires()) {
    throw ValidationError("basis input has " + std::to_string(basis_input.size()) +
                          " bits, circuit has " + std::to_string(circuit.wires()) + " wires");
  }
  return run_statevector(circuit, outcome_index(basis_input), limits);
}

std::vector<double> branch_distribution(const Circuit& circuit, std::size_t measured_width,
                                        std::uint64_t basis_index,
                                        const SimulatorLimits& limits) {
  if (measured_width < 1 || measured_width > circuit.wires()) {
    throw ValidationError("measured width out of range");
  }
  const StateVectorXd psi = run_statevector(circuit, basis_index, limits);
  std::vector<double> probs(std::size_t{1} << measured_width);
  marginalize(psi, measured_width, probs);
  return probs;
}

OutputDistribution dqc1_exact(const Dqc1Instance& instance, const SimulatorLimits& limits) {
  check_mixed_cap(instance, limits);
  OutputDistribution dist;
  dist.measured_width = instance.measured_width();
  dist.kind = DistributionKind::Exact;
  dist.probabilities =
      average_branches(instance.circuit(), instance.measured_width(),
                       std::uint64_t{1} << instance.mixed_width(),
                       [](std::uint64_t x) { return mixed_input_index(x); }, limits);
  return dist;
}

OutputDistribution dqc1_exact_all_mixed(const Dqc1Instance& instance,
                                        const SimulatorLimits& limits) {
  check_mixed_cap(instance, limits);
  OutputDistribution dist;
  dist.measured_width = instance.measured_width();
  dist.kind = DistributionKind::Exact;
  dist.probabilities =
      average_branches(instance.circuit(), instance.measured_width(),
                       dimension(instance.circuit().wires()),
                       [](std::uint64_t x) { return x; }, limits);
  return dist;
}

DensityMatrixXd dqc1_density_matrix(const Dqc1Instance& instance,
                                    const SimulatorLimits& limits) {
  const Circuit& circuit = instance.circuit();
  if (circuit.wires() > limits.max_density_wires) {
    throw CapExceeded("density matrix on " + std::to_string(circuit.wires()) +
                      " wires exceeds cap of " + std::to_string(limits.max_density_wires));
  }
  const std::size_t dim = dimension(circuit.wires());

  // |0><0| on the clean wire, I/2^n on the rest.
  DensityMatrixXd rho = DensityMatrixXd::Zero(dim, dim);
  const double weight = 1.0 / static_cast<double>(dimension(instance.mixed_width()));
  for (std::size_t i = 0; i < dim; i += 2) rho(i, i) = weight;

  for (const auto& gate : circuit.gates()) {
    const OperatorXd u = gate_operator<double>(gate, circuit.wires());
    rho = (u * rho * u.adjoint()).eval();
  }
  return rho;
}

OutputDistribution dqc1_density(const Dqc1Instance& instance, const SimulatorLimits& limits) {
  const DensityMatrixXd rho = dqc1_density_matrix(instance, limits);
  OutputDistribution dist;
  dist.measured_width = instance.measured_width();
  dist.kind = DistributionKind::Exact;
  dist.probabilities.assign(std::size_t{1} << instance.measured_width(), 0.0);
  const std::size_t mask = dist.probabilities.size() - 1;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    dist.probabilities[static_cast<std::size_t>(i) & mask] += rho(i, i).real();
  }
  return dist;
}

OutputDistribution dqc1_sample(const Dqc1Instance& instance, std::uint64_t shots,
                               std::uint64_t seed, const SimulatorLimits& limits) {
  if (shots == 0) throw ValidationError("shots must be positive");
  check_mixed_cap(instance, limits);
  const Circuit& circuit = instance.circuit();
  const std::size_t n = instance.mixed_width();
  const std::size_t m = instance.measured_width();
  const std::uint64_t inputs = std::uint64_t{1} << n;
  const std::uint64_t outcomes = std::uint64_t{1} << m;

  // Branch distributions are pure functions of x, so caching them does not
  // change which outcome a given shot produces.
  std::vector<std::vector<double>> table;
  if (inputs * outcomes <= limits.sample_table_entries) {
    table.resize(inputs);
    detail::parallel_for(inputs, limits.threads, [&](std::size_t x) {
      table[x] = branch_distribution(circuit, m, mixed_input_index(x), limits);
    });
  }

  const unsigned workers = detail::resolve_threads(limits.threads);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, (shots + workers - 1) / workers);
  const std::uint64_t chunks = (shots + chunk - 1) / chunk;
  std::vector<std::uint64_t> counts(outcomes, 0);
  std::mutex merge;
  detail::parallel_for(chunks, limits.threads, [&](std::size_t c) {
    std::vector<std::uint64_t> local(outcomes, 0);
    const std::uint64_t end = std::min(shots, (c + 1) * chunk);
    for (std::uint64_t shot = c * chunk; shot < end; ++shot) {
      CounterRng rng(seed, shot);
      const std::uint64_t x = n == 0 ? 0 : rng() >> (64 - n);
      const double u = rng.uniform();
      if (table.empty()) {
        ++local[sample_outcome(branch_distribution(circuit, m, mixed_input_index(x), limits), u)];
      } else {
        ++local[sample_outcome(table[x], u)];
      }
    }
    std::lock_guard lock(merge);
    for (std::uint64_t a = 0; a < outcomes; ++a) counts[a] += local[a];
  });

  OutputDistribution dist;
  dist.measured_width = m;
  dist.kind = DistributionKind::Empirical;
  dist.shots = shots;
  dist.seed = seed;
  dist.counts = counts;
  dist.probabilities.resize(outcomes);
  for (std::uint64_t a = 0; a < outcomes; ++a) {
    dist.probabilities[a] = static_cast<double>(counts[a]) / static_cast<double>(shots);
  }
  return dist;
}

double bqp_accept_prob(const BqpCircuit& bqp, const SimulatorLimits& limits) {
  const StateVectorXd psi = run_statevector(bqp.circuit(), 0, limits);
  const std::uint64_t out = std::uint64_t{1} << bqp.output_wire();
  detail::CompensatedSum q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (!(static_cast<std::uint64_t>(i) & out)) q.add(std::norm(psi[i]));
  }
  return q.value();
}

}  // namespace dqc1
