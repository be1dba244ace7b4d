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

#include "dqc1/circuit.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1 {

/// P'(a) with 0 <= P(a) - P'(a) <= 2^-bits.
struct OneSidedEstimate {
  double value;
  int bits;
};

enum class Rounding { Down, Up };

/// p rounded to a multiple of 2^-bits. Only Rounding::Down yields a one-sided
/// estimate; Rounding::Up exists so the self-test can inject a fault.
double round_to_bits(double p, int bits, Rounding rounding = Rounding::Down);

/// floor(P(a) 2^r) / 2^r from the exact enumeration backend.
OneSidedEstimate exact_rounded(const Dqc1Instance& instance, std::size_t outcome, int bits,
                               const SimulatorLimits& limits = {});

/// Q(a) = P(a) - 1/2.
double bias(const OutputDistribution& dist, std::size_t outcome);

/// Stand-in for a relative-error approximation scheme for Q(a).
///
/// Call i succeeds with probability 1 - eta and returns Q (1 + u) with u
/// uniform in [-epsilon, epsilon]; otherwise it returns Q (1 +- 10 epsilon)
/// with a random sign. Calls are keyed by (seed, i) and reproducible.
class FprasEstimator {
 public:
  static constexpr double kAdversarialScale = 10.0;

  FprasEstimator(double bias, double epsilon, double eta, std::uint64_t seed);

  static FprasEstimator for_instance(const Dqc1Instance& instance, std::size_t outcome,
                                     double epsilon, double eta, std::uint64_t seed,
                                     const SimulatorLimits& limits = {});

  double bias() const { return bias_; }
  double epsilon() const { return epsilon_; }
  double eta() const { return eta_; }
  std::uint64_t seed() const { return seed_; }

  double draw(std::uint64_t call) const;

  /// |Q - estimate| <= epsilon |Q|.
  bool in_band(double estimate) const;

 private:
  double bias_;
  double epsilon_;
  double eta_;
  std::uint64_t seed_;
};

/// First call of FprasEstimator::for_instance(...).
double mock_fpras(const Dqc1Instance& instance, std::size_t outcome, double epsilon, double eta,
                  std::uint64_t seed, const SimulatorLimits& limits = {});

/// Empirical frequency of `outcome` over `shots` sampled runs. Its error is
/// additive, O(1/sqrt(shots)), so on reduced instances where |Q| ~ 2^-n it
/// does not give a relative approximation of Q without exponentially many
/// shots.
double additive_mc(const Dqc1Instance& instance, std::size_t outcome, std::uint64_t shots,
                   std::uint64_t seed, const SimulatorLimits& limits = {});

}  // namespace dqc1
