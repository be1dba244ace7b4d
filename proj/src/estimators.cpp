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

#include "dqc1/estimators.hpp"

#include <cmath>
#include <string>

#include "dqc1/errors.hpp"
#include "dqc1/random.hpp"

namespace dqc1 {

double round_to_bits(double p, int bits, Rounding rounding) {
  if (bits < 1) throw ValidationError("bit budget must be at least 1");
  const double scaled = std::ldexp(p, bits);
  const double rounded = rounding == Rounding::Down ? std::floor(scaled) : std::ceil(scaled);
  return std::ldexp(rounded, -bits);
}

OneSidedEstimate exact_rounded(const Dqc1Instance& instance, std::size_t outcome, int bits,
                               const SimulatorLimits& limits) {
  if (bits < 1) throw ValidationError("bit budget must be at least 1");
  const OutputDistribution dist = dqc1_exact(instance, limits);
  return OneSidedEstimate{round_to_bits(dist[outcome], bits), bits};
}

double bias(const OutputDistribution& dist, std::size_t outcome) { return dist[outcome] - 0.5; }

FprasEstimator::FprasEstimator(double bias, double epsilon, double eta, std::uint64_t seed)
    : bias_(bias), epsilon_(epsilon), eta_(eta), seed_(seed) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ValidationError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw ValidationError("eta must lie in [0, 1/2), got " + std::to_string(eta));
  }
}

FprasEstimator FprasEstimator::for_instance(const Dqc1Instance& instance, std::size_t outcome,
                                            double epsilon, double eta, std::uint64_t seed,
                                            const SimulatorLimits& limits) {
  return FprasEstimator(dqc1::bias(dqc1_exact(instance, limits), outcome), epsilon, eta, seed);
}

double FprasEstimator::draw(std::uint64_t call) const {
  CounterRng rng(seed_, call);
  if (rng.uniform() < eta_) {
    const double sign = (rng() & 1U) ? 1.0 : -1.0;
    return bias_ * (1.0 + sign * kAdversarialScale * epsilon_);
  }
  const double u = (2.0 * rng.uniform() - 1.0) * epsilon_;
  return bias_ * (1.0 + u);
}

bool FprasEstimator::in_band(double estimate) const {
  return std::abs(bias_ - estimate) <= epsilon_ * std::abs(bias_);
}

double mock_fpras(const Dqc1Instance& instance, std::size_t outcome, double epsilon, double eta,
                  std::uint64_t seed, const SimulatorLimits& limits) {
  return FprasEstimator::for_instance(instance, outcome, epsilon, eta, seed, limits).draw(0);
}

double additive_mc(const Dqc1Instance& instance, std::size_t outcome, std::uint64_t shots,
                   std::uint64_t seed, const SimulatorLimits& limits) {
  return dqc1_sample(instance, shots, seed, limits)[outcome];
}

}  // namespace dqc1
