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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/errors.hpp"
#include "dqc1/estimators.hpp"
#include "dqc1/random.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1 {

/// An acceptance probability after clamping to [0, 1].
struct AcceptProbability {
  double value;
  bool clamped;
};

/// clamp(2^(n-1) (P'(0) - 1/2 + 1/2^n), 0, 1).
AcceptProbability first_accept_probability(double p_prime, std::size_t n);
/// clamp(2^(n-1) (Q'(0) + 1/2^n), 0, 1).
AcceptProbability second_accept_probability(double q_prime, std::size_t n);

/// Single-shot deciders. Return the output bit o; o = 0 means accept.
int decide_first(const OneSidedEstimate& p_prime, std::size_t n, CounterRng& rng);
int decide_second(double q_prime, std::size_t n, CounterRng& rng);

struct FirstBounds {
  double yes_lower;  // (1 - delta) - 2^-(r - (n - 1))
  double no_upper;   // delta
};

/// Throws ValidationError when r <= n - 1, where the yes-case bound is vacuous.
FirstBounds bounds_first(double delta, std::size_t n, int r);

/// Final line of each case of the relative-error argument. Cases 1 and 2 are
/// lower bounds for yes instances, 3 and 4 upper bounds for no instances.
/// Case 4 as printed assumes Q >= 0; `case4_negative_bias` is the same chain
/// redone for Q < 0 (there Q' <= (1 - eps) Q), which is the regime every
/// reduced no instance lives in.
struct SecondBounds {
  double case1;                // 1 - delta
  double case2;                // (1 - eps)(1 - delta)
  double case3;                // delta
  double case4;                // (1 + eps) delta
  double case4_negative_bias;  // (1 - eps) delta + eps / 2
};

SecondBounds bounds_second(double delta, double epsilon);

/// Hoeffding bound on the majority-vote error, exp(-2k(p - 1/2)^2).
double majority_error_bound(double p, std::size_t k);

/// Majority of k calls to `sample` (each returning 0 or 1). k must be odd.
template <typename Sampler>
int amplify_majority(Sampler&& sample, std::size_t k) {
  if (k % 2 == 0) throw ValidationError("majority vote needs an odd number of samples");
  std::size_t ones = 0;
  for (std::size_t i = 0; i < k; ++i) ones += sample() != 0 ? 1 : 0;
  return 2 * ones > k ? 1 : 0;
}

/// Median of `repetitions` independent FprasEstimator calls. Call i of the
/// amplified estimator uses base calls i*repetitions .. i*repetitions + reps-1,
/// so one repetition reproduces the base estimator exactly.
class MedianEstimator {
 public:
  MedianEstimator(FprasEstimator base, std::size_t repetitions);

  const FprasEstimator& base() const { return base_; }
  std::size_t repetitions() const { return repetitions_; }

  double draw(std::uint64_t call) const;
  bool in_band(double estimate) const { return base_.in_band(estimate); }

 private:
  FprasEstimator base_;
  std::size_t repetitions_;
};

/// Requires eta <= 1/4 and an odd repetition count.
MedianEstimator amplify_median(const FprasEstimator& fpras, std::size_t repetitions);

/// Hoeffding bound on the median falling outside the band,
/// exp(-2 reps (1/2 - eta)^2).
double median_failure_bound(double eta, std::size_t repetitions);

// End-to-end decision ---------------------------------------------------------

enum class Proof { First, Second };
enum class BoundKind { Lower, Upper };

struct DeciderConfig {
  Proof proof = Proof::First;
  double delta = 0.125;
  double epsilon = 0.25;
  double eta = 0.25;
  int r = 0;  // 0 selects n + 8
  std::uint64_t trials = 100000;
  std::size_t majority_k = 101;
  std::size_t median_reps = 55;
  std::uint64_t seed = 0;
};

/// Single-shot acceptance statistics for one case of an argument.
struct CaseReport {
  std::string label;  // First-yes, First-no, Second-case1 .. Second-case4
  std::uint64_t trials = 0;
  std::uint64_t accepts = 0;
  double empirical_accept_rate = 0.0;
  double analytic_bound = 0.0;
  BoundKind bound_kind = BoundKind::Lower;
  bool within_tolerance = true;  // rate vs bound at 3 sigma
  // Trials inside the estimator's success event whose accept probability broke
  // the bound. Zero for a correct decider.
  std::uint64_t per_sample_violations = 0;
};

struct DeciderReport {
  Proof proof = Proof::First;
  std::size_t n = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  int r = 0;
  std::size_t majority_k = 0;
  std::size_t median_reps = 0;
  std::uint64_t seed = 0;

  double q = 0.0;
  double p0 = 0.0;
  double bias = 0.0;
  bool yes_instance = false;
  std::string bias_regime;  // "nonnegative" or "negative"

  std::uint64_t trials = 0;
  double empirical_accept_rate = 0.0;
  double analytic_bound = 0.0;
  BoundKind bound_kind = BoundKind::Lower;
  std::string case_label;
  bool within_tolerance = true;
  std::uint64_t clamp_activations = 0;
  std::vector<CaseReport> cases;

  int decision = 0;  // amplified output bit
};

/// 3-sigma binomial tolerance around a bound at the given trial count.
double three_sigma(double p, std::uint64_t trials);

/// Reduce, estimate, decide and amplify. Throws PromiseViolation when
/// q lies strictly between delta and 1 - delta.
DeciderReport end_to_end_decide(const BqpCircuit& bqp, const DeciderConfig& config,
                                const SimulatorLimits& limits = {});

std::string to_string(Proof proof);
std::string to_string(BoundKind kind);

}  // namespace dqc1
