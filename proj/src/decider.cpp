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

#include "dqc1/decider.hpp"

#include <algorithm>
#include <array>

#include "dqc1/reduction.hpp"

namespace dqc1 {

namespace {

AcceptProbability clamp_unit(double v) {
  if (v < 0.0) return {0.0, true};
  if (v > 1.0) return {1.0, true};
  return {v, false};
}

// Slack for comparing an affine function of a double against its bound.
constexpr double kPerSampleSlack = 1e-12;

bool respects(double value, double bound, BoundKind kind) {
  return kind == BoundKind::Lower ? value >= bound - kPerSampleSlack
                                  : value <= bound + kPerSampleSlack;
}

void finish_case(CaseReport& c) {
  c.empirical_accept_rate =
      c.trials == 0 ? 0.0 : static_cast<double>(c.accepts) / static_cast<double>(c.trials);
  if (c.trials == 0) {
    c.within_tolerance = true;
    return;
  }
  const double tol = three_sigma(c.analytic_bound, c.trials);
  c.within_tolerance = c.bound_kind == BoundKind::Lower
                           ? c.empirical_accept_rate >= c.analytic_bound - tol
                           : c.empirical_accept_rate <= c.analytic_bound + tol;
}

}  // namespace

AcceptProbability first_accept_probability(double p_prime, std::size_t n) {
  const int e = static_cast<int>(n);
  return clamp_unit(std::ldexp(p_prime - 0.5 + std::ldexp(1.0, -e), e - 1));
}

AcceptProbability second_accept_probability(double q_prime, std::size_t n) {
  const int e = static_cast<int>(n);
  return clamp_unit(std::ldexp(q_prime + std::ldexp(1.0, -e), e - 1));
}

int decide_first(const OneSidedEstimate& p_prime, std::size_t n, CounterRng& rng) {
  return rng.bernoulli(first_accept_probability(p_prime.value, n).value) ? 0 : 1;
}

int decide_second(double q_prime, std::size_t n, CounterRng& rng) {
  return rng.bernoulli(second_accept_probability(q_prime, n).value) ? 0 : 1;
}

FirstBounds bounds_first(double delta, std::size_t n, int r) {
  const int slack_bits = r - (static_cast<int>(n) - 1);
  if (slack_bits <= 0) {
    throw ValidationError("bit budget r = " + std::to_string(r) +
                          " must exceed n - 1 = " + std::to_string(n - 1));
  }
  return FirstBounds{(1.0 - delta) - std::ldexp(1.0, -slack_bits), delta};
}

SecondBounds bounds_second(double delta, double epsilon) {
  return SecondBounds{
      1.0 - delta,
      (1.0 - epsilon) * (1.0 - delta),
      delta,
      (1.0 + epsilon) * delta,
      (1.0 - epsilon) * delta + epsilon / 2.0,
  };
}

double majority_error_bound(double p, std::size_t k) {
  const double gap = p - 0.5;
  return std::exp(-2.0 * static_cast<double>(k) * gap * gap);
}

MedianEstimator::MedianEstimator(FprasEstimator base, std::size_t repetitions)
    : base_(std::move(base)), repetitions_(repetitions) {
  if (repetitions_ == 0 || repetitions_ % 2 == 0) {
    throw ValidationError("median amplification needs an odd repetition count");
  }
}

double MedianEstimator::draw(std::uint64_t call) const {
  std::vector<double> values(repetitions_);
  for (std::size_t j = 0; j < repetitions_; ++j) values[j] = base_.draw(call * repetitions_ + j);
  auto mid = values.begin() + static_cast<std::ptrdiff_t>(repetitions_ / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

MedianEstimator amplify_median(const FprasEstimator& fpras, std::size_t repetitions) {
  if (fpras.eta() > 0.25) {
    throw ValidationError("median amplification assumes eta <= 1/4, got " +
                          std::to_string(fpras.eta()));
  }
  return MedianEstimator(fpras, repetitions);
}

double median_failure_bound(double eta, std::size_t repetitions) {
  const double gap = 0.5 - eta;
  return std::exp(-2.0 * static_cast<double>(repetitions) * gap * gap);
}

double three_sigma(double p, std::uint64_t trials) {
  const double pc = std::clamp(p, 0.0, 1.0);
  return 3.0 * std::sqrt(pc * (1.0 - pc) / static_cast<double>(trials));
}

std::string to_string(Proof proof) { return proof == Proof::First ? "first" : "second"; }
std::string to_string(BoundKind kind) { return kind == BoundKind::Lower ? "lower" : "upper"; }

DeciderReport end_to_end_decide(const BqpCircuit& bqp, const DeciderConfig& config,
                                const SimulatorLimits& limits) {
  if (config.trials == 0) throw ValidationError("trials must be positive");
  const ReductionArtifact artifact = reduce_bqp_to_dqc1(bqp, limits);
  const std::size_t n = bqp.width();
  const double q = artifact.q;
  const double delta = bqp.delta();
  if (q > delta && q < 1.0 - delta) throw PromiseViolation(q, delta);

  const double p0 = dqc1_exact(artifact.instance, limits)[0];
  const double q_bias = p0 - 0.5;

  DeciderReport report;
  report.proof = config.proof;
  report.n = n;
  report.delta = delta;
  report.epsilon = config.epsilon;
  report.eta = config.eta;
  report.majority_k = config.majority_k;
  report.median_reps = config.median_reps;
  report.seed = config.seed;
  report.q = q;
  report.p0 = p0;
  report.bias = q_bias;
  report.yes_instance = q >= 1.0 - delta;
  report.bias_regime = q_bias >= 0.0 ? "nonnegative" : "negative";
  report.trials = config.trials;

  const std::uint64_t trial_seed = derive_seed(config.seed, "decider/trial");
  const std::uint64_t vote_seed = derive_seed(config.seed, "decider/vote");
  std::uint64_t accepts = 0;

  if (config.proof == Proof::First) {
    const int r = config.r > 0 ? config.r : static_cast<int>(n) + 8;
    report.r = r;
    const FirstBounds bounds = bounds_first(delta, n, r);
    const OneSidedEstimate estimate{round_to_bits(p0, r), r};
    const AcceptProbability accept = first_accept_probability(estimate.value, n);

    for (std::uint64_t t = 0; t < config.trials; ++t) {
      CounterRng rng(trial_seed, t);
      if (decide_first(estimate, n, rng) == 0) ++accepts;
    }

    CaseReport c;
    c.label = report.yes_instance ? "First-yes" : "First-no";
    c.bound_kind = report.yes_instance ? BoundKind::Lower : BoundKind::Upper;
    c.analytic_bound = report.yes_instance ? bounds.yes_lower : bounds.no_upper;
    c.trials = config.trials;
    c.accepts = accepts;
    c.per_sample_violations = respects(accept.value, c.analytic_bound, c.bound_kind) ? 0 : c.trials;
    finish_case(c);
    report.clamp_activations = accept.clamped ? config.trials : 0;
    report.cases.push_back(c);
    report.analytic_bound = c.analytic_bound;
    report.bound_kind = c.bound_kind;
    report.case_label = c.label;

    std::uint64_t vote = 0;
    report.decision = amplify_majority(
        [&] {
          CounterRng rng(vote_seed, vote++);
          return decide_first(estimate, n, rng);
        },
        config.majority_k);
  } else {
    const MedianEstimator estimator = amplify_median(
        FprasEstimator(q_bias, config.epsilon, config.eta,
                       derive_seed(config.seed, "decider/fpras")),
        config.median_reps);
    const MedianEstimator vote_estimator = amplify_median(
        FprasEstimator(q_bias, config.epsilon, config.eta,
                       derive_seed(config.seed, "decider/vote-fpras")),
        config.median_reps);
    const SecondBounds bounds = bounds_second(delta, config.epsilon);
    const double failure = median_failure_bound(config.eta, config.median_reps);
    // Bound each trial is checked against; case 4 as printed needs Q >= 0.
    const double case4_sample_bound = q_bias >= 0.0 ? bounds.case4 : bounds.case4_negative_bias;

    std::array<CaseReport, 4> cases;
    const std::array<double, 4> printed{bounds.case1, bounds.case2, bounds.case3, bounds.case4};
    const std::array<double, 4> per_sample{bounds.case1, bounds.case2, bounds.case3,
                                           case4_sample_bound};
    for (std::size_t i = 0; i < 4; ++i) {
      cases[i].label = "Second-case" + std::to_string(i + 1);
      cases[i].analytic_bound = printed[i];
      cases[i].bound_kind = i < 2 ? BoundKind::Lower : BoundKind::Upper;
    }

    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const double estimate = estimator.draw(t);
      std::size_t which = 0;
      if (report.yes_instance) {
        which = estimate >= q_bias ? 0 : 1;
      } else {
        which = estimate <= q_bias ? 2 : 3;
      }
      const AcceptProbability accept = second_accept_probability(estimate, n);
      if (accept.clamped) ++report.clamp_activations;
      CounterRng rng(trial_seed, t);
      const bool accepted = rng.bernoulli(accept.value);
      CaseReport& c = cases[which];
      ++c.trials;
      if (accepted) {
        ++c.accepts;
        ++accepts;
      }
      if (estimator.in_band(estimate) && !respects(accept.value, per_sample[which], c.bound_kind)) {
        ++c.per_sample_violations;
      }
    }
    for (auto& c : cases) {
      finish_case(c);
      report.cases.push_back(c);
    }

    if (report.yes_instance) {
      report.analytic_bound = (1.0 - failure) * bounds.case2;
      report.bound_kind = BoundKind::Lower;
      report.case_label = "Second-case2";
    } else {
      report.analytic_bound = bounds.case4 + failure;
      report.bound_kind = BoundKind::Upper;
      report.case_label = "Second-case4";
    }

    std::uint64_t vote = 0;
    report.decision = amplify_majority(
        [&] {
          const double estimate = vote_estimator.draw(vote);
          CounterRng rng(vote_seed, vote++);
          return decide_second(estimate, n, rng);
        },
        config.majority_k);
  }

  report.empirical_accept_rate = static_cast<double>(accepts) / static_cast<double>(config.trials);
  const double tol = three_sigma(report.analytic_bound, config.trials);
  report.within_tolerance = report.bound_kind == BoundKind::Lower
                                ? report.empirical_accept_rate >= report.analytic_bound - tol
                                : report.empirical_accept_rate <= report.analytic_bound + tol;
  return report;
}

}  // namespace dqc1
