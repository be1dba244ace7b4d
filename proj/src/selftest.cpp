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

#include "dqc1/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "dqc1/decider.hpp"
#include "dqc1/estimators.hpp"
#include "dqc1/random.hpp"
#include "dqc1/random_circuit.hpp"
#include "dqc1/reduction.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1::selftest {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pick(Scale scale, std::uint64_t quick, std::uint64_t normal, std::uint64_t full) {
  switch (scale) {
    case Scale::Quick: return quick;
    case Scale::Default: return normal;
    case Scale::Full: return full;
  }
  return full;
}

// Gates of a single-qubit H/T word, applied left to right.
void append_word(Circuit& circuit, std::string_view word, Wire wire) {
  for (char c : word) circuit.append(c == 'H' ? gates::h(wire) : gates::t(wire));
}

// Entangling gates on wires 1 and 2 that leave wire 0's marginal alone.
void append_dressing(Circuit& circuit) {
  circuit.append(gates::h(1));
  circuit.append(gates::cx(0, 2));
  circuit.append(gates::cx(1, 2));
  circuit.append(gates::t(2));
}

CheckResult timed(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult result;
  result.id = id;
  result.name = std::move(name);
  std::ostringstream detail;
  detail.precision(6);
  const auto start = Clock::now();
  result.passed = body(detail);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.detail = detail.str();
  return result;
}

}  // namespace

std::vector<NamedBqp> promise_instances(double delta) {
  std::vector<NamedBqp> out;

  out.push_back({"identity", BqpCircuit(Circuit(3), delta)});

  Circuit yes_word(3);
  append_word(yes_word, "HTHTHTHTTTHTH", 0);
  append_dressing(yes_word);
  out.push_back({"ht-word-yes", BqpCircuit(yes_word, delta)});

  Circuit flip(3);
  flip.append(gates::x(0));
  out.push_back({"x", BqpCircuit(flip, delta)});

  Circuit no_word(3);
  append_word(no_word, "HTHTHTTTH", 0);
  append_dressing(no_word);
  out.push_back({"ht-word-no", BqpCircuit(no_word, delta)});

  return out;
}

// 1. P(0) of every reduced instance equals q / 2^(n-1) + 1/2 - 1/2^n.
CheckResult identity_reproduction(const Options& options) {
  return timed(1, "identity reproduction", [&](std::ostringstream& detail) {
    constexpr double kTolerance = 1e-10;
    constexpr double kTimeLimit = 10.0;
    const std::uint64_t circuits = pick(options.scale, 20, 100, 100);
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::uint64_t i = 0; i < circuits; ++i) {
      CounterRng rng(derive_seed(options.seed, "identity"), i);
      const std::size_t n = 1 + rng() % 5;
      const std::size_t gate_count = 4 + rng() % 17;
      BqpCircuit bqp(random_circuit(n, gate_count, clifford_t_kinds(), rng), 0.125);
      worst = std::max(worst, verify_identity(bqp).residual);
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    detail << circuits << " circuits, max residual " << worst << " (tol " << kTolerance
           << "), " << elapsed << " s (limit " << kTimeLimit << " s)";
    return worst <= kTolerance && elapsed < kTimeLimit;
  });
}

// 2. Enumeration and density-matrix backends agree on DQC1_m instances.
CheckResult backend_equivalence(const Options& options) {
  return timed(2, "backend equivalence", [&](std::ostringstream& detail) {
    constexpr double kTolerance = 1e-10;
    const std::uint64_t instances = pick(options.scale, 10, 50, 50);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < instances; ++i) {
      CounterRng rng(derive_seed(options.seed, "backends"), i);
      const std::size_t m = 1 + rng() % 3;
      const std::size_t wires = std::max<std::size_t>(m, 2) + rng() % (7 - std::max<std::size_t>(m, 2));
      const Dqc1Instance instance(random_circuit(wires, 6 + rng() % 20, all_gate_kinds(), rng),
                                  wires - 1, m);
      const auto exact = dqc1_exact(instance);
      const auto density = dqc1_density(instance);
      for (std::size_t a = 0; a < exact.outcomes(); ++a) {
        worst = std::max(worst, std::abs(exact[a] - density[a]));
      }
    }
    detail << instances << " instances, max deviation " << worst << " (tol " << kTolerance << ")";
    return worst <= kTolerance;
  });
}

// 3. 0 <= P - P' <= 2^-r with no tolerance.
CheckResult one_sided_estimator(const Options& options) {
  return timed(3, "one-sided estimator", [&](std::ostringstream& detail) {
    const std::uint64_t instances = pick(options.scale, 10, 50, 50);
    const Rounding rounding = options.inject_rounding_fault ? Rounding::Up : Rounding::Down;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < instances; ++i) {
      CounterRng rng(derive_seed(options.seed, "one-sided"), i);
      const std::size_t wires = 2 + rng() % 4;
      const Dqc1Instance instance(random_circuit(wires, 5 + rng() % 15, all_gate_kinds(), rng),
                                  wires - 1, 1);
      const auto dist = dqc1_exact(instance);
      for (int r : {4, 10, 20}) {
        for (std::size_t a = 0; a < dist.outcomes(); ++a) {
          const double p = dist[a];
          const double gap = p - round_to_bits(p, r, rounding);
          ++checked;
          if (!(gap >= 0.0 && gap <= std::ldexp(1.0, -r))) ++violations;
        }
      }
    }
    detail << checked << " estimates, " << violations << " violations"
           << (options.inject_rounding_fault ? " (rounding fault injected)" : "");
    return violations == 0;
  });
}

// 4. First decider: yes rate >= (1 - delta) - 2^-(r-(n-1)) - 3 sigma, no rate
//    <= delta + 3 sigma; delta = 1/8, n = 3, r = 11.
CheckResult first_decider_bounds(const Options& options) {
  return timed(4, "first-result decider bounds", [&](std::ostringstream& detail) {
    constexpr double kTimeLimit = 30.0;
    const auto start = Clock::now();
    DeciderConfig config;
    config.proof = Proof::First;
    config.delta = 0.125;
    config.r = 11;
    config.trials = pick(options.scale, 5000, 20000, 100000);
    config.seed = derive_seed(options.seed, "first-decider");

    const FirstBounds bounds = bounds_first(0.125, 3, 11);
    bool ok = true;
    for (const auto& [name, bqp] : promise_instances(0.125)) {
      const DeciderReport report = end_to_end_decide(bqp, config);
      const double bound = report.yes_instance ? bounds.yes_lower : bounds.no_upper;
      const double tol = three_sigma(bound, config.trials);
      const bool pass = report.yes_instance ? report.empirical_accept_rate >= bound - tol
                                            : report.empirical_accept_rate <= bound + tol;
      const bool decided = report.decision == (report.yes_instance ? 0 : 1);
      ok = ok && pass && decided && report.cases.front().per_sample_violations == 0;
      detail << name << ": q=" << report.q << " rate=" << report.empirical_accept_rate
             << (report.yes_instance ? " >= " : " <= ") << bound
             << (report.yes_instance ? " - " : " + ") << tol << (pass ? "" : " FAILED") << "; ";
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    detail << config.trials << " trials each, " << elapsed << " s";
    return ok && elapsed < kTimeLimit;
  });
}

// 5. Second decider with a median-amplified mock FPRAS.
CheckResult second_decider_bounds(const Options& options) {
  return timed(5, "second-result decider bounds", [&](std::ostringstream& detail) {
    constexpr double kYesFactor = 0.99;
    constexpr double kResidualFailure = 0.001;
    DeciderConfig config;
    config.proof = Proof::Second;
    config.delta = 0.125;
    config.epsilon = 0.25;
    config.eta = 0.25;
    config.median_reps = 55;
    config.trials = pick(options.scale, 5000, 20000, 100000);
    config.seed = derive_seed(options.seed, "second-decider");

    const SecondBounds bounds = bounds_second(config.delta, config.epsilon);
    bool ok = true;
    for (const auto& [name, bqp] : promise_instances(config.delta)) {
      const DeciderReport report = end_to_end_decide(bqp, config);
      const double bound = report.yes_instance ? kYesFactor * bounds.case2
                                               : bounds.case4 + kResidualFailure;
      const double tol = three_sigma(bound, config.trials);
      bool pass = report.yes_instance ? report.empirical_accept_rate >= bound - tol
                                      : report.empirical_accept_rate <= bound + tol;
      detail << name << ": q=" << report.q << " rate=" << report.empirical_accept_rate
             << (report.yes_instance ? " >= " : " <= ") << bound
             << (report.yes_instance ? " - " : " + ") << tol << " [";
      for (const auto& c : report.cases) {
        if (c.trials == 0) continue;
        pass = pass && c.within_tolerance && c.per_sample_violations == 0;
        detail << c.label << " " << c.empirical_accept_rate << "/" << c.analytic_bound << " ";
      }
      detail << report.bias_regime << "]" << (pass ? "" : " FAILED") << "; ";
      ok = ok && pass && report.decision == (report.yes_instance ? 0 : 1);
    }
    detail << config.trials << " trials each";
    return ok;
  });
}

// 6. Majority of 101 votes with single-vote success 2/3.
CheckResult majority_amplification(const Options& options) {
  return timed(6, "majority amplification", [&](std::ostringstream& detail) {
    constexpr double kP = 2.0 / 3.0;
    constexpr std::size_t kVotes = 101;
    constexpr double kMaxError = 0.01;
    const std::uint64_t runs = pick(options.scale, 2000, 10000, 10000);
    const std::uint64_t seed = derive_seed(options.seed, "majority");
    std::uint64_t errors = 0;
    for (std::uint64_t run = 0; run < runs; ++run) {
      CounterRng rng(seed, run);
      // 0 is the correct answer.
      if (amplify_majority([&] { return rng.bernoulli(kP) ? 0 : 1; }, kVotes) != 0) ++errors;
    }
    const double rate = static_cast<double>(errors) / static_cast<double>(runs);
    const double bound = majority_error_bound(kP, kVotes);
    detail << runs << " runs, error rate " << rate << " (limit " << kMaxError
           << ", Hoeffding " << bound << ")";
    return rate <= kMaxError;
  });
}

// 7. |P_hat(0) - P(0)| <= 4 sqrt(P(1-P)/shots) on a 4-wire instance.
CheckResult sampling_convergence(const Options& options) {
  return timed(7, "sampling convergence", [&](std::ostringstream& detail) {
    Circuit circuit(4);
    circuit.append(gates::h(0));
    circuit.append(gates::t(0));
    circuit.append(gates::h(0));
    circuit.append(gates::ccx(1, 2, 0));
    circuit.append(gates::cx(3, 1));
    circuit.append(gates::s(2));
    const Dqc1Instance instance(circuit, 3, 1);
    const std::uint64_t shots = pick(options.scale, 100000, 1000000, 1000000);
    const double p = dqc1_exact(instance)[0];
    const double p_hat = dqc1_sample(instance, shots, derive_seed(options.seed, "sampling"))[0];
    const double limit = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
    detail << "P(0)=" << p << " estimate=" << p_hat << " |diff|=" << std::abs(p_hat - p)
           << " limit " << limit << " (" << shots << " shots)";
    return std::abs(p_hat - p) <= limit;
  });
}

// 8. With the clean qubit maximally mixed, reduced instances give P(0) = 1/2.
CheckResult clean_qubit_degeneracy(const Options& options) {
  return timed(8, "clean-qubit degeneracy", [&](std::ostringstream& detail) {
    constexpr double kTolerance = 1e-12;
    const std::uint64_t circuits = pick(options.scale, 5, 20, 20);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < circuits; ++i) {
      CounterRng rng(derive_seed(options.seed, "degeneracy"), i);
      const std::size_t n = 1 + rng() % 5;
      const BqpCircuit bqp(random_circuit(n, 3 + rng() % 12, clifford_t_kinds(), rng), 0.125);
      const auto artifact = reduce_bqp_to_dqc1(bqp);
      worst = std::max(worst, std::abs(dqc1_exact_all_mixed(artifact.instance)[0] - 0.5));
    }
    detail << circuits << " reduced instances, max |P(0) - 1/2| " << worst << " (tol "
           << kTolerance << ")";
    return worst <= kTolerance;
  });
}

std::vector<CheckResult> run_all(const Options& options) {
  return {
      identity_reproduction(options), backend_equivalence(options),
      one_sided_estimator(options),   first_decider_bounds(options),
      second_decider_bounds(options), majority_amplification(options),
      sampling_convergence(options),  clean_qubit_degeneracy(options),
  };
}

std::string format_line(const CheckResult& result) {
  std::ostringstream out;
  out.precision(3);
  out << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ' ' << result.name << " ("
      << std::fixed << result.seconds << " s): " << result.detail;
  return out.str();
}

}  // namespace dqc1::selftest
