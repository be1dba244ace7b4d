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

#include <cstdint>
#include <string>
#include <vector>

#include "dqc1/circuit.hpp"

// Executable acceptance checks, shared by `dqc1sim selftest` and the
// acceptance test binary. Every threshold is fixed here.

namespace dqc1::selftest {

enum class Scale {
  Quick,    // a few seconds, reduced counts
  Default,  // reduced trial counts, all checks
  Full,     // the counts the acceptance gate is stated at
};

struct Options {
  Scale scale = Scale::Default;
  bool inject_rounding_fault = false;  // round estimates up instead of down
  std::uint64_t seed = 20141016;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// A named promise instance on three wires.
struct NamedBqp {
  std::string name;
  BqpCircuit bqp;
};

/// Yes instances (q >= 7/8) and no instances (q <= 1/8) used by the decider
/// checks: the identity, a single X, and two H/T words whose acceptance
/// probabilities (about 0.890 and 0.073) sit near the promise boundaries.
std::vector<NamedBqp> promise_instances(double delta = 0.125);

CheckResult identity_reproduction(const Options& options);
CheckResult backend_equivalence(const Options& options);
CheckResult one_sided_estimator(const Options& options);
CheckResult first_decider_bounds(const Options& options);
CheckResult second_decider_bounds(const Options& options);
CheckResult majority_amplification(const Options& options);
CheckResult sampling_convergence(const Options& options);
CheckResult clean_qubit_degeneracy(const Options& options);

std::vector<CheckResult> run_all(const Options& options);

/// "[PASS] 3 one-sided estimator (0.01 s): ..."
std::string format_line(const CheckResult& result);

}  // namespace dqc1::selftest
