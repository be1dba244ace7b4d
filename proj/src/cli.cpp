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

#include "dqc1/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dqc1/circuit.hpp"
#include "dqc1/decider.hpp"
#include "dqc1/errors.hpp"
#include "dqc1/estimators.hpp"
#include "dqc1/random.hpp"
#include "dqc1/reduction.hpp"
#include "dqc1/result_io.hpp"
#include "dqc1/selftest.hpp"
#include "dqc1/simulator.hpp"

namespace dqc1::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

// Options shared by every command that simulates.
struct LimitOptions {
  std::size_t max_mixed = SimulatorLimits{}.max_mixed_width;
  std::size_t max_density = SimulatorLimits{}.max_density_wires;
  unsigned threads = 0;

  void attach(CLI::App& app) {
    app.add_option("--max-mixed", max_mixed, "Enumeration cap on the mixed-register width")
        ->capture_default_str();
    app.add_option("--max-density-wires", max_density, "Wire cap for the density-matrix backend")
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  SimulatorLimits limits() const {
    SimulatorLimits l;
    l.max_mixed_width = max_mixed;
    l.max_density_wires = max_density;
    l.threads = threads;
    return l;
  }
};

struct SimulateArgs {
  std::string in;
  std::string out;
  std::optional<std::size_t> mixed;
  std::optional<std::size_t> measure;
  std::string backend = "exact";
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  std::string estimator;
  std::string outcome;
  int r = 0;
  double epsilon = 0.25;
  double eta = 0.25;
  LimitOptions limits;
};

struct SourceArgs {
  std::string in;
  std::string out;
  std::size_t output_wire = 0;
  double delta = 0.125;
  LimitOptions limits;
};

struct DecideArgs {
  SourceArgs source;
  std::string proof = "first";
  double epsilon = 0.25;
  double eta = 0.25;
  int r = 0;
  std::uint64_t trials = 100000;
  std::size_t majority_k = 101;
  std::size_t median_reps = 55;
  std::uint64_t seed = 0;
};

struct SelftestArgs {
  bool quick = false;
  bool full = false;
  std::string inject_fault;
  std::uint64_t seed = selftest::Options{}.seed;
};

Dqc1Instance load_instance(const SimulateArgs& args) {
  CircuitFile file = parse_circuit_file(read_file(args.in));
  if (args.mixed) file.mixed = args.mixed;
  if (args.measure) file.measure = args.measure;
  return to_instance(file);
}

BqpCircuit load_bqp(const SourceArgs& args) {
  return BqpCircuit(parse_circuit(read_file(args.in)), args.delta, args.output_wire);
}

int run_simulate(const SimulateArgs& args, std::ostream& out) {
  const Dqc1Instance instance = load_instance(args);
  const SimulatorLimits limits = args.limits.limits();

  if (!args.estimator.empty()) {
    const std::size_t outcome =
        args.outcome.empty() ? 0 : outcome_index(args.outcome);
    if (args.outcome.size() > 0 && args.outcome.size() != instance.measured_width()) {
      throw ValidationError("--outcome must have " + std::to_string(instance.measured_width()) +
                            " bits");
    }
    json record{{"estimator", args.estimator},
                {"outcome", outcome_bitstring(outcome, instance.measured_width())}};
    if (args.estimator == "exact-rounded") {
      const int r = args.r > 0 ? args.r : static_cast<int>(instance.mixed_width()) + 8;
      const OneSidedEstimate estimate = exact_rounded(instance, outcome, r, limits);
      record["r"] = r;
      record["value"] = estimate.value;
    } else if (args.estimator == "mock-fpras") {
      const std::uint64_t seed = derive_seed(args.seed, "simulate/fpras");
      record["epsilon"] = args.epsilon;
      record["eta"] = args.eta;
      record["seed"] = args.seed;
      record["value"] = mock_fpras(instance, outcome, args.epsilon, args.eta, seed, limits);
    } else {
      const std::uint64_t seed = derive_seed(args.seed, "simulate/mc");
      record["shots"] = args.shots;
      record["seed"] = args.seed;
      record["value"] = additive_mc(instance, outcome, args.shots, seed, limits);
    }
    out << record.dump() << '\n';
    return kOk;
  }

  OutputDistribution dist;
  if (args.backend == "exact") {
    dist = dqc1_exact(instance, limits);
  } else if (args.backend == "density") {
    dist = dqc1_density(instance, limits);
  } else {
    dist = dqc1_sample(instance, args.shots, derive_seed(args.seed, "simulate/sample"), limits);
    dist.seed = args.seed;
  }
  write_output(args.out, to_json(dist).dump() + "\n", out);
  return kOk;
}

int run_reduce(const SourceArgs& args, std::ostream& out) {
  const BqpCircuit bqp = load_bqp(args);
  const SimulatorLimits limits = args.limits.limits();
  const ReductionArtifact artifact = reduce_bqp_to_dqc1(bqp, limits);
  const IdentityCheck check = verify_identity(bqp, limits);
  write_output(args.out, format_instance(artifact.instance), out);
  json report = to_json(check, bqp.width());
  report["instance"] = args.out.empty() ? json("-") : json(args.out);
  out << report.dump() << '\n';
  return kOk;
}

int run_verify(const SourceArgs& args, std::ostream& out) {
  const BqpCircuit bqp = load_bqp(args);
  const IdentityCheck check = verify_identity(bqp, args.limits.limits());
  write_output(args.out, to_json(check, bqp.width()).dump() + "\n", out);
  return kOk;
}

int run_decide(const DecideArgs& args, std::ostream& out) {
  const BqpCircuit bqp = load_bqp(args.source);
  DeciderConfig config;
  config.proof = args.proof == "first" ? Proof::First : Proof::Second;
  config.delta = args.source.delta;
  config.epsilon = args.epsilon;
  config.eta = args.eta;
  config.r = args.r;
  config.trials = args.trials;
  config.majority_k = args.majority_k;
  config.median_reps = args.median_reps;
  config.seed = args.seed;
  try {
    const DeciderReport report = end_to_end_decide(bqp, config, args.source.limits.limits());
    write_output(args.source.out, to_json(report).dump() + "\n", out);
  } catch (const PromiseViolation& e) {
    const json record{{"promiseViolation", true}, {"q", e.q()}, {"delta", e.delta()}};
    write_output(args.source.out, record.dump() + "\n", out);
    throw;
  }
  return kOk;
}

int run_selftest(const SelftestArgs& args, std::ostream& out) {
  selftest::Options options;
  options.scale = args.full ? selftest::Scale::Full
                            : args.quick ? selftest::Scale::Quick : selftest::Scale::Default;
  options.inject_rounding_fault = args.inject_fault == "rounding";
  options.seed = args.seed;
  bool ok = true;
  for (const auto& result : selftest::run_all(options)) {
    out << selftest::format_line(result) << '\n';
    ok = ok && result.passed;
  }
  return ok ? kOk : kInvalidInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and sampled one-clean-qubit simulation, the BQP-to-DQC1 reduction and "
               "the classical deciders built on it",
               "dqc1sim"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Output distribution of a DQC1_m instance");
  simulate->add_option("--in", sim.in, "Instance circuit file")->required();
  simulate->add_option("--out", sim.out, "Write the record here instead of stdout");
  simulate->add_option("--mixed", sim.mixed, "Override the mixed-register width");
  simulate->add_option("--measure", sim.measure, "Override the measured prefix width");
  auto* exact_flag = simulate->add_flag_callback("--exact", [&] { sim.backend = "exact"; },
                                                 "Enumerate the mixed register (default)");
  auto* density_flag = simulate->add_flag_callback("--density", [&] { sim.backend = "density"; },
                                                   "Evolve the full density matrix");
  auto* sample_flag = simulate->add_flag_callback("--sample", [&] { sim.backend = "sample"; },
                                                  "Sample --shots runs");
  exact_flag->excludes(density_flag)->excludes(sample_flag);
  density_flag->excludes(sample_flag);
  simulate->add_option("--shots", sim.shots, "Shots for sampling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  simulate->add_option("--estimator", sim.estimator, "Estimate one outcome instead")
      ->check(CLI::IsMember({"exact-rounded", "mock-fpras", "mc"}));
  simulate->add_option("--outcome", sim.outcome, "Outcome bitstring for --estimator (wire 0 first)");
  simulate->add_option("--r", sim.r, "Bit budget for exact-rounded (default n + 8)");
  simulate->add_option("--epsilon", sim.epsilon, "Relative error for mock-fpras")
      ->capture_default_str();
  simulate->add_option("--eta", sim.eta, "Failure probability for mock-fpras")
      ->capture_default_str();
  sim.limits.attach(*simulate);

  SourceArgs red;
  auto* reduce = app.add_subcommand("reduce", "Compile a BQP circuit into a DQC1 instance");
  reduce->add_option("--in", red.in, "Source circuit file")->required();
  reduce->add_option("--out", red.out, "Instance file to write")->required();
  reduce->add_option("--output-wire", red.output_wire, "Decision wire of the source circuit")
      ->capture_default_str();
  red.limits.attach(*reduce);

  SourceArgs ver;
  auto* verify = app.add_subcommand("verify-identity",
                                    "Check P(0) of the reduced instance against q");
  verify->add_option("--in", ver.in, "Source circuit file")->required();
  verify->add_option("--out", ver.out, "Write the record here instead of stdout");
  verify->add_option("--output-wire", ver.output_wire, "Decision wire of the source circuit")
      ->capture_default_str();
  ver.limits.attach(*verify);

  DecideArgs dec;
  auto* decide = app.add_subcommand("decide", "Run a classical decider end to end");
  decide->add_option("--in", dec.source.in, "Source circuit file")->required();
  decide->add_option("--out", dec.source.out, "Write the report here instead of stdout");
  decide->add_option("--output-wire", dec.source.output_wire, "Decision wire")
      ->capture_default_str();
  decide->add_option("--proof", dec.proof, "Which decider")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  decide->add_option("--delta", dec.source.delta, "Promise gap")->capture_default_str();
  decide->add_option("--epsilon", dec.epsilon, "FPRAS relative error")->capture_default_str();
  decide->add_option("--eta", dec.eta, "FPRAS failure probability")->capture_default_str();
  decide->add_option("--r", dec.r, "Bit budget (default n + 8)");
  decide->add_option("--trials", dec.trials, "Single-shot trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decide->add_option("--majority-k", dec.majority_k, "Majority vote size (odd)")
      ->capture_default_str();
  decide->add_option("--median-reps", dec.median_reps, "Median repetitions (odd)")
      ->capture_default_str();
  decide->add_option("--seed", dec.seed, "Random seed")->capture_default_str();
  dec.source.limits.attach(*decide);

  SelftestArgs st;
  auto* self = app.add_subcommand("selftest", "Run the acceptance checks");
  auto* quick = self->add_flag("--quick", st.quick, "Reduced counts");
  auto* full = self->add_flag("--full", st.full, "Full acceptance counts");
  quick->excludes(full);
  self->add_option("--inject-fault", st.inject_fault, "Deliberately break a component")
      ->check(CLI::IsMember({"rounding"}));
  self->add_option("--seed", st.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*simulate) return run_simulate(sim, out);
    if (*reduce) return run_reduce(red, out);
    if (*verify) return run_verify(ver, out);
    if (*decide) return run_decide(dec, out);
    return run_selftest(st, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const PromiseViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPromiseViolation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace dqc1::cli
