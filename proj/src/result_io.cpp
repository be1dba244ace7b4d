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

#include "dqc1/result_io.hpp"

#include <cmath>

#include "dqc1/errors.hpp"

namespace dqc1 {

using nlohmann::json;

json to_json(const OutputDistribution& dist) {
  json record;
  record["m"] = dist.measured_width;
  record["kind"] = dist.kind == DistributionKind::Exact ? "exact" : "empirical";
  if (dist.kind == DistributionKind::Empirical) {
    record["shots"] = dist.shots;
    record["seed"] = dist.seed;
  }
  json p = json::object();
  for (std::size_t a = 0; a < dist.outcomes(); ++a) {
    p[outcome_bitstring(a, dist.measured_width)] = dist.probabilities[a];
  }
  record["p"] = std::move(p);
  return record;
}

OutputDistribution distribution_from_json(const json& record) {
  try {
    OutputDistribution dist;
    dist.measured_width = record.at("m").get<std::size_t>();
    const auto kind = record.at("kind").get<std::string>();
    if (kind == "exact") {
      dist.kind = DistributionKind::Exact;
    } else if (kind == "empirical") {
      dist.kind = DistributionKind::Empirical;
      dist.shots = record.at("shots").get<std::uint64_t>();
      dist.seed = record.at("seed").get<std::uint64_t>();
    } else {
      throw ValidationError("unknown distribution kind '" + kind + "'");
    }
    dist.probabilities.assign(std::size_t{1} << dist.measured_width, 0.0);
    for (const auto& [bits, value] : record.at("p").items()) {
      if (bits.size() != dist.measured_width) {
        throw ValidationError("outcome '" + bits + "' has the wrong width");
      }
      dist.probabilities[outcome_index(bits)] = value.get<double>();
    }
    if (dist.kind == DistributionKind::Empirical) {
      dist.counts.resize(dist.probabilities.size());
      for (std::size_t a = 0; a < dist.counts.size(); ++a) {
        dist.counts[a] = static_cast<std::uint64_t>(
            std::llround(dist.probabilities[a] * static_cast<double>(dist.shots)));
      }
    }
    return dist;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed distribution record: ") + e.what());
  }
}

json to_json(const IdentityCheck& check, std::size_t n) {
  return json{{"n", n},
              {"q", check.q},
              {"predictedP0", check.predicted_p0},
              {"observedP0", check.observed_p0},
              {"residual", check.residual}};
}

json to_json(const CaseReport& c) {
  return json{{"caseLabel", c.label},
              {"trials", c.trials},
              {"accepts", c.accepts},
              {"empiricalAcceptRate", c.empirical_accept_rate},
              {"analyticBound", c.analytic_bound},
              {"boundKind", to_string(c.bound_kind)},
              {"withinTolerance", c.within_tolerance},
              {"perSampleViolations", c.per_sample_violations}};
}

json to_json(const DeciderReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) cases.push_back(to_json(c));
  json parameters{{"n", report.n},
                  {"delta", report.delta},
                  {"seed", report.seed},
                  {"majorityK", report.majority_k}};
  if (report.proof == Proof::First) {
    parameters["r"] = report.r;
  } else {
    parameters["epsilon"] = report.epsilon;
    parameters["eta"] = report.eta;
    parameters["medianReps"] = report.median_reps;
  }
  return json{{"proof", to_string(report.proof)},
              {"parameters", std::move(parameters)},
              {"q", report.q},
              {"p0", report.p0},
              {"bias", report.bias},
              {"biasRegime", report.bias_regime},
              {"yesInstance", report.yes_instance},
              {"trials", report.trials},
              {"empiricalAcceptRate", report.empirical_accept_rate},
              {"analyticBound", report.analytic_bound},
              {"boundKind", to_string(report.bound_kind)},
              {"caseLabel", report.case_label},
              {"withinTolerance", report.within_tolerance},
              {"clampActivations", report.clamp_activations},
              {"cases", std::move(cases)},
              {"decision", report.decision}};
}

}  // namespace dqc1
