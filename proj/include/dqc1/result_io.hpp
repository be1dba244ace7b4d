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

#include <nlohmann/json.hpp>

#include "dqc1/decider.hpp"
#include "dqc1/estimators.hpp"
#include "dqc1/reduction.hpp"
#include "dqc1/simulator.hpp"

// Machine-readable records written by the command-line tool.

namespace dqc1 {

/// {"m": int, "kind": "exact"|"empirical", "shots": int?, "seed": int?,
///  "p": {bitstring: float}}
nlohmann::json to_json(const OutputDistribution& dist);
OutputDistribution distribution_from_json(const nlohmann::json& record);

nlohmann::json to_json(const IdentityCheck& check, std::size_t n);
nlohmann::json to_json(const DeciderReport& report);
nlohmann::json to_json(const CaseReport& report);

}  // namespace dqc1
