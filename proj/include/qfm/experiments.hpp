// Copyright 2026 The qfm-uap developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

namespace qfm {

inline constexpr int schema_version = 1;

/// Exit-status contract: 0 success, 1 configuration error, 2 violated
/// numerical assertion.
enum ExperimentStatus : int {
    experiment_ok = 0,
    experiment_config_error = 1,
    experiment_assertion_failed = 2,
};

struct ExperimentOutcome {
    int status = experiment_ok;
    nlohmann::json summary;
    std::string csv_path;
    std::string summary_path;
};

/// Runs one experiment described by `config` and writes
/// <out_dir>/<output_path>.csv and <out_dir>/<output_path>.json.
/// All randomness flows from config["seed"]; outputs are byte-identical
/// across runs with the same config.
ExperimentOutcome run_experiment(const nlohmann::json &config,
                                 const std::string &out_dir, bool verbose = false);

/// Shortest round-trip decimal form of a double (CSV cell format).
std::string format_double(double v);

}  // namespace qfm
