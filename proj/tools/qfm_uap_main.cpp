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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfm/experiments.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Quantum feature map universal-approximation experiments"};
    app.require_subcommand(1);

    const std::vector<std::string> experiments = {
        "oracle-check", "dedup-count", "fit",            "bernstein",
        "rate-curve",   "sequential",  "counterexample", "classify"};

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool verbose = false;

    for (const auto &name : experiments) {
        auto *sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "Experiment config (JSON)")
            ->required();
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--seed", seed, "Overrides config[\"seed\"]")
            ->trigger_on_parse()
            ->each([&](const std::string &) { seed_set = true; });
        sub->add_flag("--verbose", verbose, "Progress output on stderr");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : qfm::experiment_config_error;
    }

    const std::string experiment = app.get_subcommands().front()->get_name();

    nlohmann::json config;
    try {
        std::ifstream in(config_path);
        if (!in) {
            throw std::runtime_error("cannot open config: " + config_path);
        }
        config = nlohmann::json::parse(in);
        if (config.contains("experiment") &&
            config["experiment"].get<std::string>() != experiment) {
            throw std::runtime_error("config experiment does not match subcommand");
        }
        config["experiment"] = experiment;
        if (seed_set) {
            config["seed"] = seed;
        }
    } catch (const std::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return qfm::experiment_config_error;
    }

    try {
        const auto outcome = qfm::run_experiment(config, out_dir, verbose);
        std::cout << outcome.summary.dump(2) << "\n";
        return outcome.status;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return qfm::experiment_config_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qfm::experiment_assertion_failed;
    }
}
