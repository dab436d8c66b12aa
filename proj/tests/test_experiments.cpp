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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "qfm/experiments.hpp"
#include "qfm/target.hpp"

using namespace qfm;
using nlohmann::json;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
}

TEST_CASE("dedup-count experiment writes CSV and summary") {
    const auto dir = temp_dir("qfm_test_dedup");
    json config{{"experiment", "dedup-count"}, {"N", 6}, {"d", 2}};
    const auto outcome = run_experiment(config, dir.string());
    CHECK(outcome.status == experiment_ok);
    CHECK(outcome.summary["schema_version"] == 1);
    CHECK(outcome.summary["distinct"] == 16);
    CHECK(outcome.summary["bound"] == 16);

    const auto csv = slurp(outcome.csv_path);
    CHECK(csv.rfind("index,alpha,weight\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(json::parse(slurp(outcome.summary_path)) == outcome.summary);
}

TEST_CASE("counterexample experiment is byte-deterministic") {
    json config{{"experiment", "counterexample"},
                {"theta_rationals", json::array({{1, 3}, {2, 3}})},
                {"targets", {2.0, 1.0}}};
    const auto dir_a = temp_dir("qfm_test_ce_a");
    const auto dir_b = temp_dir("qfm_test_ce_b");
    const auto a = run_experiment(config, dir_a.string());
    const auto b = run_experiment(config, dir_b.string());
    CHECK(slurp(a.csv_path) == slurp(b.csv_path));
    CHECK(slurp(a.summary_path) == slurp(b.summary_path));
    CHECK(a.summary["period"] == 3);
    CHECK(a.summary["error_floor"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("oracle-check experiment passes at the default tolerance") {
    const auto dir = temp_dir("qfm_test_oracle");
    json config{{"experiment", "oracle-check"}, {"trials", 60}, {"seed", 7}};
    const auto outcome = run_experiment(config, dir.string());
    CHECK(outcome.status == experiment_ok);
    CHECK(outcome.summary["pass"] == true);
    CHECK(outcome.summary["max_abs_diff"].get<double>() < 1e-10);
}

TEST_CASE("unknown experiments and schema versions are configuration errors") {
    CHECK_THROWS_AS(run_experiment({{"experiment", "nope"}}, "."),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        run_experiment({{"experiment", "dedup-count"}, {"schema_version", 2}}, "."),
        std::invalid_argument);
}

TEST_CASE("target spec JSON round-trip") {
    TargetSpec t;
    t.kind = TargetKind::AbsShift;
    t.shift = 0.5;
    t.lipschitz_C = 1.0;
    const auto back = TargetSpec::from_json(t.to_json());
    CHECK(back.kind == TargetKind::AbsShift);
    CHECK(back.shift == 0.5);
    CHECK(back.lipschitz_C == 1.0);
    const double x[1] = {0.2};
    CHECK(back(x) == doctest::Approx(0.3));
}
