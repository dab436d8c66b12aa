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

#include "qfm/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>

#include "qfm/bernstein.hpp"
#include "qfm/classify.hpp"
#include "qfm/counterexample.hpp"
#include "qfm/feature_map.hpp"
#include "qfm/linear_model.hpp"
#include "qfm/parallel.hpp"
#include "qfm/rate_bound.hpp"
#include "qfm/sequential.hpp"
#include "qfm/statevector.hpp"
#include "qfm/target.hpp"
#include "qfm/tolerances.hpp"

namespace qfm {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

using nlohmann::json;

struct ExperimentResult {
    std::string csv;
    json summary;
    int status = experiment_ok;
};

class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : rng_(seed) {}

    // Uniform on [0, 1) from the top 53 bits; platform-independent.
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t integer(std::uint64_t bound) { return rng_() % bound; }

  private:
    std::mt19937_64 rng_;
};

std::string csv_row(const std::vector<std::string> &cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            row += ',';
        }
        row += cells[i];
    }
    row += '\n';
    return row;
}

std::vector<std::vector<double>> unit_grid(std::size_t d, std::size_t per_dim) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= per_dim;
    }
    std::vector<std::vector<double>> points;
    points.reserve(total);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<double> x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = per_dim == 1 ? 0.0
                                : static_cast<double>(idx[i]) /
                                      static_cast<double>(per_dim - 1);
        }
        points.push_back(std::move(x));
        std::size_t i = 0;
        while (i < d && idx[i] == per_dim - 1) {
            idx[i] = 0;
            ++i;
        }
        if (i < d) {
            ++idx[i];
        }
    }
    return points;
}

// Sup error of the approximator against g on a deterministic grid plus
// 1000 seeded random points.
double sup_error(const BernsteinApproximator &approx, const TargetSpec &target,
                 std::size_t per_dim, std::uint64_t seed) {
    auto points = unit_grid(approx.dimension(), per_dim);
    SeededRng rng(seed);
    for (std::size_t i = 0; i < 1000; ++i) {
        std::vector<double> x(approx.dimension());
        for (auto &xi : x) {
            xi = rng.uniform01();
        }
        points.push_back(std::move(x));
    }
    std::vector<double> errs(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        errs[i] = std::abs(approx.evaluate(points[i]) - target(points[i]));
    });
    return *std::max_element(errs.begin(), errs.end());
}

std::size_t default_grid(std::size_t d) { return d == 1 ? 1001 : 101; }

// ---------------------------------------------------------------------
// oracle-check

struct OracleCase {
    std::string scenario;
    double closed = 0.0;
    double oracle = 0.0;
};

OracleCase oracle_case_arccos(SeededRng &rng) {
    const std::size_t d = 1 + rng.integer(2);
    const std::size_t n = d + rng.integer(10 - d + 1);
    auto spec = FeatureMapSpec::parallel_arccos(d, n);
    std::vector<double> x(d);
    for (auto &xi : x) {
        xi = rng.uniform01();
    }
    const auto alphas = enumerate_observables_dedup(n, d);
    const auto &alpha = alphas[rng.integer(alphas.size())];
    OracleCase c;
    c.scenario = "PARALLEL_ARCCOS";
    c.closed = basis_parallel_closed(x, alpha, d);
    c.oracle = expectation(encode(spec, x), alpha.to_observable());
    return c;
}

OracleCase oracle_case_activation(SeededRng &rng) {
    const std::size_t d = 1 + rng.integer(2);
    const std::size_t n = 1 + rng.integer(10);
    const auto kinds = {ActivationKind::Tanh, ActivationKind::Cosine,
                        ActivationKind::PiecewiseSign};
    const auto kind = *(kinds.begin() + rng.integer(kinds.size()));
    auto spec = FeatureMapSpec::parallel_activation(d, n, kind, rng.integer(1u << 30));
    std::vector<double> x(d);
    for (auto &xi : x) {
        xi = rng.uniform01();
    }
    const std::size_t qubit = rng.integer(n);
    OracleCase c;
    c.scenario = "PARALLEL_ACTIVATION";
    c.closed = basis_activation_closed(x, qubit, *spec.activation);
    c.oracle = expectation(encode(spec, x),
                           ProductObservable::single_z(n, qubit));
    return c;
}

OracleCase oracle_case_sequential(SeededRng &rng) {
    const std::size_t m = 1 + rng.integer(4);
    std::vector<double> thetas(m);
    for (auto &t : thetas) {
        t = rng.uniform(0.0, 2.0);
    }
    auto spec = FeatureMapSpec::sequential(thetas);
    const std::size_t idx = rng.integer(m);
    const std::size_t reps = 1 + rng.integer(100);
    const double xi[1] = {static_cast<double>(idx)};
    OracleCase c;
    c.scenario = "SEQUENTIAL";
    c.closed = basis_sequential_closed(thetas[idx], reps);
    c.oracle = expectation(encode(spec, xi, reps),
                           ProductObservable::single_z(1, 0));
    return c;
}

ExperimentResult run_oracle_check(const json &config) {
    const std::size_t trials = config.value("trials", std::size_t{1000});
    const double tolerance =
        config.contains("tolerances")
            ? config["tolerances"].value("oracle", tol::oracle)
            : tol::oracle;
    SeededRng rng(config.value("seed", std::uint64_t{0}));

    ExperimentResult result;
    result.csv = csv_row({"trial", "scenario", "abs_diff"});
    double max_diff = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        OracleCase c;
        switch (t % 3) {
            case 0:
                c = oracle_case_arccos(rng);
                break;
            case 1:
                c = oracle_case_activation(rng);
                break;
            default:
                c = oracle_case_sequential(rng);
                break;
        }
        const double diff = std::abs(c.closed - c.oracle);
        max_diff = std::max(max_diff, diff);
        result.csv += csv_row({std::to_string(t), c.scenario, format_double(diff)});
    }
    const bool pass = max_diff < tolerance;
    result.summary = {{"trials", trials},
                      {"max_abs_diff", max_diff},
                      {"tolerance", tolerance},
                      {"pass", pass}};
    result.status = pass ? experiment_ok : experiment_assertion_failed;
    return result;
}

// ---------------------------------------------------------------------
// dedup-count

ExperimentResult run_dedup_count(const json &config) {
    const std::size_t n = config.at("N").get<std::size_t>();
    const std::size_t d = config.at("d").get<std::size_t>();
    const auto reps = enumerate_observables_dedup(n, d);
    const std::size_t bound = observable_count_bound(n, d);

    ExperimentResult result;
    result.csv = csv_row({"index", "alpha", "weight"});
    for (std::size_t i = 0; i < reps.size(); ++i) {
        result.csv += csv_row(
            {std::to_string(i), reps[i].label(), std::to_string(reps[i].weight())});
    }
    const bool pass = reps.size() <= bound;
    result.summary = {{"N", n},
                      {"d", d},
                      {"distinct", reps.size()},
                      {"bound", bound},
                      {"pass", pass}};
    result.status = pass ? experiment_ok : experiment_assertion_failed;
    return result;
}

// ---------------------------------------------------------------------
// fit

ExperimentResult run_fit(const json &config) {
    const auto spec = FeatureMapSpec::from_json(config.at("feature_map"));
    const auto target = TargetSpec::from_json(config.at("target"));
    const std::size_t per_dim =
        config.contains("grid")
            ? config["grid"].value("points_per_dim", std::size_t{10})
            : std::size_t{10};
    const double ridge = config.value("ridge_lambda", 0.0);

    const auto points = unit_grid(spec.d, per_dim);
    DesignMatrix dm;
    if (spec.variant == Variant::ParallelArccos) {
        dm = design_matrix_parallel(spec, points);
    } else if (spec.variant == Variant::ParallelActivation) {
        dm.values.resize(static_cast<Eigen::Index>(points.size()),
                         static_cast<Eigen::Index>(spec.n_qubits));
        for (std::size_t j = 0; j < spec.n_qubits; ++j) {
            dm.column_labels.push_back("psi_" + std::to_string(j));
        }
        for (std::size_t m = 0; m < points.size(); ++m) {
            for (std::size_t j = 0; j < spec.n_qubits; ++j) {
                dm.values(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) =
                    basis_activation_closed(points[m], j, *spec.activation);
            }
        }
        dm.sample_points = points;
    } else {
        throw std::invalid_argument("fit experiment needs a parallel feature map");
    }

    Eigen::VectorXd y(static_cast<Eigen::Index>(points.size()));
    for (std::size_t m = 0; m < points.size(); ++m) {
        y[static_cast<Eigen::Index>(m)] = target(points[m]);
    }
    const auto model = fit_least_squares(dm, y, ridge);

    ExperimentResult result;
    result.csv = csv_row({"label", "weight"});
    for (std::size_t k = 0; k < model.column_labels.size(); ++k) {
        result.csv += csv_row({model.column_labels[k],
                               format_double(model.weights[static_cast<Eigen::Index>(k)])});
    }
    const double max_residual =
        config.value("max_residual", std::numeric_limits<double>::infinity());
    const bool pass = model.residual <= max_residual;
    result.summary = {{"samples", points.size()},
                      {"basis_size", model.column_labels.size()},
                      {"residual", model.residual},
                      {"rank_deficient", model.rank_deficient},
                      {"ridge_lambda", ridge},
                      {"model", model.to_json()},
                      {"pass", pass}};
    result.status = pass ? experiment_ok : experiment_assertion_failed;
    return result;
}

// ---------------------------------------------------------------------
// bernstein

ExperimentResult run_bernstein(const json &config) {
    const auto target = TargetSpec::from_json(config.at("target"));
    const std::size_t d = config.at("d").get<std::size_t>();
    const std::size_t n = config.at("n").get<std::size_t>();
    const std::size_t per_dim =
        config.contains("grid")
            ? config["grid"].value("points_per_dim", default_grid(d))
            : default_grid(d);
    const std::uint64_t seed = config.value("seed", std::uint64_t{0});

    const auto approx = BernsteinApproximator::from_function(
        [&](std::span<const double> x) { return target(x); }, d, n);
    const double err = sup_error(approx, target, per_dim, seed);

    ExperimentResult result;
    result.summary = {{"d", d}, {"n", n}, {"N", n * d}, {"sup_error", err}};
    bool pass = true;
    if (target.lipschitz_C) {
        const auto rb = RateBoundSpec::lipschitz_target(d, *target.lipschitz_C);
        const double bound = min_bound_s4(rb, n);
        pass = err <= bound;
        result.summary["s4_bound"] = bound;
    }
    result.summary["pass"] = pass;
    result.status = pass ? experiment_ok : experiment_assertion_failed;

    std::vector<std::string> header{"index"};
    for (std::size_t i = 0; i < d; ++i) {
        header.push_back("x" + std::to_string(i + 1));
    }
    header.push_back("g");
    header.push_back("f");
    result.csv = csv_row(header);
    const auto grid = unit_grid(d, per_dim);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (double xi : grid[i]) {
            row.push_back(format_double(xi));
        }
        row.push_back(format_double(target(grid[i])));
        row.push_back(format_double(approx.evaluate(grid[i])));
        result.csv += csv_row(row);
    }
    return result;
}

// ---------------------------------------------------------------------
// rate-curve

std::optional<double> tail_log_slope(const std::vector<std::size_t> &qubits,
                                     const std::vector<double> &errors) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (errors[i] > 1e-12) {
            pts.emplace_back(std::log(static_cast<double>(qubits[i])),
                             std::log(errors[i]));
        }
    }
    if (pts.size() < 3) {
        return std::nullopt;
    }
    const std::size_t tail = std::max<std::size_t>(3, (pts.size() + 1) / 2);
    pts.erase(pts.begin(), pts.end() - static_cast<std::ptrdiff_t>(tail));
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto &[x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ExperimentResult run_rate_curve(const json &config, bool verbose) {
    const auto target = TargetSpec::from_json(config.at("target"));
    const std::size_t d = config.value("d", std::size_t{1});
    const auto degrees = config.at("n").get<std::vector<std::size_t>>();
    if (degrees.empty()) {
        throw std::invalid_argument("rate-curve needs a nonempty degree list");
    }
    const std::size_t per_dim =
        config.contains("grid")
            ? config["grid"].value("points_per_dim", default_grid(d))
            : default_grid(d);
    const std::uint64_t seed = config.value("seed", std::uint64_t{0});
    if (!target.lipschitz_C) {
        throw std::invalid_argument("rate-curve target needs lipschitz_C");
    }
    const auto rb = RateBoundSpec::lipschitz_target(d, *target.lipschitz_C);

    std::vector<std::size_t> qubit_counts;
    std::vector<double> errors;
    std::vector<double> bounds;
    for (std::size_t n : degrees) {
        const auto approx = BernsteinApproximator::from_function(
            [&](std::span<const double> x) { return target(x); }, d, n);
        qubit_counts.push_back(n * d);
        errors.push_back(sup_error(approx, target, per_dim, seed));
        bounds.push_back(min_bound_s4(rb, n));
    }

    if (degrees.size() < 3) {
        std::cerr << "rate-curve: fewer than 3 degrees, slope omitted\n";
    }
    const auto slope = tail_log_slope(qubit_counts, errors);

    ExperimentResult result;
    result.csv = csv_row({"n", "N", "sup_error", "s4_bound", "log_slope"});
    bool bound_ok = true;
    bool decreasing = true;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        bound_ok = bound_ok && errors[i] <= bounds[i];
        if (i > 0 && errors[i] >= errors[i - 1]) {
            decreasing = false;
        }
        result.csv += csv_row({std::to_string(degrees[i]),
                               std::to_string(qubit_counts[i]),
                               format_double(errors[i]), format_double(bounds[i]),
                               slope ? format_double(*slope) : std::string{}});
        if (verbose) {
            std::cerr << "n=" << degrees[i] << " sup_error=" << errors[i]
                      << " bound=" << bounds[i] << "\n";
        }
    }
    result.summary = {{"d", d},
                      {"bound_ok", bound_ok},
                      {"errors_decreasing", decreasing},
                      {"pass", bound_ok}};
    if (slope) {
        result.summary["log_slope"] = *slope;
    }
    result.status = bound_ok ? experiment_ok : experiment_assertion_failed;
    return result;
}

// ---------------------------------------------------------------------
// sequential

ExperimentResult run_sequential(const json &config) {
    const auto thetas = config.at("theta").get<std::vector<double>>();
    const auto targets = config.at("targets").get<std::vector<double>>();
    const double epsilon = config.at("epsilon").get<double>();
    const std::uint64_t n_max = config.at("n_max").get<std::uint64_t>();

    const auto r = sequential_search(thetas, targets, epsilon, n_max);

    ExperimentResult result;
    result.csv = csv_row({"found", "n", "w", "max_error"});
    result.csv += csv_row({r.found ? "1" : "0", std::to_string(r.iteration),
                           format_double(r.weight), format_double(r.max_error)});
    result.summary = {{"found", r.found},
                      {"n", r.iteration},
                      {"w", r.weight},
                      {"max_error", r.max_error},
                      {"epsilon", epsilon},
                      {"n_max", n_max},
                      // theta independence over Q is assumed, not checked
                      {"independence_assumed", true}};
    return result;
}

// ---------------------------------------------------------------------
// counterexample

ExperimentResult run_counterexample(const json &config) {
    std::vector<Rational> thetas;
    for (const auto &t : config.at("theta_rationals")) {
        thetas.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>()});
    }
    std::vector<double> targets;
    if (config.contains("targets")) {
        targets = config["targets"].get<std::vector<double>>();
    }
    const auto report = counterexample_enumerate(thetas, targets);

    ExperimentResult result;
    std::vector<std::string> header{"tuple"};
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        header.push_back("psi_" + std::to_string(i + 1));
    }
    result.csv = csv_row(header);
    for (std::size_t t = 0; t < report.tuples.size(); ++t) {
        std::vector<std::string> row{std::to_string(t)};
        for (double v : report.tuples[t]) {
            row.push_back(format_double(v));
        }
        result.csv += csv_row(row);
    }
    result.summary = {{"period", report.period},
                      {"distinct_tuples", report.tuples.size()}};
    if (report.error_floor) {
        result.summary["error_floor"] = *report.error_floor;
    }
    return result;
}

// ---------------------------------------------------------------------
// classify

std::vector<Region> parse_regions(const json &config) {
    std::vector<Region> regions;
    for (const auto &r : config.at("regions")) {
        Region region;
        region.label = r.at("label").get<double>();
        if (r.contains("points")) {
            region.points = r["points"].get<std::vector<std::vector<double>>>();
        } else {
            const auto box = r.at("box").get<std::vector<std::vector<double>>>();
            const std::size_t per_dim = r.value("points_per_dim", std::size_t{5});
            for (auto x : unit_grid(box.size(), per_dim)) {
                for (std::size_t i = 0; i < box.size(); ++i) {
                    x[i] = box[i][0] + x[i] * (box[i][1] - box[i][0]);
                }
                region.points.push_back(std::move(x));
            }
        }
        regions.push_back(std::move(region));
    }
    return regions;
}

ExperimentResult run_classify(const json &config) {
    const auto regions = parse_regions(config);
    const auto &b = config.at("backend");
    ClassifyBackend backend;
    const auto kind = b.at("kind").get<std::string>();
    if (kind == "BERNSTEIN") {
        backend = BernsteinBackend{b.at("n").get<std::size_t>()};
    } else if (kind == "LEAST_SQUARES") {
        backend = LeastSquaresBackend{FeatureMapSpec::from_json(b.at("feature_map")),
                                      b.value("ridge_lambda", 0.0)};
    } else {
        throw std::invalid_argument("unknown classify backend: " + kind);
    }

    const auto report = classify_regions(regions, backend);

    ExperimentResult result;
    result.csv = csv_row({"point", "label", "prediction", "separated"});
    std::size_t idx = 0;
    for (const auto &region : regions) {
        for (std::size_t p = 0; p < region.points.size(); ++p, ++idx) {
            const double f = report.predictions[idx];
            result.csv += csv_row(
                {std::to_string(idx), format_double(region.label), format_double(f),
                 std::abs(f - region.label) < report.delta ? "1" : "0"});
        }
    }
    const double min_accuracy = config.value("min_accuracy", 0.0);
    const bool pass = report.accuracy >= min_accuracy;
    result.summary = {{"delta", report.delta},
                      {"total", report.total},
                      {"separated", report.separated},
                      {"accuracy", report.accuracy},
                      {"pass", pass}};
    result.status = pass ? experiment_ok : experiment_assertion_failed;
    return result;
}

}  // namespace

ExperimentOutcome run_experiment(const nlohmann::json &config,
                                 const std::string &out_dir, bool verbose) {
    const std::string experiment = config.at("experiment").get<std::string>();
    if (config.contains("schema_version") &&
        config["schema_version"].get<int>() != schema_version) {
        throw std::invalid_argument("unsupported schema_version");
    }

    ExperimentResult result;
    if (experiment == "oracle-check") {
        result = run_oracle_check(config);
    } else if (experiment == "dedup-count") {
        result = run_dedup_count(config);
    } else if (experiment == "fit") {
        result = run_fit(config);
    } else if (experiment == "bernstein") {
        result = run_bernstein(config);
    } else if (experiment == "rate-curve") {
        result = run_rate_curve(config, verbose);
    } else if (experiment == "sequential") {
        result = run_sequential(config);
    } else if (experiment == "counterexample") {
        result = run_counterexample(config);
    } else if (experiment == "classify") {
        result = run_classify(config);
    } else {
        throw std::invalid_argument("unknown experiment: " + experiment);
    }

    std::string base = config.value("output_path", std::string{});
    if (base.empty()) {
        base = experiment;
        std::replace(base.begin(), base.end(), '-', '_');
    }

    ExperimentOutcome outcome;
    outcome.status = result.status;
    outcome.summary = {{"schema_version", schema_version},
                       {"experiment", experiment},
                       {"seed", config.value("seed", std::uint64_t{0})}};
    outcome.summary.update(result.summary);

    std::filesystem::create_directories(out_dir);
    outcome.csv_path = (std::filesystem::path(out_dir) / (base + ".csv")).string();
    outcome.summary_path =
        (std::filesystem::path(out_dir) / (base + ".json")).string();

    std::ofstream csv(outcome.csv_path, std::ios::binary);
    csv << result.csv;
    std::ofstream js(outcome.summary_path, std::ios::binary);
    js << outcome.summary.dump(2) << "\n";
    if (!csv || !js) {
        throw std::runtime_error("failed to write result files");
    }
    return outcome;
}

}  // namespace qfm
