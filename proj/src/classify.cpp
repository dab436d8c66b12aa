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

#include "qfm/classify.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "qfm/bernstein.hpp"
#include "qfm/linear_model.hpp"

namespace qfm {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return s;
}

// Label of the region closest to x (ties go to the earlier region).
double nearest_region_label(std::span<const Region> regions,
                            std::span<const double> x) {
    double best = std::numeric_limits<double>::infinity();
    double label = regions.front().label;
    for (const auto &region : regions) {
        for (const auto &p : region.points) {
            const double d2 = squared_distance(p, x);
            if (d2 < best) {
                best = d2;
                label = region.label;
            }
        }
    }
    return label;
}

double half_min_label_gap(std::span<const Region> regions) {
    std::set<double> labels;
    for (const auto &r : regions) {
        labels.insert(r.label);
    }
    if (labels.size() < 2) {
        throw std::invalid_argument("classification needs at least 2 distinct labels");
    }
    double gap = std::numeric_limits<double>::infinity();
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        for (auto jt = std::next(it); jt != labels.end(); ++jt) {
            gap = std::min(gap, std::abs(*it - *jt));
        }
    }
    return gap / 2.0;
}

}  // namespace

ClassificationReport classify_regions(std::span<const Region> regions,
                                      const ClassifyBackend &backend) {
    if (regions.empty() || regions.front().points.empty()) {
        throw std::invalid_argument("classification needs nonempty regions");
    }
    const std::size_t d = regions.front().points.front().size();
    for (const auto &r : regions) {
        for (const auto &p : r.points) {
            if (p.size() != d) {
                throw std::invalid_argument("inconsistent point dimension");
            }
        }
    }

    ClassificationReport report;
    report.delta = half_min_label_gap(regions);

    std::function<double(std::span<const double>)> predict;
    if (const auto *bb = std::get_if<BernsteinBackend>(&backend)) {
        auto approx = BernsteinApproximator::from_function(
            [&](std::span<const double> x) {
                return nearest_region_label(regions, x);
            },
            d, bb->degree);
        predict = [approx = std::move(approx)](std::span<const double> x) {
            return approx.evaluate(x);
        };
    } else {
        const auto &lsb = std::get<LeastSquaresBackend>(backend);
        std::vector<std::vector<double>> points;
        std::vector<double> labels;
        for (const auto &r : regions) {
            for (const auto &p : r.points) {
                points.push_back(p);
                labels.push_back(r.label);
            }
        }
        auto dm = design_matrix_parallel(lsb.spec, points);
        const Eigen::Map<const Eigen::VectorXd> y(
            labels.data(), static_cast<Eigen::Index>(labels.size()));
        auto model = fit_least_squares(dm, y, lsb.ridge_lambda);
        const auto alphas = enumerate_observables_dedup(lsb.spec.n_qubits, lsb.spec.d);
        const std::size_t dd = lsb.spec.d;
        predict = [model = std::move(model), alphas,
                   dd](std::span<const double> x) {
            double f = 0.0;
            for (std::size_t k = 0; k < alphas.size(); ++k) {
                f += model.weights[static_cast<Eigen::Index>(k)] *
                     basis_parallel_closed(x, alphas[k], dd);
            }
            return f;
        };
    }

    for (const auto &region : regions) {
        for (const auto &p : region.points) {
            const double f = predict(p);
            report.predictions.push_back(f);
            ++report.total;
            if (std::abs(f - region.label) < report.delta) {
                ++report.separated;
            }
        }
    }
    report.accuracy = static_cast<double>(report.separated) /
                      static_cast<double>(report.total);
    return report;
}

}  // namespace qfm
