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

#include "qfm/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qfm {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double fractional(double v) { return v - std::floor(v); }

}  // namespace

SequentialSearchResult sequential_search(std::span<const double> theta_values,
                                         std::span<const double> targets,
                                         double epsilon, std::uint64_t n_max) {
    if (theta_values.size() != targets.size() || theta_values.empty()) {
        throw std::invalid_argument("sequential_search: theta/target size mismatch");
    }
    if (epsilon <= 0.0 || n_max < 1) {
        throw std::invalid_argument("sequential_search: need eps > 0, n_max >= 1");
    }

    const std::size_t m = targets.size();
    double max_abs = 0.0;
    for (double g : targets) {
        max_abs = std::max(max_abs, std::abs(g));
    }
    const double beta = 1.0 + max_abs;
    const double phase_tol = epsilon / (two_pi * beta);

    std::vector<double> gamma(m);
    for (std::size_t i = 0; i < m; ++i) {
        gamma[i] = std::acos(targets[i] / beta) / two_pi;
    }

    SequentialSearchResult result;
    result.weight = beta;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        bool phase_hit = true;
        bool value_hit = true;
        double err = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double frac = fractional(static_cast<double>(n) * theta_values[i]);
            if (std::abs(frac - gamma[i]) >= phase_tol) {
                phase_hit = false;
            }
            const double e = std::abs(beta * std::cos(two_pi * frac) - targets[i]);
            err = std::max(err, e);
            if (e >= epsilon) {
                value_hit = false;
                if (!phase_hit) {
                    break;
                }
            }
        }
        if (phase_hit || value_hit) {
            result.found = true;
            result.iteration = n;
            result.max_error = err;
            return result;
        }
    }
    return result;
}

}  // namespace qfm
