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

#include "qfm/rate_bound.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qfm {

namespace {

constexpr std::size_t delta_grid_points = 400;
constexpr double delta_grid_lo = 1e-6;

// Calls fn on each of the 400 log-spaced delta values in (1e-6, sqrt(d)].
template <typename Fn>
void for_each_delta(std::size_t d, Fn &&fn) {
    const double hi = std::sqrt(static_cast<double>(d));
    const double log_lo = std::log(delta_grid_lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < delta_grid_points; ++i) {
        const double t = static_cast<double>(i + 1) /
                         static_cast<double>(delta_grid_points);
        fn(std::exp(log_lo + t * (log_hi - log_lo)));
    }
}

}  // namespace

RateBoundSpec RateBoundSpec::lipschitz_target(std::size_t d, double C) {
    RateBoundSpec spec;
    spec.d = d;
    spec.lipschitz_C = C;
    spec.big_M = C * std::sqrt(static_cast<double>(d));
    spec.lipschitz = true;
    spec.validate();
    return spec;
}

double RateBoundSpec::omega(double delta) const {
    if (delta < 0.0) {
        throw std::domain_error("omega: delta must be nonnegative");
    }
    return lipschitz ? lipschitz_C * delta : omega_table(delta);
}

void RateBoundSpec::validate() const {
    if (d < 1 || big_M <= 0.0) {
        throw std::invalid_argument("RateBoundSpec needs d >= 1, M > 0");
    }
    if (lipschitz && lipschitz_C <= 0.0) {
        throw std::invalid_argument("RateBoundSpec needs C > 0");
    }
    if (!lipschitz && !omega_table) {
        throw std::invalid_argument("RateBoundSpec needs a tabulated omega");
    }
}

double bound_s4(const RateBoundSpec &spec, std::size_t n, double delta) {
    spec.validate();
    if (n < 1 || delta <= 0.0) {
        throw std::invalid_argument("bound_s4 needs n >= 1, delta > 0");
    }
    const double dd = static_cast<double>(spec.d);
    const double tail = std::pow(1.0 + dd / (4.0 * static_cast<double>(n) *
                                             delta * delta),
                                 dd) -
                        1.0;
    return spec.omega(delta) + spec.big_M * tail;
}

double min_bound_s4(const RateBoundSpec &spec, std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for_each_delta(spec.d, [&](double delta) {
        best = std::min(best, bound_s4(spec, n, delta));
    });
    return best;
}

double degree_threshold_numeric(const RateBoundSpec &spec, double epsilon) {
    spec.validate();
    if (epsilon >= 2.0 * spec.big_M) {
        throw std::invalid_argument("degree threshold requires eps < 2M");
    }
    const double dd = static_cast<double>(spec.d);
    double best = std::numeric_limits<double>::infinity();
    for_each_delta(spec.d, [&](double delta) {
        const double w = spec.omega(delta);
        if (w < epsilon) {
            best = std::min(best, spec.big_M * dd * dd /
                                      (2.0 * (epsilon - w) * delta * delta));
        }
    });
    if (!std::isfinite(best)) {
        throw std::domain_error("no delta with omega(delta) < eps on the grid");
    }
    return best;
}

double degree_threshold(const RateBoundSpec &spec, double epsilon) {
    spec.validate();
    if (epsilon >= 2.0 * spec.big_M) {
        throw std::invalid_argument("degree threshold requires eps < 2M");
    }
    if (spec.lipschitz) {
        const double C = spec.lipschitz_C;
        const double dd = static_cast<double>(spec.d);
        return 27.0 * C * C * C * std::pow(dd, 2.5) /
               (8.0 * epsilon * epsilon * epsilon);
    }
    return degree_threshold_numeric(spec, epsilon);
}

std::size_t qubits_for_epsilon(const RateBoundSpec &spec, double epsilon) {
    const double m = degree_threshold(spec, epsilon);
    return spec.d * (static_cast<std::size_t>(std::floor(m)) + 1);
}

std::size_t jackson_qubits(const RateBoundSpec &spec, double epsilon,
                           double jackson_A) {
    spec.validate();
    if (epsilon <= 0.0 || jackson_A <= 0.0) {
        throw std::invalid_argument("jackson_qubits needs eps > 0, A > 0");
    }
    const double n = jackson_A * spec.lipschitz_C *
                     std::pow(static_cast<double>(spec.d), 1.5) / epsilon;
    return static_cast<std::size_t>(std::ceil(n));
}

}  // namespace qfm
