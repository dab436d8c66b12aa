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

#include "qfm/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qfm/tolerances.hpp"

namespace qfm {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool tuple_matches(const std::vector<double> &a, const std::vector<double> &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol::value_set) {
            return false;
        }
    }
    return true;
}

double envelope(std::span<const double> a, std::span<const double> g, double w) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        e = std::max(e, std::abs(w * a[i] - g[i]));
    }
    return e;
}

}  // namespace

double min_weight_max_error(std::span<const double> a, std::span<const double> g) {
    if (a.size() != g.size() || a.empty()) {
        throw std::invalid_argument("min_weight_max_error: size mismatch");
    }
    // Candidate minimizers: crossings of the lines +-(w a_i - g_i), plus the
    // zeros of each line and w = 0.
    std::vector<double> candidates{0.0};
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != 0.0) {
            candidates.push_back(g[i] / a[i]);
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            for (double si : {1.0, -1.0}) {
                for (double sj : {1.0, -1.0}) {
                    const double denom = si * a[i] - sj * a[j];
                    if (denom != 0.0) {
                        candidates.push_back((si * g[i] - sj * g[j]) / denom);
                    }
                }
            }
        }
    }
    double best = envelope(a, g, candidates.front());
    for (double w : candidates) {
        best = std::min(best, envelope(a, g, w));
    }
    return best;
}

CounterexampleReport counterexample_enumerate(
    std::span<const Rational> theta_rationals, std::span<const double> targets) {
    if (theta_rationals.empty()) {
        throw std::invalid_argument("counterexample_enumerate: no theta values");
    }
    if (!targets.empty() && targets.size() != theta_rationals.size()) {
        throw std::invalid_argument("counterexample_enumerate: target size mismatch");
    }

    // Common denominator s = lcm of the reduced denominators.
    std::uint64_t s = 1;
    std::vector<std::int64_t> num(theta_rationals.size());
    std::vector<std::int64_t> den(theta_rationals.size());
    for (std::size_t i = 0; i < theta_rationals.size(); ++i) {
        if (theta_rationals[i].den == 0) {
            throw std::domain_error("counterexample_enumerate: zero denominator");
        }
        std::int64_t n = theta_rationals[i].num;
        std::int64_t d = theta_rationals[i].den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(std::abs(n), d);
        num[i] = g == 0 ? 0 : n / g;
        den[i] = g == 0 ? 1 : d / g;
        s = std::lcm(s, static_cast<std::uint64_t>(den[i]));
    }

    CounterexampleReport report;
    report.period = s;
    for (std::uint64_t n = 1; n <= s; ++n) {
        std::vector<double> tuple(theta_rationals.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            // frac(n * num/den) computed exactly on integers.
            const std::int64_t r =
                ((static_cast<std::int64_t>(n) * num[i]) % den[i] + den[i]) % den[i];
            tuple[i] = std::cos(two_pi * static_cast<double>(r) /
                                static_cast<double>(den[i]));
        }
        const bool seen = std::any_of(
            report.tuples.begin(), report.tuples.end(),
            [&](const auto &t) { return tuple_matches(t, tuple); });
        if (!seen) {
            report.tuples.push_back(std::move(tuple));
        }
    }

    if (!targets.empty()) {
        double floor = std::numeric_limits<double>::infinity();
        for (const auto &tuple : report.tuples) {
            floor = std::min(floor, min_weight_max_error(tuple, targets));
        }
        report.error_floor = floor;
    }
    return report;
}

}  // namespace qfm
