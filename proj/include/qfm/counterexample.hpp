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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qfm {

/// Exact rational theta value.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Value-set report for rational theta: the sequential basis vector
/// (psi_n(x_1), ..., psi_n(x_M)) is periodic with period dividing s, the
/// common denominator, and takes finitely many tuple values.
struct CounterexampleReport {
    std::uint64_t period = 0;                   // s
    std::vector<std::vector<double>> tuples;    // distinct value tuples
    std::optional<double> error_floor;          // set when targets are given
};

/// Enumerates n = 1..s, collects the distinct tuples, and (given targets)
/// computes the analytic floor min over tuples of min_w max_i |w psi_i - g_i|.
CounterexampleReport counterexample_enumerate(
    std::span<const Rational> theta_rationals,
    std::span<const double> targets = {});

/// Exact min over w of max_i |w a_i - g_i| (convex piecewise-linear
/// envelope; the optimum sits at a pairwise line crossing).
double min_weight_max_error(std::span<const double> a, std::span<const double> g);

}  // namespace qfm
