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

#include <functional>

namespace qfm {

/// Inputs for the Bernstein error bound and qubit-count estimates.
/// omega is the modulus of continuity; when `lipschitz` is set it is
/// C * delta and closed forms apply.
struct RateBoundSpec {
    std::size_t d = 1;
    double lipschitz_C = 1.0;
    double big_M = 1.0;  // any M >= omega(sqrt(d))
    bool lipschitz = true;
    std::function<double(double)> omega_table;  // used when !lipschitz

    static RateBoundSpec lipschitz_target(std::size_t d, double C);

    double omega(double delta) const;
    void validate() const;
};

/// Uniform error bound omega(delta) + M*((1 + d/(4 n delta^2))^d - 1) for
/// the degree-n Bernstein approximator.
double bound_s4(const RateBoundSpec &spec, std::size_t n, double delta);

/// min over the delta grid (400 log-spaced points in (1e-6, sqrt(d)]) of
/// bound_s4(n, delta).
double min_bound_s4(const RateBoundSpec &spec, std::size_t n);

/// Degree threshold m(eps) = inf over {delta > 0, omega(delta) < eps} of
/// M d^2 / (2 (eps - omega(delta)) delta^2). Closed form
/// 27 C^3 d^{5/2} / (8 eps^3) on the Lipschitz path, grid minimization
/// otherwise. Requires eps < 2M.
double degree_threshold(const RateBoundSpec &spec, double epsilon);

/// Same threshold evaluated purely by grid minimization (cross-check path).
double degree_threshold_numeric(const RateBoundSpec &spec, double epsilon);

/// N = d * (floor(m(eps)) + 1) qubits sufficient for an eps-approximator.
std::size_t qubits_for_epsilon(const RateBoundSpec &spec, double epsilon);

/// Existence-only qubit count ceil(A * C * d^{3/2} / eps) from the Jackson
/// rate. The constant A is not derivable here; it shapes the bound only.
std::size_t jackson_qubits(const RateBoundSpec &spec, double epsilon,
                           double jackson_A = 1.0);

}  // namespace qfm
