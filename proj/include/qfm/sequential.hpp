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
#include <span>

namespace qfm {

/// Outcome of the sequential-scenario iteration search. `found == false`
/// is a normal return: density guarantees existence only for rationally
/// independent theta, and the scan budget is finite.
struct SequentialSearchResult {
    bool found = false;
    std::uint64_t iteration = 0;  // first qualifying n
    double weight = 0.0;          // w = beta = 1 + max |g(x_i)|
    double max_error = 0.0;       // max_i |w psi_n(x_i) - g(x_i)| at that n
};

/// Scans n = 1..n_max for the first n whose fractional parts land within
/// eps/(2*pi*beta) of the phase targets gamma_i = arccos(g_i/beta)/(2*pi),
/// accepting also any n whose direct output error max_i |w psi_n - g_i|
/// falls below eps.
SequentialSearchResult sequential_search(std::span<const double> theta_values,
                                         std::span<const double> targets,
                                         double epsilon, std::uint64_t n_max);

}  // namespace qfm
