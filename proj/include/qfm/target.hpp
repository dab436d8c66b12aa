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

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

namespace qfm {

enum class TargetKind {
    Poly,      // sum of monomial terms
    AbsShift,  // |x_1 - shift|
    Cos,       // cos(2*pi * freq . x)
    Table,     // explicit (x, g(x)) pairs, nearest-point lookup
};

struct MonomialTerm {
    double coeff = 0.0;
    std::vector<std::size_t> powers;  // one exponent per input coordinate
};

/// Target function g for fitting and bound experiments.
struct TargetSpec {
    TargetKind kind = TargetKind::Poly;
    std::vector<MonomialTerm> terms;  // POLY
    double shift = 0.5;               // ABS_SHIFT
    std::vector<double> freq;         // COS
    std::vector<std::pair<std::vector<double>, double>> table;  // TABLE
    std::optional<double> lipschitz_C;

    double operator()(std::span<const double> x) const;

    nlohmann::json to_json() const;
    static TargetSpec from_json(const nlohmann::json &j);
};

}  // namespace qfm
