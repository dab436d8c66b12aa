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

#include <variant>
#include <vector>

#include "qfm/feature_map.hpp"

namespace qfm {

/// Labeled point set (caller asserts regions are pairwise disjoint).
struct Region {
    std::vector<std::vector<double>> points;
    double label = 0.0;
};

struct BernsteinBackend {
    std::size_t degree = 32;
};

struct LeastSquaresBackend {
    FeatureMapSpec spec;
    double ridge_lambda = 0.0;
};

using ClassifyBackend = std::variant<BernsteinBackend, LeastSquaresBackend>;

struct ClassificationReport {
    double delta = 0.0;        // half the minimum label gap
    std::size_t total = 0;     // region points evaluated
    std::size_t separated = 0; // points with |f(x) - c_i| < delta
    double accuracy = 0.0;
    std::vector<double> predictions;  // f(x) per point, region order
};

/// Fits an extension of the labels (nearest-region label off the regions)
/// and reports per-point separation at delta = half the minimum label gap.
ClassificationReport classify_regions(std::span<const Region> regions,
                                      const ClassifyBackend &backend);

}  // namespace qfm
