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

#include <doctest.h>

#include "qfm/classify.hpp"

using namespace qfm;

namespace {

Region interval(double lo, double hi, std::size_t count, double label) {
    Region r;
    r.label = label;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0
                                    : static_cast<double>(i) /
                                          static_cast<double>(count - 1);
        r.points.push_back({lo + t * (hi - lo)});
    }
    return r;
}

}  // namespace

TEST_CASE("two intervals separate fully with a degree-32 approximator") {
    const std::vector<Region> regions{interval(0.0, 0.3, 50, -1.0),
                                      interval(0.7, 1.0, 50, 1.0)};
    const auto report = classify_regions(regions, BernsteinBackend{32});
    CHECK(report.delta == doctest::Approx(1.0));
    CHECK(report.total == 100);
    CHECK(report.separated == 100);
    CHECK(report.accuracy == 1.0);
}

TEST_CASE("least-squares backend separates the same two intervals") {
    const std::vector<Region> regions{interval(0.0, 0.3, 25, -1.0),
                                      interval(0.7, 1.0, 25, 1.0)};
    const LeastSquaresBackend backend{FeatureMapSpec::parallel_arccos(1, 6), 0.0};
    const auto report = classify_regions(regions, backend);
    CHECK(report.accuracy == 1.0);
}

TEST_CASE("delta is half the minimum label gap") {
    const std::vector<Region> regions{interval(0.0, 0.2, 5, 0.0),
                                      interval(0.4, 0.6, 5, 1.0),
                                      interval(0.8, 1.0, 5, 3.0)};
    const auto report = classify_regions(regions, BernsteinBackend{8});
    CHECK(report.delta == doctest::Approx(0.5));
}

TEST_CASE("fewer than two distinct labels is a configuration error") {
    const std::vector<Region> one{interval(0.0, 0.5, 5, 1.0)};
    CHECK_THROWS_AS(classify_regions(one, BernsteinBackend{8}),
                    std::invalid_argument);
    const std::vector<Region> same{interval(0.0, 0.3, 5, 1.0),
                                   interval(0.7, 1.0, 5, 1.0)};
    CHECK_THROWS_AS(classify_regions(same, BernsteinBackend{8}),
                    std::invalid_argument);
}
