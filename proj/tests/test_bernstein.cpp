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

#include <cmath>

#include <doctest.h>
#include <json.hpp>

#include "qfm/bernstein.hpp"
#include "qfm/feature_map.hpp"
#include "qfm/tolerances.hpp"
#include "test_util.hpp"

using namespace qfm;

TEST_CASE("constant targets are reproduced exactly") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double>) { return 3.25; }, 2, 5);
    qfm_test::TestRng rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto x = rng.point(2);
        CHECK(approx.evaluate(x) == doctest::Approx(3.25).epsilon(1e-15));
    }
}

TEST_CASE("degree-2 approximator of g(x) = x is the identity") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double> x) { return x[0]; }, 1, 2);
    for (double x : {0.0, 0.1, 0.35, 0.5, 0.8, 1.0}) {
        const double xs[1] = {x};
        CHECK(approx.evaluate(xs) == doctest::Approx(x).epsilon(1e-15));
    }
}

TEST_CASE("corner values reproduce the corner samples exactly") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double> x) { return x[0] * x[0] + 2.0 * x[1]; }, 2, 3);
    const double zero[2] = {0.0, 0.0};
    const double ones[2] = {1.0, 1.0};
    CHECK(approx.evaluate(zero) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(approx.evaluate(ones) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("d=1, n=4, g(x)=x^2 evaluates to 0.3125 at x=0.5") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double> x) { return x[0] * x[0]; }, 1, 4);
    const double xs[1] = {0.5};
    CHECK(approx.evaluate(xs) == doctest::Approx(0.3125).epsilon(1e-15));
}

TEST_CASE("evaluation stays inside the sample hull") {
    qfm_test::TestRng rng(5);
    std::vector<double> samples(36);
    for (auto &s : samples) {
        s = rng.uniform(-3.0, 3.0);
    }
    const auto approx = BernsteinApproximator::build(samples, 2, 5);
    for (int t = 0; t < 100; ++t) {
        const auto x = rng.point(2);
        const double v = approx.evaluate(x);
        CHECK(v >= approx.sample_min() - 1e-12);
        CHECK(v <= approx.sample_max() + 1e-12);
    }
}

TEST_CASE("weights match g(p/n) times the binomial product") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double> x) { return x[0] + 1.0; }, 1, 3);
    const auto w = approx.weights();
    REQUIRE(w.size() == 4);
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx((1.0 / 3.0 + 1.0) * 3.0));
    CHECK(w[2] == doctest::Approx((2.0 / 3.0 + 1.0) * 3.0));
    CHECK(w[3] == doctest::Approx(2.0));
}

TEST_CASE("binomial coefficients are exact at small arguments") {
    CHECK(binomial(0, 0) == 1.0);
    CHECK(binomial(10, 5) == 252.0);
    CHECK(binomial(4, 2) == 6.0);
}

TEST_CASE("projector observable layout follows the i + k*d slot rule") {
    const std::vector<std::size_t> p{1, 2};
    const auto obs = projector_observable(p, 2, 3);
    REQUIRE(obs.factors.size() == 6);
    // Coordinate 0 (p=1): qubits 0, 2, 4; coordinate 1 (p=2): qubits 1, 3, 5.
    CHECK(obs.factors[0] == Factor::ProjPlus);
    CHECK(obs.factors[2] == Factor::ProjMinus);
    CHECK(obs.factors[4] == Factor::ProjMinus);
    CHECK(obs.factors[1] == Factor::ProjPlus);
    CHECK(obs.factors[3] == Factor::ProjPlus);
    CHECK(obs.factors[5] == Factor::ProjMinus);
}

TEST_CASE("evaluator equals the projector-observable quantum output") {
    qfm_test::TestRng rng(9);
    for (std::size_t d : {std::size_t{1}, std::size_t{2}}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto approx = BernsteinApproximator::from_function(
                [](std::span<const double> x) {
                    double v = 0.0;
                    for (double xi : x) {
                        v += std::abs(xi - 0.4);
                    }
                    return v;
                },
                d, n);
            const auto weights = approx.weights();
            const auto degrees = multi_degrees(d, n);
            const auto spec = FeatureMapSpec::parallel_arccos(d, n * d);
            for (int t = 0; t < 50; ++t) {
                const auto x = rng.point(d);
                const auto state = encode(spec, x);
                double quantum = 0.0;
                for (std::size_t k = 0; k < degrees.size(); ++k) {
                    quantum += weights[k] *
                               expectation(state, projector_observable(degrees[k], d, n));
                }
                CHECK(std::abs(approx.evaluate(x) - quantum) < tol::oracle);
            }
        }
    }
}

TEST_CASE("shape errors are rejected") {
    CHECK_THROWS(BernsteinApproximator::build({1.0, 2.0}, 1, 2));
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double>) { return 0.0; }, 1, 2);
    const double bad[1] = {1.5};
    CHECK_THROWS(approx.evaluate(bad));
}

TEST_CASE("bernstein JSON round-trip") {
    const auto approx = BernsteinApproximator::from_function(
        [](std::span<const double> x) { return x[0] * (1.0 - x[1]); }, 2, 3);
    const auto back = BernsteinApproximator::from_json(approx.to_json());
    CHECK(back.dimension() == 2);
    CHECK(back.degree() == 3);
    CHECK(back.samples() == approx.samples());
    qfm_test::TestRng rng(12);
    for (int t = 0; t < 10; ++t) {
        const auto x = rng.point(2);
        CHECK(back.evaluate(x) == approx.evaluate(x));
    }
}
