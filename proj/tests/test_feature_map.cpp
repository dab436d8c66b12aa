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
#include <map>
#include <numbers>

#include <doctest.h>
#include <json.hpp>

#include <Eigen/Dense>

#include "qfm/feature_map.hpp"
#include "qfm/tolerances.hpp"
#include "test_util.hpp"

using namespace qfm;

TEST_CASE("arccos encoding at x = 0.25 gives amplitudes (0.5, sqrt(0.75))") {
    const auto spec = FeatureMapSpec::parallel_arccos(1, 1);
    const double x[1] = {0.25};
    const auto s = encode(spec, x);
    CHECK(s.amplitudes()[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.amplitudes()[1].real() ==
          doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
}

TEST_CASE("arccos encoding of all-ones input is the zero state") {
    const auto spec = FeatureMapSpec::parallel_arccos(2, 5);
    const std::vector<double> x{1.0, 1.0};
    const auto s = encode(spec, x);
    CHECK(std::abs(s.amplitudes()[0] - 1.0) < 1e-14);
}

TEST_CASE("cyclic assignment: x = (0, 1), d = 2, N = 4 flips qubits 0 and 2") {
    const auto spec = FeatureMapSpec::parallel_arccos(2, 4);
    const std::vector<double> x{0.0, 1.0};
    const auto s = encode(spec, x);
    // Qubits 0 and 2 carry x[0] = 0 (flip), qubits 1 and 3 carry x[1] = 1.
    const std::size_t k = 0b0101;
    CHECK(std::abs(std::abs(s.amplitudes()[k]) - 1.0) < 1e-14);
}

TEST_CASE("closed parallel basis examples") {
    AlphaIndex zero{std::vector<std::uint8_t>{0}};
    const double x25[1] = {0.25};
    CHECK(basis_parallel_closed(x25, zero, 1) == 1.0);

    AlphaIndex one{std::vector<std::uint8_t>{1}};
    CHECK(basis_parallel_closed(x25, one, 1) == doctest::Approx(-0.5));

    const double xhalf[1] = {0.5};
    CHECK(basis_parallel_closed(xhalf, one, 1) == 0.0);
}

TEST_CASE("activation basis trivial values") {
    ActivationSpec act;
    act.kind = ActivationKind::Tanh;
    act.weights = {{0.0}};
    act.biases = {0.0};
    const double x[1] = {0.7};
    CHECK(basis_activation_closed(x, 0, act) == 0.0);

    act.kind = ActivationKind::Cosine;
    CHECK(basis_activation_closed(x, 0, act) == 1.0);

    act.kind = ActivationKind::Tanh;
    act.weights = {{1.0}};
    const double xh[1] = {0.5};
    CHECK(basis_activation_closed(xh, 0, act) ==
          doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
}

TEST_CASE("activation parameters are reproducible from the seed alone") {
    const auto a = ActivationSpec::sample(ActivationKind::Tanh, 3, 5, 42);
    const auto b = ActivationSpec::sample(ActivationKind::Tanh, 3, 5, 42);
    CHECK(a.weights == b.weights);
    CHECK(a.biases == b.biases);
    for (const auto &w : a.weights) {
        for (double v : w) {
            CHECK(v >= -2.0);
            CHECK(v <= 2.0);
        }
    }
}

TEST_CASE("sequential basis closed form") {
    CHECK(basis_sequential_closed(0.0, 7) == 1.0);
    CHECK(basis_sequential_closed(0.25, 1) ==
          doctest::Approx(0.0).epsilon(1e-15));
    const double t = 3.0 * std::numbers::sqrt2;
    const double frac = t - std::floor(t);
    CHECK(basis_sequential_closed(std::numbers::sqrt2, 3) ==
          doctest::Approx(std::cos(2.0 * std::numbers::pi * frac)).epsilon(1e-14));
}

TEST_CASE("closed forms agree with the statevector oracle over 1000 draws") {
    qfm_test::TestRng rng(101);
    double max_diff = 0.0;
    for (int t = 0; t < 1000; ++t) {
        double closed = 0.0;
        double oracle = 0.0;
        switch (t % 3) {
            case 0: {
                const std::size_t d = 1 + rng.integer(2);
                const std::size_t n = d + rng.integer(10 - d + 1);
                const auto spec = FeatureMapSpec::parallel_arccos(d, n);
                const auto x = rng.point(d);
                const auto alphas = enumerate_observables_dedup(n, d);
                const auto &alpha = alphas[rng.integer(alphas.size())];
                closed = basis_parallel_closed(x, alpha, d);
                oracle = expectation(encode(spec, x), alpha.to_observable());
                break;
            }
            case 1: {
                const std::size_t d = 1 + rng.integer(2);
                const std::size_t n = 1 + rng.integer(10);
                const auto kind = static_cast<ActivationKind>(rng.integer(3));
                const auto spec =
                    FeatureMapSpec::parallel_activation(d, n, kind, rng.integer(1u << 30));
                const auto x = rng.point(d);
                const std::size_t q = rng.integer(n);
                closed = basis_activation_closed(x, q, *spec.activation);
                oracle = expectation(encode(spec, x),
                                     ProductObservable::single_z(n, q));
                break;
            }
            default: {
                const std::size_t m = 1 + rng.integer(4);
                std::vector<double> thetas(m);
                for (auto &v : thetas) {
                    v = rng.uniform(0.0, 2.0);
                }
                const auto spec = FeatureMapSpec::sequential(thetas);
                const std::size_t idx = rng.integer(m);
                const std::size_t reps = 1 + rng.integer(100);
                const double xi[1] = {static_cast<double>(idx)};
                closed = basis_sequential_closed(thetas[idx], reps);
                oracle = expectation(encode(spec, xi, reps),
                                     ProductObservable::single_z(1, 0));
                break;
            }
        }
        CHECK(closed >= -1.0 - 1e-15);
        CHECK(closed <= 1.0 + 1e-15);
        max_diff = std::max(max_diff, std::abs(closed - oracle));
    }
    CHECK(max_diff < tol::oracle);
}

TEST_CASE("dedup representative counts") {
    CHECK(enumerate_observables_dedup(1, 1).size() == 2);
    CHECK(enumerate_observables_dedup(6, 2).size() == 16);
    CHECK(observable_count_bound(6, 2) == 16);
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 1}, {5, 2}, {9, 3}}) {
        CHECK(enumerate_observables_dedup(n, d).size() <=
              observable_count_bound(n, d));
    }
}

TEST_CASE("all members of each dedup class agree in closed form (N <= 8, d <= 3)") {
    qfm_test::TestRng rng(303);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = d; n <= 8; ++n) {
            // Group every alpha by its per-residue-class nonzero counts.
            std::map<std::vector<std::size_t>, std::vector<AlphaIndex>> classes;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                AlphaIndex alpha;
                alpha.bits.resize(n);
                std::vector<std::size_t> key(d, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    alpha.bits[i] = (mask >> i) & 1;
                    key[i % d] += alpha.bits[i];
                }
                classes[key].push_back(std::move(alpha));
            }
            CHECK(classes.size() == enumerate_observables_dedup(n, d).size());
            for (const auto &[key, members] : classes) {
                for (int t = 0; t < 20; ++t) {
                    const auto x = rng.point(d);
                    const double ref = basis_parallel_closed(x, members.front(), d);
                    for (const auto &m : members) {
                        CHECK(std::abs(basis_parallel_closed(x, m, d) - ref) <
                              tol::dedup_agreement);
                    }
                }
            }
        }
    }
}

TEST_CASE("kernel closed form and trivial values") {
    const auto spec = FeatureMapSpec::parallel_arccos(1, 1);
    const double a[1] = {0.0};
    const double b[1] = {1.0};
    const double p[1] = {0.25};
    const double q[1] = {0.75};
    CHECK(kernel(spec, p, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kernel(spec, a, b) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(kernel(spec, p, q) ==
          doctest::Approx(std::cos(std::acos(0.5) - std::acos(std::sqrt(0.75))))
              .epsilon(1e-14));
}

TEST_CASE("kernel matches the statevector inner product") {
    qfm_test::TestRng rng(404);
    const auto spec = FeatureMapSpec::parallel_activation(
        2, 6, ActivationKind::Cosine, 9);
    for (int t = 0; t < 20; ++t) {
        const auto x = rng.point(2);
        const auto y = rng.point(2);
        const double closed = kernel(spec, x, y);
        const double oracle = inner_product(encode(spec, x), encode(spec, y)).real();
        CHECK(std::abs(closed - oracle) < tol::oracle);
    }
}

TEST_CASE("kernel Gram matrix of 20 points is symmetric and PSD per scenario") {
    qfm_test::TestRng rng(505);
    std::vector<FeatureMapSpec> specs{
        FeatureMapSpec::parallel_arccos(2, 6),
        FeatureMapSpec::parallel_activation(2, 6, ActivationKind::Tanh, 31),
    };
    std::vector<double> thetas(20);
    for (auto &v : thetas) {
        v = rng.uniform(0.0, 2.0);
    }
    specs.push_back(FeatureMapSpec::sequential(thetas));

    for (const auto &spec : specs) {
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 20; ++i) {
            if (spec.variant == Variant::Sequential) {
                pts.push_back({static_cast<double>(i)});
            } else {
                pts.push_back(rng.point(spec.d));
            }
        }
        Eigen::MatrixXd gram(20, 20);
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                gram(i, j) = kernel(spec, pts[i], pts[j]);
            }
        }
        for (int i = 0; i < 20; ++i) {
            CHECK(std::abs(gram(i, i) - 1.0) < tol::gram_symmetry);
            for (int j = 0; j < 20; ++j) {
                CHECK(std::abs(gram(i, j) - gram(j, i)) < tol::gram_symmetry);
            }
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
        CHECK(eig.eigenvalues().minCoeff() >= tol::gram_min_eigenvalue);
    }
}

TEST_CASE("sequential tuples with rational theta have period dividing s") {
    // theta = (1/6, 5/6, 1/2): common denominator 6.
    const std::vector<double> thetas{1.0 / 6.0, 5.0 / 6.0, 0.5};
    const std::size_t s = 6;
    for (std::size_t n = 1; n <= 24; ++n) {
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            CHECK(basis_sequential_closed(thetas[i], n) ==
                  doctest::Approx(basis_sequential_closed(thetas[i], n + s))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("spec validation rejects malformed maps") {
    CHECK_THROWS_AS(FeatureMapSpec::parallel_arccos(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(FeatureMapSpec::sequential({}), std::invalid_argument);
    const auto spec = FeatureMapSpec::parallel_arccos(1, 1);
    const double bad[1] = {1.5};
    CHECK_THROWS_AS(encode(spec, bad), std::domain_error);
}

TEST_CASE("feature map JSON round-trip") {
    const auto arc = FeatureMapSpec::parallel_arccos(2, 4);
    const auto arc2 = FeatureMapSpec::from_json(arc.to_json());
    CHECK(arc2.variant == Variant::ParallelArccos);
    CHECK(arc2.d == 2);
    CHECK(arc2.n_qubits == 4);

    const auto act = FeatureMapSpec::parallel_activation(
        2, 3, ActivationKind::PiecewiseSign, 77);
    const auto act2 = FeatureMapSpec::from_json(act.to_json());
    CHECK(act2.activation->weights == act.activation->weights);
    CHECK(act2.activation->biases == act.activation->biases);
    CHECK(act2.activation->kind == ActivationKind::PiecewiseSign);

    const auto seq = FeatureMapSpec::sequential({0.25, 1.5});
    const auto seq2 = FeatureMapSpec::from_json(seq.to_json());
    CHECK(seq2.theta_values == seq.theta_values);
}
