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

#include "qfm/feature_map.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace qfm {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Uniform double on [-2, 2] from the top 53 bits of one 64-bit draw.
// uniform_real_distribution is implementation-defined, so it is avoided.
double draw_uniform_pm2(std::mt19937_64 &rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return -2.0 + 4.0 * u;
}

double activation_value(ActivationKind kind, double t) {
    switch (kind) {
        case ActivationKind::Tanh:
            return std::tanh(t);
        case ActivationKind::Cosine:
            return std::cos(t);
        case ActivationKind::PiecewiseSign:
            return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
    }
    throw std::logic_error("unknown activation kind");
}

void check_unit_cube(std::span<const double> x, std::size_t d) {
    if (x.size() != d) {
        throw std::invalid_argument("input dimension mismatch");
    }
    for (double xi : x) {
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::domain_error("input component outside [0, 1]");
        }
    }
}

std::size_t sequential_point_index(const FeatureMapSpec &spec,
                                   std::span<const double> x) {
    if (x.size() != 1) {
        throw std::invalid_argument("sequential input is a single point index");
    }
    const double v = x[0];
    const double r = std::round(v);
    if (!(std::abs(v - r) < 1e-9) || r < 0.0 ||
        r >= static_cast<double>(spec.theta_values.size())) {
        throw std::domain_error("sequential input is not a declared point");
    }
    return static_cast<std::size_t>(r);
}

// Rotation angle of qubit `qubit` for either parallel variant.
double parallel_angle(const FeatureMapSpec &spec, std::size_t qubit,
                      std::span<const double> x) {
    if (spec.variant == Variant::ParallelArccos) {
        return std::acos(std::sqrt(x[qubit % spec.d]));
    }
    const double sigma = spec.activation->value(qubit, x);
    return std::acos(std::sqrt((1.0 + sigma) / 2.0));
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::ParallelArccos:
            return "PARALLEL_ARCCOS";
        case Variant::ParallelActivation:
            return "PARALLEL_ACTIVATION";
        case Variant::Sequential:
            return "SEQUENTIAL";
    }
    throw std::logic_error("unknown variant");
}

std::string to_string(ActivationKind k) {
    switch (k) {
        case ActivationKind::Tanh:
            return "TANH";
        case ActivationKind::Cosine:
            return "COSINE";
        case ActivationKind::PiecewiseSign:
            return "PIECEWISE_SIGN";
    }
    throw std::logic_error("unknown activation kind");
}

Variant variant_from_string(const std::string &s) {
    if (s == "PARALLEL_ARCCOS") return Variant::ParallelArccos;
    if (s == "PARALLEL_ACTIVATION") return Variant::ParallelActivation;
    if (s == "SEQUENTIAL") return Variant::Sequential;
    throw std::invalid_argument("unknown variant: " + s);
}

ActivationKind activation_kind_from_string(const std::string &s) {
    if (s == "TANH") return ActivationKind::Tanh;
    if (s == "COSINE") return ActivationKind::Cosine;
    if (s == "PIECEWISE_SIGN") return ActivationKind::PiecewiseSign;
    throw std::invalid_argument("unknown activation kind: " + s);
}

ActivationSpec ActivationSpec::sample(ActivationKind kind, std::size_t d,
                                      std::size_t n_qubits, std::uint64_t seed) {
    ActivationSpec act;
    act.kind = kind;
    act.seed = seed;
    std::mt19937_64 rng(seed);
    act.weights.resize(n_qubits);
    act.biases.resize(n_qubits);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        act.weights[j].resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            act.weights[j][i] = draw_uniform_pm2(rng);
        }
        act.biases[j] = draw_uniform_pm2(rng);
    }
    return act;
}

double ActivationSpec::value(std::size_t qubit, std::span<const double> x) const {
    if (qubit >= weights.size()) {
        throw std::out_of_range("activation qubit index out of range");
    }
    if (x.size() != weights[qubit].size()) {
        throw std::invalid_argument("activation input dimension mismatch");
    }
    double t = biases[qubit];
    for (std::size_t i = 0; i < x.size(); ++i) {
        t += weights[qubit][i] * x[i];
    }
    const double s = activation_value(kind, t);
    if (!(s >= -1.0 && s <= 1.0)) {
        throw std::domain_error("activation value outside [-1, 1]");
    }
    return s;
}

FeatureMapSpec FeatureMapSpec::parallel_arccos(std::size_t d, std::size_t n_qubits) {
    FeatureMapSpec spec;
    spec.variant = Variant::ParallelArccos;
    spec.d = d;
    spec.n_qubits = n_qubits;
    spec.validate();
    return spec;
}

FeatureMapSpec FeatureMapSpec::parallel_activation(std::size_t d, std::size_t n_qubits,
                                                   ActivationKind kind,
                                                   std::uint64_t seed) {
    FeatureMapSpec spec;
    spec.variant = Variant::ParallelActivation;
    spec.d = d;
    spec.n_qubits = n_qubits;
    spec.activation = ActivationSpec::sample(kind, d, n_qubits, seed);
    spec.validate();
    return spec;
}

FeatureMapSpec FeatureMapSpec::sequential(std::vector<double> theta_values) {
    FeatureMapSpec spec;
    spec.variant = Variant::Sequential;
    spec.d = 1;
    spec.n_qubits = 1;
    spec.theta_values = std::move(theta_values);
    spec.validate();
    return spec;
}

void FeatureMapSpec::validate() const {
    switch (variant) {
        case Variant::ParallelArccos:
            if (d < 1 || n_qubits < 1) {
                throw std::invalid_argument("parallel variant needs N >= 1, d >= 1");
            }
            if (n_qubits < d) {
                throw std::invalid_argument("PARALLEL_ARCCOS requires N >= d");
            }
            break;
        case Variant::ParallelActivation:
            if (d < 1 || n_qubits < 1) {
                throw std::invalid_argument("parallel variant needs N >= 1, d >= 1");
            }
            if (!activation || activation->weights.size() != n_qubits) {
                throw std::invalid_argument(
                    "PARALLEL_ACTIVATION needs one (a_j, b_j) per qubit");
            }
            break;
        case Variant::Sequential:
            if (theta_values.empty()) {
                throw std::invalid_argument("SEQUENTIAL needs at least one theta value");
            }
            if (n_qubits != 1) {
                throw std::invalid_argument("SEQUENTIAL operates on exactly one qubit");
            }
            break;
    }
}

nlohmann::json FeatureMapSpec::to_json() const {
    nlohmann::json j;
    j["variant"] = to_string(variant);
    j["d"] = d;
    j["N"] = n_qubits;
    if (activation) {
        j["activation"] = {{"kind", to_string(activation->kind)},
                           {"seed", activation->seed}};
    } else {
        j["activation"] = nullptr;
    }
    j["theta_values"] = theta_values;
    return j;
}

FeatureMapSpec FeatureMapSpec::from_json(const nlohmann::json &j) {
    FeatureMapSpec spec;
    spec.variant = variant_from_string(j.at("variant").get<std::string>());
    spec.d = j.value("d", std::size_t{1});
    spec.n_qubits = j.value("N", std::size_t{1});
    if (j.contains("activation") && !j["activation"].is_null()) {
        const auto &a = j["activation"];
        spec.activation = ActivationSpec::sample(
            activation_kind_from_string(a.at("kind").get<std::string>()), spec.d,
            spec.n_qubits, a.at("seed").get<std::uint64_t>());
    }
    if (j.contains("theta_values")) {
        spec.theta_values = j["theta_values"].get<std::vector<double>>();
    }
    spec.validate();
    return spec;
}

std::size_t AlphaIndex::weight() const {
    std::size_t w = 0;
    for (auto b : bits) {
        w += b;
    }
    return w;
}

ProductObservable AlphaIndex::to_observable() const {
    ProductObservable obs;
    obs.factors.reserve(bits.size());
    for (auto b : bits) {
        obs.factors.push_back(b ? Factor::PauliZ : Factor::Identity);
    }
    return obs;
}

std::string AlphaIndex::label() const {
    std::string s = "alpha:";
    for (auto b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

QubitState encode(const FeatureMapSpec &spec, std::span<const double> x,
                  std::size_t repetitions) {
    spec.validate();
    if (spec.variant == Variant::Sequential) {
        const std::size_t idx = sequential_point_index(spec, x);
        const double angle = std::numbers::pi * static_cast<double>(repetitions) *
                             spec.theta_values[idx];
        QubitState state(1);
        return apply_y_rotation(state, 0, angle);
    }

    if (spec.variant == Variant::ParallelArccos) {
        check_unit_cube(x, spec.d);
    } else if (x.size() != spec.d) {
        throw std::invalid_argument("input dimension mismatch");
    }
    QubitState state(spec.n_qubits);
    for (std::size_t q = 0; q < spec.n_qubits; ++q) {
        state = apply_y_rotation(state, q, parallel_angle(spec, q, x));
    }
    return state;
}

double basis_parallel_closed(std::span<const double> x, const AlphaIndex &alpha,
                             std::size_t d) {
    check_unit_cube(x, d);
    if (alpha.bits.size() < d) {
        throw std::invalid_argument("alpha length must be at least d");
    }
    double prod = 1.0;
    for (std::size_t i = 0; i < alpha.bits.size(); ++i) {
        if (alpha.bits[i]) {
            prod *= 2.0 * x[i % d] - 1.0;
        }
    }
    return prod;
}

double basis_activation_closed(std::span<const double> x, std::size_t qubit,
                               const ActivationSpec &act) {
    return act.value(qubit, x);
}

double basis_sequential_closed(double theta, std::size_t n) {
    const double nt = static_cast<double>(n) * theta;
    const double frac = nt - std::floor(nt);
    return std::cos(two_pi * frac);
}

std::vector<AlphaIndex> enumerate_observables_dedup(std::size_t N, std::size_t d) {
    if (d < 1 || N < d) {
        throw std::invalid_argument("enumerate_observables_dedup needs N >= d >= 1");
    }
    // Slots of residue class r are qubits r, r+d, r+2d, ...
    std::vector<std::size_t> slot_count(d);
    for (std::size_t r = 0; r < d; ++r) {
        slot_count[r] = (N - r + d - 1) / d;
    }

    std::vector<AlphaIndex> reps;
    std::vector<std::size_t> p(d, 0);  // nonzero count per residue class
    while (true) {
        AlphaIndex alpha;
        alpha.bits.assign(N, 0);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t k = 0; k < p[r]; ++k) {
                alpha.bits[r + k * d] = 1;
            }
        }
        reps.push_back(std::move(alpha));

        std::size_t r = 0;
        while (r < d && p[r] == slot_count[r]) {
            p[r] = 0;
            ++r;
        }
        if (r == d) {
            break;
        }
        ++p[r];
    }
    return reps;
}

std::size_t observable_count_bound(std::size_t N, std::size_t d) {
    std::size_t base = 2 + (N - 1) / d;
    std::size_t bound = 1;
    for (std::size_t i = 0; i < d; ++i) {
        bound *= base;
    }
    return bound;
}

double kernel(const FeatureMapSpec &spec, std::span<const double> x,
              std::span<const double> x2) {
    spec.validate();
    // Product of Y rotations gives kappa = prod_j cos(theta_j(x) - theta_j(x')),
    // which scales past the register cap.
    if (spec.variant == Variant::Sequential) {
        const std::size_t i = sequential_point_index(spec, x);
        const std::size_t j = sequential_point_index(spec, x2);
        return std::cos(std::numbers::pi *
                        (spec.theta_values[i] - spec.theta_values[j]));
    }
    if (spec.variant == Variant::ParallelArccos) {
        check_unit_cube(x, spec.d);
        check_unit_cube(x2, spec.d);
    }
    double prod = 1.0;
    for (std::size_t q = 0; q < spec.n_qubits; ++q) {
        prod *= std::cos(parallel_angle(spec, q, x) - parallel_angle(spec, q, x2));
    }
    return prod;
}

}  // namespace qfm
