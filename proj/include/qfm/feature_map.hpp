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
#include <string>
#include <vector>

#include <json.hpp>

#include "qfm/statevector.hpp"

namespace qfm {

enum class Variant {
    ParallelArccos,
    ParallelActivation,
    Sequential,
};

enum class ActivationKind {
    Tanh,
    Cosine,
    PiecewiseSign,
};

std::string to_string(Variant v);
std::string to_string(ActivationKind k);
Variant variant_from_string(const std::string &s);
ActivationKind activation_kind_from_string(const std::string &s);

/// Per-qubit random affine preprocessing sigma(a_j . x + b_j).
///
/// a_j is drawn uniformly on [-2, 2]^d and b_j uniformly on [-2, 2] from
/// std::mt19937_64 seeded with `seed`; doubles are built from the top 53
/// bits of each draw so the stream is bit-identical on every platform.
struct ActivationSpec {
    ActivationKind kind = ActivationKind::Tanh;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> weights;  // a_j, one vector of length d per qubit
    std::vector<double> biases;                // b_j, one per qubit

    static ActivationSpec sample(ActivationKind kind, std::size_t d,
                                 std::size_t n_qubits, std::uint64_t seed);

    /// sigma(a_j . x + b_j), always in [-1, 1].
    double value(std::size_t qubit, std::span<const double> x) const;
};

/// One of the three encoding scenarios with all of its parameters.
struct FeatureMapSpec {
    Variant variant = Variant::ParallelArccos;
    std::size_t d = 1;
    std::size_t n_qubits = 1;                   // parallel variants only
    std::optional<ActivationSpec> activation;   // PARALLEL_ACTIVATION only
    std::vector<double> theta_values;           // SEQUENTIAL only, one per input point

    static FeatureMapSpec parallel_arccos(std::size_t d, std::size_t n_qubits);
    static FeatureMapSpec parallel_activation(std::size_t d, std::size_t n_qubits,
                                              ActivationKind kind, std::uint64_t seed);
    static FeatureMapSpec sequential(std::vector<double> theta_values);

    void validate() const;

    nlohmann::json to_json() const;
    static FeatureMapSpec from_json(const nlohmann::json &j);
};

/// Binary multi-index alpha selecting Z factors of O_alpha.
struct AlphaIndex {
    std::vector<std::uint8_t> bits;

    std::size_t weight() const;
    ProductObservable to_observable() const;
    std::string label() const;
};

/// V(x)|0...0> under the variant's angle rule. For SEQUENTIAL, x is the
/// (integer-valued) index into theta_values and `repetitions` is the
/// iteration count n.
QubitState encode(const FeatureMapSpec &spec, std::span<const double> x,
                  std::size_t repetitions = 1);

/// psi_alpha(x) = prod_i (2 x_{[i]} - 1)^{alpha_i}; cyclic assignment
/// x_{[i]} = x[i mod d] for 0-based qubit i.
double basis_parallel_closed(std::span<const double> x, const AlphaIndex &alpha,
                             std::size_t d);

/// psi_j(x) = sigma(a_j . x + b_j).
double basis_activation_closed(std::span<const double> x, std::size_t qubit,
                               const ActivationSpec &act);

/// psi_n = cos(2*pi*frac(n*theta)).
double basis_sequential_closed(double theta, std::size_t n);

/// One representative alpha per equivalence class: two alpha are equivalent
/// iff each residue class mod d carries the same nonzero count. The
/// representative packs the nonzero entries at the lowest slots of each
/// residue class, which is the lexicographically smallest member.
std::vector<AlphaIndex> enumerate_observables_dedup(std::size_t N, std::size_t d);

/// Bound (2 + floor((N-1)/d))^d on the number of distinct classes.
std::size_t observable_count_bound(std::size_t N, std::size_t d);

/// kappa(x, x') = Re <Psi(x)|Psi(x')>.
double kernel(const FeatureMapSpec &spec, std::span<const double> x,
              std::span<const double> x2);

}  // namespace qfm
