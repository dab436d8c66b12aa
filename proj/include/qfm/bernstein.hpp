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
#include <span>
#include <vector>

#include <json.hpp>

#include "qfm/statevector.hpp"

namespace qfm {

/// Explicit Bernstein approximator of per-variable degree n in d variables,
/// built from target samples g(p/n) on the (n+1)^d multi-degree grid.
///
/// Evaluation runs a de Casteljau contraction per dimension on the samples;
/// the raw binomial weights never enter the evaluation path, so degrees in
/// the thousands stay finite.
class BernsteinApproximator {
  public:
    static BernsteinApproximator build(std::vector<double> g_samples,
                                       std::size_t d, std::size_t n);
    static BernsteinApproximator from_function(
        const std::function<double(std::span<const double>)> &g, std::size_t d,
        std::size_t n);

    std::size_t dimension() const { return d_; }
    std::size_t degree() const { return n_; }
    /// Grid samples g(p/n), multi-degree p laid out with p_0 fastest.
    const std::vector<double> &samples() const { return samples_; }

    /// Output weights w_p = g(p/n) * prod_i binom(n, p_i). Overflows to
    /// infinity for very large n; use samples() + evaluate() instead there.
    std::vector<double> weights() const;

    double evaluate(std::span<const double> x) const;

    double sample_min() const;
    double sample_max() const;

    nlohmann::json to_json() const;
    static BernsteinApproximator from_json(const nlohmann::json &j);

  private:
    BernsteinApproximator(std::vector<double> samples, std::size_t d, std::size_t n)
        : samples_(std::move(samples)), d_(d), n_(n) {}

    std::vector<double> samples_;
    std::size_t d_;
    std::size_t n_;
};

/// All multi-degrees p in the same order as the sample layout (p_0 fastest).
std::vector<std::vector<std::size_t>> multi_degrees(std::size_t d, std::size_t n);

/// Projector observable O_p on N = n*d qubits: qubit i + k*d carries
/// (I+Z)/2 for k < p_i and (I-Z)/2 otherwise.
ProductObservable projector_observable(std::span<const std::size_t> p,
                                       std::size_t d, std::size_t n);

/// binom(n, k) in double precision.
double binomial(std::size_t n, std::size_t k);

}  // namespace qfm
