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

#include "qfm/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qfm {

ProductObservable ProductObservable::single_z(std::size_t n_qubits,
                                              std::size_t qubit) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("single_z: qubit index out of range");
    }
    ProductObservable obs = identity(n_qubits);
    obs.factors[qubit] = Factor::PauliZ;
    return obs;
}

QubitState::QubitState(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("QubitState: need at least one qubit");
    }
    if (n_qubits > max_qubits) {
        throw std::length_error("QubitState: register cap exceeded");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    amplitudes_[0] = {1.0, 0.0};
}

double QubitState::norm() const {
    double s = 0.0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

QubitState apply_y_rotation(const QubitState &state, std::size_t qubit_index,
                            double angle) {
    if (qubit_index >= state.n_qubits()) {
        throw std::out_of_range("apply_y_rotation: qubit index out of range");
    }
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("apply_y_rotation: angle must be finite");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const std::size_t bit = std::size_t{1} << qubit_index;

    QubitState out = state;
    auto &amps = out.amplitudes_;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const auto a0 = amps[i];
        const auto a1 = amps[i | bit];
        amps[i] = c * a0 - s * a1;
        amps[i | bit] = s * a0 + c * a1;
    }
    return out;
}

namespace {

// Diagonal entries (value at bit 0, value at bit 1) of each factor tag.
constexpr std::pair<double, double> diagonal(Factor f) {
    switch (f) {
        case Factor::Identity:
            return {1.0, 1.0};
        case Factor::PauliZ:
            return {1.0, -1.0};
        case Factor::ProjPlus:
            return {1.0, 0.0};
        case Factor::ProjMinus:
            return {0.0, 1.0};
    }
    return {0.0, 0.0};
}

}  // namespace

double expectation(const QubitState &state, const ProductObservable &obs) {
    if (obs.factors.size() != state.n_qubits()) {
        throw std::invalid_argument(
            "expectation: observable factor count does not match register");
    }
    const auto &amps = state.amplitudes();
    double result = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        if (p == 0.0) {
            continue;
        }
        double w = 1.0;
        for (std::size_t q = 0; q < obs.factors.size(); ++q) {
            const auto [d0, d1] = diagonal(obs.factors[q]);
            w *= (k >> q) & 1 ? d1 : d0;
            if (w == 0.0) {
                break;
            }
        }
        result += p * w;
    }
    return result;
}

std::complex<double> inner_product(const QubitState &a, const QubitState &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner_product: register size mismatch");
    }
    std::complex<double> s{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        s += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    }
    return s;
}

}  // namespace qfm
