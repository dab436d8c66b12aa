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

#include <complex>
#include <cstddef>
#include <vector>

namespace qfm {

/// Per-qubit factor of a product observable. All four tags are Hermitian
/// and diagonal in the computational basis.
enum class Factor {
    Identity,
    PauliZ,
    ProjPlus,   // (I + Z) / 2
    ProjMinus,  // (I - Z) / 2
};

/// Observable that factorizes qubit-wise, O = F_0 x F_1 x ... x F_{N-1}.
struct ProductObservable {
    std::vector<Factor> factors;

    static ProductObservable identity(std::size_t n_qubits) {
        return {std::vector<Factor>(n_qubits, Factor::Identity)};
    }
    /// Z on a single qubit, identity elsewhere.
    static ProductObservable single_z(std::size_t n_qubits, std::size_t qubit);
};

/// Dense statevector of an n-qubit register, little-endian ordering
/// (qubit 0 varies fastest in the amplitude index).
class QubitState {
  public:
    static constexpr std::size_t max_qubits = 22;

    /// |0...0> on n_qubits qubits.
    explicit QubitState(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<std::complex<double>> &amplitudes() const { return amplitudes_; }

    double norm() const;

    friend QubitState apply_y_rotation(const QubitState &state,
                                       std::size_t qubit_index, double angle);

  private:
    std::size_t n_qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Applies exp(-i*angle*Y) = [[cos, -sin], [sin, cos]] on the given qubit.
QubitState apply_y_rotation(const QubitState &state, std::size_t qubit_index,
                            double angle);

/// <psi|O|psi>. Computed by per-qubit diagonal factor action; the 2^N x 2^N
/// matrix is never materialized.
double expectation(const QubitState &state, const ProductObservable &obs);

/// <a|b>, conjugate-linear in the first argument.
std::complex<double> inner_product(const QubitState &a, const QubitState &b);

}  // namespace qfm
