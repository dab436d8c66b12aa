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

namespace qfm::tol {

// All numeric tolerances live here so they are stated exactly once.
inline constexpr double norm = 1e-12;
inline constexpr double hermitian = 1e-12;
inline constexpr double oracle = 1e-10;
inline constexpr double fit_residual = 1e-9;
inline constexpr double dedup_agreement = 1e-12;
inline constexpr double gram_symmetry = 1e-12;
inline constexpr double gram_min_eigenvalue = -1e-9;
inline constexpr double value_set = 1e-12;

}  // namespace qfm::tol
