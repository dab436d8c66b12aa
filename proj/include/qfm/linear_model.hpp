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

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qfm/feature_map.hpp"

namespace qfm {

/// M x K matrix of basis-function values psi_k(x_m) with column labels.
struct DesignMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> column_labels;
    std::vector<std::vector<double>> sample_points;

    void validate() const;
};

/// Builds the design matrix of the deduplicated parallel-scenario basis
/// over the given sample points.
DesignMatrix design_matrix_parallel(const FeatureMapSpec &spec,
                                    std::span<const std::vector<double>> points);

/// Fitted output weights for a linear combination of basis functions.
struct LinearModel {
    Eigen::VectorXd weights;
    std::vector<std::string> column_labels;
    double ridge_lambda = 0.0;
    double residual = 0.0;      // ||A w - y||_2
    bool rank_deficient = false;

    double evaluate(const Eigen::VectorXd &basis_row) const {
        return weights.dot(basis_row);
    }

    nlohmann::json to_json() const;
    static LinearModel from_json(const nlohmann::json &j);
};

/// Minimizes sum_m (f(x_m) - y_m)^2 + lambda ||w||^2. With lambda = 0 a
/// rank-revealing orthogonal factorization returns the minimum-norm
/// solution and flags rank deficiency.
LinearModel fit_least_squares(const DesignMatrix &dm, const Eigen::VectorXd &targets,
                              double ridge_lambda = 0.0);

}  // namespace qfm
