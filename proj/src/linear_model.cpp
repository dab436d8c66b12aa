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

#include "qfm/linear_model.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace qfm {

void DesignMatrix::validate() const {
    if (values.rows() == 0 || values.cols() == 0) {
        throw std::invalid_argument("empty design matrix");
    }
    if (static_cast<std::size_t>(values.cols()) != column_labels.size()) {
        throw std::invalid_argument("design matrix column/label count mismatch");
    }
    if (!sample_points.empty() &&
        sample_points.size() != static_cast<std::size_t>(values.rows())) {
        throw std::invalid_argument("design matrix row/sample count mismatch");
    }
}

DesignMatrix design_matrix_parallel(const FeatureMapSpec &spec,
                                    std::span<const std::vector<double>> points) {
    const auto alphas = enumerate_observables_dedup(spec.n_qubits, spec.d);
    DesignMatrix dm;
    dm.values.resize(static_cast<Eigen::Index>(points.size()),
                     static_cast<Eigen::Index>(alphas.size()));
    for (const auto &alpha : alphas) {
        dm.column_labels.push_back(alpha.label());
    }
    for (std::size_t m = 0; m < points.size(); ++m) {
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            dm.values(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                basis_parallel_closed(points[m], alphas[k], spec.d);
        }
    }
    dm.sample_points.assign(points.begin(), points.end());
    return dm;
}

LinearModel fit_least_squares(const DesignMatrix &dm, const Eigen::VectorXd &targets,
                              double ridge_lambda) {
    dm.validate();
    if (targets.size() != dm.values.rows()) {
        throw std::invalid_argument("target length does not match sample count");
    }
    if (ridge_lambda < 0.0) {
        throw std::invalid_argument("ridge_lambda must be nonnegative");
    }

    LinearModel model;
    model.column_labels = dm.column_labels;
    model.ridge_lambda = ridge_lambda;

    const Eigen::Index k = dm.values.cols();
    if (ridge_lambda == 0.0) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(dm.values);
        model.weights = cod.solve(targets);
        model.rank_deficient = cod.rank() < k;
    } else {
        // Stack [A; sqrt(lambda) I] so the penalized problem stays a plain
        // least-squares solve.
        const double s = std::sqrt(ridge_lambda);
        Eigen::MatrixXd aug(dm.values.rows() + k, k);
        aug.topRows(dm.values.rows()) = dm.values;
        aug.bottomRows(k) = s * Eigen::MatrixXd::Identity(k, k);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(aug.rows());
        rhs.head(targets.size()) = targets;
        model.weights = aug.householderQr().solve(rhs);
    }

    if (!model.weights.allFinite()) {
        throw std::runtime_error("least-squares solve produced non-finite weights");
    }
    model.residual = (dm.values * model.weights - targets).norm();
    return model;
}

nlohmann::json LinearModel::to_json() const {
    nlohmann::json j;
    j["kind"] = "linear";
    j["labels"] = column_labels;
    j["weights"] = std::vector<double>(weights.begin(), weights.end());
    j["metadata"] = {{"ridge_lambda", ridge_lambda},
                     {"residual", residual},
                     {"rank_deficient", rank_deficient}};
    return j;
}

LinearModel LinearModel::from_json(const nlohmann::json &j) {
    LinearModel m;
    m.column_labels = j.at("labels").get<std::vector<std::string>>();
    const auto w = j.at("weights").get<std::vector<double>>();
    m.weights = Eigen::Map<const Eigen::VectorXd>(w.data(),
                                                  static_cast<Eigen::Index>(w.size()));
    const auto &meta = j.at("metadata");
    m.ridge_lambda = meta.value("ridge_lambda", 0.0);
    m.residual = meta.value("residual", 0.0);
    m.rank_deficient = meta.value("rank_deficient", false);
    return m;
}

}  // namespace qfm
