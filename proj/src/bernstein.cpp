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

#include "qfm/bernstein.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace qfm {

namespace {

std::size_t grid_size(std::size_t d, std::size_t n) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < d; ++i) {
        size *= n + 1;
    }
    return size;
}

// One de Casteljau pass over `count` coefficients at parameter x.
double de_casteljau(std::span<const double> coeffs, double x,
                    std::vector<double> &scratch) {
    scratch.assign(coeffs.begin(), coeffs.end());
    for (std::size_t level = scratch.size() - 1; level > 0; --level) {
        for (std::size_t p = 0; p < level; ++p) {
            scratch[p] = (1.0 - x) * scratch[p] + x * scratch[p + 1];
        }
    }
    return scratch[0];
}

}  // namespace

BernsteinApproximator BernsteinApproximator::build(std::vector<double> g_samples,
                                                   std::size_t d, std::size_t n) {
    if (d < 1 || n < 1) {
        throw std::invalid_argument("BernsteinApproximator needs d >= 1, n >= 1");
    }
    if (g_samples.size() != grid_size(d, n)) {
        throw std::invalid_argument(
            "BernsteinApproximator: expected (n+1)^d grid samples");
    }
    return BernsteinApproximator(std::move(g_samples), d, n);
}

BernsteinApproximator BernsteinApproximator::from_function(
    const std::function<double(std::span<const double>)> &g, std::size_t d,
    std::size_t n) {
    std::vector<double> samples(grid_size(d, n));
    std::vector<std::size_t> p(d, 0);
    std::vector<double> node(d);
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        for (std::size_t i = 0; i < d; ++i) {
            node[i] = static_cast<double>(p[i]) / static_cast<double>(n);
        }
        samples[idx] = g(node);
        std::size_t i = 0;
        while (i < d && p[i] == n) {
            p[i] = 0;
            ++i;
        }
        if (i < d) {
            ++p[i];
        }
    }
    return build(std::move(samples), d, n);
}

std::vector<double> BernsteinApproximator::weights() const {
    std::vector<double> w(samples_.size());
    const auto degrees = multi_degrees(d_, n_);
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        double b = 1.0;
        for (std::size_t i = 0; i < d_; ++i) {
            b *= binomial(n_, degrees[idx][i]);
        }
        w[idx] = samples_[idx] * b;
    }
    return w;
}

double BernsteinApproximator::evaluate(std::span<const double> x) const {
    if (x.size() != d_) {
        throw std::invalid_argument("evaluate: input dimension mismatch");
    }
    for (double xi : x) {
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::domain_error("evaluate: input outside the unit cube");
        }
    }
    // Contract axis 0 first (contiguous runs of n+1 samples), then each
    // following axis on the reduced array.
    std::vector<double> reduced = samples_;
    std::vector<double> next;
    std::vector<double> scratch;
    const std::size_t stride = n_ + 1;
    for (std::size_t axis = 0; axis < d_; ++axis) {
        const std::size_t blocks = reduced.size() / stride;
        next.resize(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            next[b] = de_casteljau({reduced.data() + b * stride, stride}, x[axis],
                                   scratch);
        }
        reduced.swap(next);
    }
    return reduced[0];
}

double BernsteinApproximator::sample_min() const {
    return *std::min_element(samples_.begin(), samples_.end());
}

double BernsteinApproximator::sample_max() const {
    return *std::max_element(samples_.begin(), samples_.end());
}

nlohmann::json BernsteinApproximator::to_json() const {
    nlohmann::json j;
    j["kind"] = "bernstein";
    j["d"] = d_;
    j["n"] = n_;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto &p : multi_degrees(d_, n_)) {
        labels.push_back(p);
    }
    j["labels"] = labels;
    j["samples"] = samples_;
    j["weights"] = weights();
    return j;
}

BernsteinApproximator BernsteinApproximator::from_json(const nlohmann::json &j) {
    return build(j.at("samples").get<std::vector<double>>(),
                 j.at("d").get<std::size_t>(), j.at("n").get<std::size_t>());
}

std::vector<std::vector<std::size_t>> multi_degrees(std::size_t d, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(grid_size(d, n));
    std::vector<std::size_t> p(d, 0);
    for (std::size_t idx = 0; idx < grid_size(d, n); ++idx) {
        out.push_back(p);
        std::size_t i = 0;
        while (i < d && p[i] == n) {
            p[i] = 0;
            ++i;
        }
        if (i < d) {
            ++p[i];
        }
    }
    return out;
}

ProductObservable projector_observable(std::span<const std::size_t> p,
                                       std::size_t d, std::size_t n) {
    if (p.size() != d) {
        throw std::invalid_argument("projector_observable: multi-degree size != d");
    }
    ProductObservable obs;
    obs.factors.resize(n * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (p[i] > n) {
            throw std::invalid_argument("projector_observable: degree above n");
        }
        for (std::size_t k = 0; k < n; ++k) {
            obs.factors[i + k * d] =
                k < p[i] ? Factor::ProjPlus : Factor::ProjMinus;
        }
    }
    return obs;
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double b = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return b;
}

}  // namespace qfm
