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

#include "qfm/target.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qfm {

double TargetSpec::operator()(std::span<const double> x) const {
    switch (kind) {
        case TargetKind::Poly: {
            double sum = 0.0;
            for (const auto &term : terms) {
                double m = term.coeff;
                for (std::size_t i = 0; i < term.powers.size() && i < x.size(); ++i) {
                    for (std::size_t k = 0; k < term.powers[i]; ++k) {
                        m *= x[i];
                    }
                }
                sum += m;
            }
            return sum;
        }
        case TargetKind::AbsShift:
            if (x.empty()) {
                throw std::invalid_argument("ABS_SHIFT target needs input");
            }
            return std::abs(x[0] - shift);
        case TargetKind::Cos: {
            double t = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                t += (i < freq.size() ? freq[i] : 1.0) * x[i];
            }
            return std::cos(2.0 * std::numbers::pi * t);
        }
        case TargetKind::Table: {
            if (table.empty()) {
                throw std::invalid_argument("TABLE target has no entries");
            }
            double best = std::numeric_limits<double>::infinity();
            double value = 0.0;
            for (const auto &[pt, g] : table) {
                double dist = 0.0;
                for (std::size_t i = 0; i < pt.size() && i < x.size(); ++i) {
                    dist += (pt[i] - x[i]) * (pt[i] - x[i]);
                }
                if (dist < best) {
                    best = dist;
                    value = g;
                }
            }
            return value;
        }
    }
    throw std::logic_error("unknown target kind");
}

namespace {

std::string kind_string(TargetKind k) {
    switch (k) {
        case TargetKind::Poly:
            return "POLY";
        case TargetKind::AbsShift:
            return "ABS_SHIFT";
        case TargetKind::Cos:
            return "COS";
        case TargetKind::Table:
            return "TABLE";
    }
    throw std::logic_error("unknown target kind");
}

TargetKind kind_from_string(const std::string &s) {
    if (s == "POLY") return TargetKind::Poly;
    if (s == "ABS_SHIFT") return TargetKind::AbsShift;
    if (s == "COS") return TargetKind::Cos;
    if (s == "TABLE") return TargetKind::Table;
    throw std::invalid_argument("unknown target kind: " + s);
}

}  // namespace

nlohmann::json TargetSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_string(kind);
    switch (kind) {
        case TargetKind::Poly: {
            nlohmann::json ts = nlohmann::json::array();
            for (const auto &t : terms) {
                ts.push_back({{"coeff", t.coeff}, {"powers", t.powers}});
            }
            j["terms"] = ts;
            break;
        }
        case TargetKind::AbsShift:
            j["shift"] = shift;
            break;
        case TargetKind::Cos:
            j["freq"] = freq;
            break;
        case TargetKind::Table: {
            nlohmann::json ts = nlohmann::json::array();
            for (const auto &[pt, g] : table) {
                ts.push_back({{"x", pt}, {"g", g}});
            }
            j["table"] = ts;
            break;
        }
    }
    if (lipschitz_C) {
        j["lipschitz_C"] = *lipschitz_C;
    }
    return j;
}

TargetSpec TargetSpec::from_json(const nlohmann::json &j) {
    TargetSpec spec;
    spec.kind = kind_from_string(j.at("kind").get<std::string>());
    switch (spec.kind) {
        case TargetKind::Poly:
            for (const auto &t : j.at("terms")) {
                MonomialTerm term;
                term.coeff = t.at("coeff").get<double>();
                term.powers = t.at("powers").get<std::vector<std::size_t>>();
                spec.terms.push_back(std::move(term));
            }
            break;
        case TargetKind::AbsShift:
            spec.shift = j.value("shift", 0.5);
            break;
        case TargetKind::Cos:
            spec.freq = j.value("freq", std::vector<double>{});
            break;
        case TargetKind::Table:
            if (!j.contains("table") || j["table"].empty()) {
                throw std::invalid_argument("TABLE target requires (x, g) pairs");
            }
            for (const auto &t : j["table"]) {
                spec.table.emplace_back(t.at("x").get<std::vector<double>>(),
                                        t.at("g").get<double>());
            }
            break;
    }
    if (j.contains("lipschitz_C")) {
        spec.lipschitz_C = j["lipschitz_C"].get<double>();
    }
    return spec;
}

}  // namespace qfm
