// Copyright 2026 The MPQC Simulator Authors
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

#include "mpqc/resources.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpqc {

ResourceReport resource_report(const ProtocolTranscript &t) {
    ResourceReport r;
    r.peak = t.resources.peak;
    r.sent = t.resources.sent;
    r.max_peak = t.resources.max_peak();
    r.max_sent = t.resources.max_sent();
    r.broadcast_bits = t.resources.broadcast_bits;
    r.kappa = t.resources.kappa();
    for (const auto &v : t.vhss) {
        r.max_vhss_node_sent = std::max(r.max_vhss_node_sent, v.max_node_sent);
    }
    return r;
}

ProportionalFit fit_proportional(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.empty()) {
        throw std::invalid_argument("fit needs matching non-empty samples");
    }
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), x.size());
    Eigen::Map<const Eigen::VectorXd> yv(y.data(), y.size());
    ProportionalFit f;
    f.c = xv.dot(yv) / xv.squaredNorm();
    f.relative_residual = (yv - f.c * xv).norm() / yv.norm();
    return f;
}

PowerFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("power-law fit needs at least two samples");
    }
    Eigen::MatrixXd a(x.size(), 2);
    Eigen::VectorXd b(x.size());
    for (size_t k = 0; k < x.size(); k++) {
        a(k, 0) = 1;
        a(k, 1) = std::log(x[k]);
        b(k) = std::log(y[k]);
    }
    Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
    return {std::exp(sol(0)), sol(1)};
}

}  // namespace mpqc
