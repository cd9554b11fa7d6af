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

#ifndef MPQC_RESOURCES_H
#define MPQC_RESOURCES_H

#include <vector>

#include "mpqc/protocol.h"

namespace mpqc {

struct ResourceReport {
    std::vector<int64_t> peak;
    std::vector<uint64_t> sent;
    int64_t max_peak = 0;
    uint64_t max_sent = 0;
    uint64_t broadcast_bits = 0;
    uint64_t kappa = 0;
    /// Largest per-node count over single VHSS invocations (sharing plus verification).
    uint64_t max_vhss_node_sent = 0;
};

ResourceReport resource_report(const ProtocolTranscript &t);

/// Least squares for y = c x, with ||y - c x|| / ||y||.
struct ProportionalFit {
    double c = 0;
    double relative_residual = 0;
};
ProportionalFit fit_proportional(const std::vector<double> &x, const std::vector<double> &y);

/// Least squares for log y = log a + k log x.
struct PowerFit {
    double prefactor = 0;
    double exponent = 0;
};
PowerFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace mpqc

#endif
