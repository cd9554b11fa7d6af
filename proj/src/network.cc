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

#include "mpqc/network.h"

#include <algorithm>
#include <stdexcept>

namespace mpqc {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(uint64_t &h, uint64_t v) {
    for (int b = 0; b < 8; b++) {
        h ^= (v >> (8 * b)) & 0xff;
        h *= kFnvPrime;
    }
}

}  // namespace

int64_t ResourceCounters::max_peak() const {
    return peak.empty() ? 0 : *std::max_element(peak.begin(), peak.end());
}

uint64_t ResourceCounters::max_sent() const {
    return sent.empty() ? 0 : *std::max_element(sent.begin(), sent.end());
}

NetworkModel::NetworkModel(size_t n, uint64_t seed)
    : n_(n), channels_(n * n, 0), counters_(n), public_rng_(seed ^ 0x7075626c6963ULL) {
}

void NetworkModel::check_node(size_t node) const {
    if (node >= n_) {
        throw std::out_of_range("node " + std::to_string(node) + " out of range");
    }
}

void NetworkModel::broadcast(size_t sender, uint64_t round, std::string topic, BitVector payload) {
    check_node(sender);
    counters_.broadcast_bits += payload.size();
    log_.push_back({sender, round, std::move(topic), std::move(payload)});
}

const std::vector<BroadcastEntry> &NetworkModel::view(size_t node) const {
    check_node(node);
    return log_;
}

uint64_t NetworkModel::log_digest() const {
    uint64_t h = kFnvOffset;
    for (const auto &e : log_) {
        fnv_mix(h, e.sender);
        fnv_mix(h, e.round);
        for (char c : e.topic) {
            fnv_mix(h, static_cast<unsigned char>(c));
        }
        fnv_mix(h, e.payload.size());
        for (uint64_t w : e.payload.words()) {
            fnv_mix(h, w);
        }
    }
    return h;
}

void NetworkModel::send_qubits(size_t from, size_t to, uint64_t qubits) {
    check_node(from);
    check_node(to);
    if (from == to || qubits == 0) {
        return;
    }
    channels_[from * n_ + to] += qubits;
    counters_.sent[from] += qubits;
}

void NetworkModel::adjust_live(size_t node, int64_t delta) {
    check_node(node);
    counters_.live[node] += delta;
    if (counters_.live[node] < 0) {
        throw std::logic_error("node " + std::to_string(node) + " released more qubits than it holds");
    }
    counters_.peak[node] = std::max(counters_.peak[node], counters_.live[node]);
}

void NetworkModel::adjust_live_all(int64_t delta) {
    for (size_t k = 0; k < n_; k++) {
        adjust_live(k, delta);
    }
}

}  // namespace mpqc
