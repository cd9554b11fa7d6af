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

#ifndef MPQC_NETWORK_H
#define MPQC_NETWORK_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mpqc/bit_vector.h"

namespace mpqc {

struct BroadcastEntry {
    size_t sender = 0;
    uint64_t round = 0;
    std::string topic;
    BitVector payload;
};

/// Qubit workspace and communication counters, one entry per node.
struct ResourceCounters {
    std::vector<int64_t> live;
    std::vector<int64_t> peak;
    std::vector<uint64_t> sent;
    uint64_t broadcast_bits = 0;
    /// VHSS invocations by kind: inputs, circuit ancillas, H ancillas.
    uint64_t kappa_inputs = 0;
    uint64_t kappa_ancillas = 0;
    uint64_t kappa_h = 0;

    explicit ResourceCounters(size_t n = 0) : live(n, 0), peak(n, 0), sent(n, 0) {
    }
    uint64_t kappa() const {
        return kappa_inputs + kappa_ancillas + kappa_h;
    }
    int64_t max_peak() const;
    uint64_t max_sent() const;
};

/// Synchronous network of n nodes: an authenticated broadcast log every node reads in full,
/// private channels that only count the qubits they carry, and a public random stream.
class NetworkModel {
   public:
    NetworkModel(size_t n, uint64_t seed);

    size_t n() const {
        return n_;
    }

    /// Appends to the log. Entries are never changed afterwards.
    void broadcast(size_t sender, uint64_t round, std::string topic, BitVector payload);
    const std::vector<BroadcastEntry> &log() const {
        return log_;
    }
    /// The log as node `node` sees it (the same for everyone).
    const std::vector<BroadcastEntry> &view(size_t node) const;
    /// FNV-1a over every entry, for comparing runs.
    uint64_t log_digest() const;

    /// Moves `qubits` qubits from one node to another over the private channel.
    void send_qubits(size_t from, size_t to, uint64_t qubits);
    uint64_t channel_count(size_t from, size_t to) const {
        return channels_.at(from * n_ + to);
    }

    /// Workspace bookkeeping; `delta` may be negative.
    void adjust_live(size_t node, int64_t delta);
    void adjust_live_all(int64_t delta);

    const ResourceCounters &counters() const {
        return counters_;
    }
    ResourceCounters &mutable_counters() {
        return counters_;
    }

    std::mt19937_64 &public_rng() {
        return public_rng_;
    }

   private:
    void check_node(size_t node) const;

    size_t n_;
    std::vector<BroadcastEntry> log_;
    std::vector<uint64_t> channels_;
    ResourceCounters counters_;
    std::mt19937_64 public_rng_;
};

}  // namespace mpqc

#endif
