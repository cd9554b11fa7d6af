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

#ifndef MPQC_PROTOCOL_H
#define MPQC_PROTOCOL_H

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpqc/adversary.h"
#include "mpqc/logical_register.h"
#include "mpqc/network.h"
#include "mpqc/pauli_frame.h"

namespace mpqc {

struct ConfigInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotTransversal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
/// First-level erasure recovery found no consistent codeword: the adversary bound was exceeded.
struct ReconstructFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VerifyMode { verify_input, confirm_zero, confirm_plus };
std::string_view verify_mode_name(VerifyMode m);

enum class CircuitOp { H, P, T, CX, Y, ancilla0 };
std::string_view circuit_op_name(CircuitOp op);
std::optional<CircuitOp> parse_circuit_op(std::string_view s);

struct CircuitGate {
    CircuitOp op = CircuitOp::P;
    std::vector<size_t> wires;
};

struct RunConfig {
    static constexpr int kSchemaVersion = 1;

    /// Catalog name; ignored when `code_ref` is set.
    std::string code = "steane_7";
    CodeRef code_ref;
    size_t n = 7;
    size_t t = 1;
    size_t r = 2;
    uint64_t seed = 0;
    std::vector<CircuitGate> circuit;
    /// One label per wire, or empty for all |0>.
    std::vector<std::string> inputs;
    AdversaryStrategy adversary;
    /// The adversary section as written, echoed into the transcript.
    nlohmann::json adversary_spec = nlohmann::json::object();
};

struct BHistoryEntry {
    std::string phase;
    std::string cause;
    std::vector<size_t> added;
    size_t size_after = 0;
};

/// Public cheater bookkeeping, keyed by grid id.
struct CheaterSets {
    std::set<size_t> B;
    /// B^i per grid.
    std::map<size_t, std::set<size_t>> per_grid;
    /// B^{i,j}: positions found in error in block j of grid i.
    std::map<size_t, std::vector<std::set<size_t>>> per_block;
    /// Positions found during reconstruction (merged into per_block as well).
    std::map<size_t, std::vector<std::set<size_t>>> reconstruction;
    /// Union over grids of per_block[i][j], per block j.
    std::vector<std::set<size_t>> union_positions;
    std::vector<BHistoryEntry> history;
};

struct GridRecord {
    size_t id = 0;
    ShareGrid grid;
    GridRole role = GridRole::input;
    size_t dealer = 0;
    size_t wire = 0;
    std::string declared_label;
    /// Register qubit carrying the logical content, when the register is enabled.
    std::optional<size_t> qubit;
    bool live = true;
    /// Qubits each node sent while this grid was dealt.
    std::vector<uint64_t> share_sent;
};

struct VerifyReport {
    size_t rounds = 0;
    /// Nodes added to B^i by this call.
    std::set<size_t> flagged;
    bool confirmed = true;
};

struct ReconstructResult {
    /// The reconstructed state: the grid label, or a Pauli applied to it.
    std::string label;
    PauliType residual = PauliType::I;
    std::vector<size_t> chosen_blocks;
    std::vector<size_t> blocks_added_to_b;
    /// Set when B grew past t during this reconstruction; nothing was recovered.
    bool aborted = false;
};

struct TeleportReport {
    int measured = 0;
    int decoded = 0;
    bool assumed_plus = false;
    Correction correction = Correction::identity;
};

/// Communication of one VHSS invocation (sharing plus verification).
struct VhssRecord {
    size_t grid = 0;
    GridRole role = GridRole::input;
    uint64_t max_node_sent = 0;
    uint64_t total_sent = 0;
};

struct WireOutput {
    size_t wire = 0;
    std::string label;
    std::optional<std::array<double, 3>> bloch;
    std::string residual;
};

struct ProtocolTranscript {
    RunConfig config;
    std::set<size_t> corrupted;
    std::vector<std::string> notes;
    std::vector<nlohmann::json> events;
    CheaterSets cheater_sets;
    ResourceCounters resources;
    std::vector<VhssRecord> vhss;
    size_t broadcast_entries = 0;
    uint64_t broadcast_digest = 0;
    size_t num_h = 0;
    size_t num_ancillas = 0;
    std::string status;
    std::vector<WireOutput> outputs;
    std::optional<double> logical_fidelity;
};

/// One protocol execution over a fixed code and adversary. Grids are addressed by id.
class Session {
   public:
    Session(CodeRef code, size_t t, size_t r, AdversaryStrategy adversary, std::set<size_t> corrupted, uint64_t seed,
            size_t register_qubits = 0);

    size_t n() const {
        return code_->n();
    }
    size_t t() const {
        return t_;
    }
    const CssCode &code() const {
        return *code_;
    }

    /// Two-level encodes `label` from `dealer`. Honest nodes hold n slots per grid afterwards.
    size_t vhss_share(size_t dealer, const std::string &label, GridRole role, size_t wire,
                      std::optional<size_t> qubit = std::nullopt);
    /// r^2 + 2r rounds of ancilla checks; B^i is merged into B at the end.
    VerifyReport vhss_verify(size_t grid, VerifyMode mode);
    /// Decodes every block outside B, then recovers the first level from n - 2t random blocks.
    ReconstructResult vhss_reconstruct(size_t grid, size_t reconstructor);
    /// H on `data` using a confirmed |+> grid, which is consumed.
    TeleportReport teleport_h(size_t data, size_t plus);
    /// P, T, Y on one grid or CX on two.
    void apply_transversal(GateId logical, const std::vector<size_t> &grids);
    /// Measures a grid out in the standard basis and releases it. Returns the register outcome.
    bool discard(size_t grid);

    /// Circuit-level H on a wire grid: deal, verify and confirm a |+> grid, then teleport.
    TeleportReport apply_h(size_t data);
    struct AncillaSwap {
        size_t new_grid = 0;
        bool discarded_bit = false;
    };
    /// Circuit-level fresh |0> on a wire: deal, verify and confirm a |0> grid, discard the old grid.
    AncillaSwap ancilla_zero(size_t old_grid);

    void set_phase(std::string phase) {
        phase_ = std::move(phase);
    }
    const std::string &phase() const {
        return phase_;
    }

    /// A node outside B drawn from public randomness (any node when B covers everyone).
    size_t random_honest_looking_node();
    void check_abort(const std::string &phase);
    bool aborted() const {
        return aborted_;
    }
    void merge_into_b(const std::set<size_t> &nodes, const std::string &phase, const std::string &cause);

    const GridRecord &grid(size_t id) const {
        return grids_.at(id);
    }
    GridRecord &mutable_grid(size_t id) {
        return grids_.at(id);
    }
    const CheaterSets &cheater_sets() const {
        return sets_;
    }
    const NetworkModel &network() const {
        return net_;
    }
    NetworkModel &mutable_network() {
        return net_;
    }
    LogicalRegister &logical_register() {
        return register_;
    }
    const std::vector<nlohmann::json> &events() const {
        return events_;
    }
    const std::vector<VhssRecord> &vhss_records() const {
        return vhss_;
    }
    const std::set<size_t> &corrupted() const {
        return corrupted_;
    }
    const TransversalProfile &profile() const {
        return *profile_;
    }
    const TeleportCorrectionTable &teleport_table() const {
        return table_;
    }
    void add_event(nlohmann::json e) {
        events_.push_back(std::move(e));
    }

   private:
    std::vector<Mutation> fire(Hook hook, const GridRecord &rec, uint64_t round);
    void apply_word(ShareGrid &grid, const std::vector<GateId> &word);
    /// Logical outcome the ancilla measurement should show, collapsing the data when it is read.
    bool check_outcome(GridRecord &data, const std::string &anc_label, Basis basis);
    void record_block_findings(size_t grid, const TwoLevelDecode &dec, const BitVector &requested);
    void record_first_level(size_t grid, const TwoLevelDecode &dec);
    BitVector erased_blocks(size_t grid) const;
    std::vector<BitVector> erased_positions() const;
    void broadcast_word(const LogicalWord &word, const std::string &topic);
    bool random_bit();

    CodeRef code_;
    size_t t_;
    size_t r_;
    AdversaryStrategy adversary_;
    std::set<size_t> corrupted_;
    uint64_t seed_;
    NetworkModel net_;
    std::mt19937_64 measure_rng_;
    std::mt19937_64 frame_rng_;
    std::mt19937_64 adversary_rng_;
    LogicalRegister register_;
    std::optional<size_t> spare_;
    const TransversalProfile *profile_;
    TeleportCorrectionTable table_;
    std::map<size_t, GridRecord> grids_;
    size_t next_grid_ = 0;
    uint64_t round_counter_ = 0;
    CheaterSets sets_;
    bool aborted_ = false;
    std::string phase_ = "sharing";
    std::vector<nlohmann::json> events_;
    std::vector<VhssRecord> vhss_;
};

/// The label after applying a gate: the matching named state when there is one, else "G·label".
std::string label_after(GateId g, const std::string &label);

/// Checks code, bounds, wires, labels and gate support. Throws ConfigInvalid.
CodeRef validate_config(const RunConfig &config);

/// Sharing, verification, computation and reconstruction for every wire. Deterministic under seed.
ProtocolTranscript mpqc_run(const RunConfig &config);

}  // namespace mpqc

#endif
