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

#ifndef MPQC_ADVERSARY_H
#define MPQC_ADVERSARY_H

#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mpqc/pauli_frame.h"

namespace mpqc {

/// Points in a run where corrupted nodes get to act.
enum class Hook { post_share, per_verify_round, pre_measure_broadcast, pre_reconstruct };

/// What a share grid is used for.
enum class GridRole { input, verify_ancilla, plus_ancilla, zero_ancilla };

std::string_view hook_name(Hook h);
std::optional<Hook> parse_hook(std::string_view s);
std::string_view role_name(GridRole r);
std::optional<GridRole> parse_role(std::string_view s);

/// A strategy tried to touch something only an honest node controls.
struct IllegalMutation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Read-only view handed to the adversary at a hook.
struct HookView {
    Hook hook = Hook::post_share;
    GridRole role = GridRole::input;
    /// Node that dealt the grid (first-level encoder).
    size_t dealer = 0;
    /// Circuit wire the grid belongs to (for verification ancillas, the wire being checked).
    size_t wire = 0;
    /// Verification round, 0 outside verification.
    uint64_t round = 0;
    const ShareGrid *grid = nullptr;
};

struct Mutation {
    enum class Kind { slot_pauli, first_level_pauli, flip_announced_bit };
    Kind kind = Kind::slot_pauli;
    /// For first_level_pauli only `slot.block` is used.
    Slot slot;
    PauliType pauli = PauliType::I;
};

/// Which slots a PauliInjector touches.
struct SlotSelector {
    enum class Mode {
        /// The listed slots.
        explicit_slots,
        /// Every slot held by a corrupted node.
        corrupted_columns,
        /// Every slot of the blocks encoded by corrupted nodes (only possible right after sharing).
        corrupted_rows,
        /// `count` distinct slots drawn from the corrupted columns.
        random_columns,
    };
    Mode mode = Mode::explicit_slots;
    std::vector<Slot> slots;
    size_t count = 1;
};

struct HonestStrategy {};

struct PauliInjector {
    Hook hook = Hook::post_share;
    /// Only grids with this role (any role when unset).
    std::optional<GridRole> role = GridRole::input;
    /// Only grids of this wire (any wire when unset).
    std::optional<size_t> wire;
    SlotSelector selector;
    /// Pauli per slot; drawn uniformly from X, Y, Z when unset.
    std::optional<PauliType> pauli = PauliType::X;
    /// Fire only at this verification round (per_verify_round hook), any round when unset.
    std::optional<uint64_t> round;
};

struct CheatingDealer {
    /// First-level errors as (block, Pauli), applied to grids dealt by a corrupted node.
    std::vector<std::pair<size_t, PauliType>> first_level_errors;
    /// Dealt state replacing the declared label, for ancilla roles.
    std::optional<std::string> substitute_label;
    std::optional<GridRole> role = GridRole::input;
};

struct LyingBroadcaster {
    /// Blocks whose announced bits are flipped in corrupted columns; all blocks when empty.
    std::vector<size_t> blocks;
    std::optional<GridRole> role;
};

/// t + 1 corrupted nodes, each injecting on every slot it holds of every input grid right
/// after sharing. Node k of the corrupted set (in increasing order) uses X, Z, Y, X, ...
struct OverThreshold {};

struct AdversaryStrategy {
    std::variant<HonestStrategy, PauliInjector, CheatingDealer, LyingBroadcaster, OverThreshold> kind;
    /// Empty means: draw with corrupt_set at run start.
    std::set<size_t> corrupted;

    std::string name() const;
};

/// Deterministic under seed. Honest: empty; OverThreshold: t + 1 nodes; otherwise t nodes.
std::set<size_t> corrupt_set(const AdversaryStrategy &strategy, size_t n, size_t t, uint64_t seed);

/// Mutations the strategy wants at this hook. `corrupted` is the run's fixed corrupted set.
std::vector<Mutation> intervene(const AdversaryStrategy &strategy, const std::set<size_t> &corrupted,
                                const HookView &view, std::mt19937_64 &rng);

/// Throws IllegalMutation unless every mutation is within the corrupted nodes' reach:
/// slots they hold, rows they encode (only right after sharing), first-level errors on grids
/// they dealt (only right after sharing), and bits they announce (only before a broadcast).
void check_containment(const std::set<size_t> &corrupted, const HookView &view, const std::vector<Mutation> &mutations);

/// Applies the slot and first-level mutations to the grid.
void apply_mutations(ShareGrid &grid, const std::vector<Mutation> &mutations);
/// Flips the announced bits.
void apply_announcement_flips(LogicalWord &word, const std::vector<Mutation> &mutations);

}  // namespace mpqc

#endif
