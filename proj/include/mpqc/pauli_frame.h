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

#ifndef MPQC_PAULI_FRAME_H
#define MPQC_PAULI_FRAME_H

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpqc/css_code.h"
#include "mpqc/state_vector.h"

namespace mpqc {

struct UnsupportedGate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class PauliType { I, X, Y, Z };

char pauli_char(PauliType p);
std::optional<PauliType> parse_pauli(std::string_view s);
bool has_x(PauliType p);
bool has_z(PauliType p);
PauliType pauli_from_bits(bool x, bool z);

/// X and Z components of a Pauli error over a list of qubits. Phases are not tracked.
struct PauliError {
    BitVector x;
    BitVector z;

    PauliError() = default;
    explicit PauliError(size_t num_slots) : x(num_slots), z(num_slots) {
    }
    size_t size() const {
        return x.size();
    }
    /// Multiplies the error at `slot` by `p`.
    void apply(size_t slot, PauliType p);
    PauliType at(size_t slot) const;
    bool none() const {
        return x.none() && z.none();
    }
    bool operator==(const PauliError &other) const = default;
};

/// Slot (block, holder): qubit `holder` of the block second-level encoded by node `block`.
struct Slot {
    size_t block = 0;
    size_t holder = 0;
    bool operator==(const Slot &other) const = default;
    bool operator<(const Slot &other) const {
        return block != other.block ? block < other.block : holder < other.holder;
    }
};

/// Pauli frame of one two-level-encoded logical qubit.
///
/// The first-level encoding spreads the input over n qubits; first-level qubit j is then
/// encoded again by node j into block j, whose qubit l is held by node l. Errors on the
/// first level are represented by their physical image (the logical operator of block j).
class ShareGrid {
   public:
    ShareGrid(CodeRef code, size_t input_index, std::string label);

    const CssCode &code() const {
        return *code_;
    }
    const CodeRef &code_ref() const {
        return code_;
    }
    size_t n() const {
        return code_->n();
    }
    size_t input_index() const {
        return input_index_;
    }
    const std::string &label() const {
        return label_;
    }
    void set_label(std::string label) {
        label_ = std::move(label);
    }
    const PauliError &errors() const {
        return errors_;
    }
    PauliError &mutable_errors() {
        return errors_;
    }
    size_t slot_index(Slot s) const;
    Slot slot_at(size_t index) const;
    /// X (or Z) error bits of one block.
    BitVector block_x(size_t block) const;
    BitVector block_z(size_t block) const;

    bool operator==(const ShareGrid &other) const {
        return code_ == other.code_ && input_index_ == other.input_index_ && label_ == other.label_ &&
               errors_ == other.errors_;
    }

   private:
    CodeRef code_;
    size_t input_index_;
    std::string label_;
    PauliError errors_;
};

/// Outcome bits of a transversal measurement, grouped by block.
struct LogicalWord {
    std::vector<BitVector> blocks;

    size_t n() const {
        return blocks.size();
    }
    bool get(Slot s) const {
        return blocks.at(s.block).get(s.holder);
    }
    void flip(Slot s) {
        blocks.at(s.block).flip(s.holder);
    }
};

ShareGrid honest_share(CodeRef code, std::string label, size_t input_index);

ShareGrid inject(ShareGrid grid, const std::vector<Slot> &slots, PauliType p);
void inject_in_place(ShareGrid &grid, const std::vector<Slot> &slots, PauliType p);
/// Applies the logical operator of the code on block `block` (a first-level error).
void inject_first_level(ShareGrid &grid, size_t block, PauliType p);

/// Slotwise conjugation by a transversal single-qubit Clifford: P and Pdag map X to XZ,
/// H swaps X and Z, Paulis leave the frame unchanged. T throws UnsupportedGate.
void propagate(ShareGrid &grid, GateId g);
/// Transversal CX between two grids: X on control spreads to target, Z on target spreads to control.
void propagate_cx(ShareGrid &control, ShareGrid &target);
/// Transversal T acting on an X error leaves X times a Z branch; the branch is sampled
/// uniformly per slot (a Pauli twirl of the non-Clifford conjugate).
void sample_t_branch(ShareGrid &grid, std::mt19937_64 &rng);

/// Measurement outcome bit implied by the label in this basis, if the label is an eigenstate.
std::optional<bool> label_outcome(const std::string &label, Basis basis);

/// Transversal measurement of every slot. The first-level outcome word is a uniformly random
/// element of the coset selected by `logical_outcome`; each block is a uniformly random
/// codeword in the coset of its first-level bit, then XOR the visible errors
/// (X bits for standard, Z bits for Fourier).
LogicalWord frame_measure(const ShareGrid &grid, Basis basis, bool logical_outcome, std::mt19937_64 &rng);
/// Uses label_outcome, or a uniformly random logical outcome when the label is not an eigenstate.
LogicalWord frame_measure(const ShareGrid &grid, Basis basis, std::mt19937_64 &rng);

struct BlockDecode {
    bool ok = false;
    BitVector codeword;
    /// Positions where the received word differs from the decoded codeword (non-erased only).
    std::vector<size_t> error_positions;
    bool bit = false;
};

/// Decodes one block word with V (standard) or W (Fourier). With erased positions the joint
/// error-and-erasure radius applies.
BlockDecode decode_block(const CssCode &code, const BitVector &word, Basis basis,
                         const BitVector *erased_positions = nullptr);

struct TwoLevelDecode {
    std::vector<BlockDecode> blocks;
    /// Blocks treated as erasures at the first level (requested plus failed).
    BitVector erased_blocks;
    BitVector first_level_word;
    bool ok = false;
    BitVector first_level_codeword;
    std::vector<size_t> first_level_errors;
    bool logical_bit = false;
};

/// Second-level decode of every block not in `erased_blocks`, then first-level decode of the
/// block bits with erasures at erased and failed blocks.
TwoLevelDecode two_level_decode(const CssCode &code, const LogicalWord &word, Basis basis,
                                const BitVector &erased_blocks,
                                const std::vector<BitVector> *erased_positions = nullptr);

nlohmann::json to_json(const ShareGrid &grid);
nlohmann::json to_json(const LogicalWord &word);

}  // namespace mpqc

#endif
