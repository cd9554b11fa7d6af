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

#include "mpqc/pauli_frame.h"

namespace mpqc {

char pauli_char(PauliType p) {
    switch (p) {
        case PauliType::X:
            return 'X';
        case PauliType::Y:
            return 'Y';
        case PauliType::Z:
            return 'Z';
        default:
            return 'I';
    }
}

std::optional<PauliType> parse_pauli(std::string_view s) {
    if (s == "I") {
        return PauliType::I;
    }
    if (s == "X") {
        return PauliType::X;
    }
    if (s == "Y") {
        return PauliType::Y;
    }
    if (s == "Z") {
        return PauliType::Z;
    }
    return std::nullopt;
}

bool has_x(PauliType p) {
    return p == PauliType::X || p == PauliType::Y;
}

bool has_z(PauliType p) {
    return p == PauliType::Z || p == PauliType::Y;
}

PauliType pauli_from_bits(bool x, bool z) {
    if (x && z) {
        return PauliType::Y;
    }
    if (x) {
        return PauliType::X;
    }
    return z ? PauliType::Z : PauliType::I;
}

void PauliError::apply(size_t slot, PauliType p) {
    if (has_x(p)) {
        x.flip(slot);
    }
    if (has_z(p)) {
        z.flip(slot);
    }
}

PauliType PauliError::at(size_t slot) const {
    return pauli_from_bits(x.get(slot), z.get(slot));
}

ShareGrid::ShareGrid(CodeRef code, size_t input_index, std::string label)
    : code_(std::move(code)), input_index_(input_index), label_(std::move(label)) {
    if (!code_) {
        throw std::invalid_argument("share grid needs a code");
    }
    if (code_->k() != 1) {
        throw KNotOne("share grids need a k = 1 code");
    }
    errors_ = PauliError(code_->n() * code_->n());
}

size_t ShareGrid::slot_index(Slot s) const {
    if (s.block >= n() || s.holder >= n()) {
        throw std::out_of_range("slot (" + std::to_string(s.block) + ", " + std::to_string(s.holder) +
                                ") outside the grid");
    }
    return s.block * n() + s.holder;
}

Slot ShareGrid::slot_at(size_t index) const {
    if (index >= n() * n()) {
        throw std::out_of_range("slot index outside the grid");
    }
    return Slot{index / n(), index % n()};
}

BitVector ShareGrid::block_x(size_t block) const {
    BitVector out(n());
    for (size_t l = 0; l < n(); l++) {
        out.set(l, errors_.x.get(slot_index({block, l})));
    }
    return out;
}

BitVector ShareGrid::block_z(size_t block) const {
    BitVector out(n());
    for (size_t l = 0; l < n(); l++) {
        out.set(l, errors_.z.get(slot_index({block, l})));
    }
    return out;
}

ShareGrid honest_share(CodeRef code, std::string label, size_t input_index) {
    return ShareGrid(std::move(code), input_index, std::move(label));
}

void inject_in_place(ShareGrid &grid, const std::vector<Slot> &slots, PauliType p) {
    for (const auto &s : slots) {
        grid.mutable_errors().apply(grid.slot_index(s), p);
    }
}

ShareGrid inject(ShareGrid grid, const std::vector<Slot> &slots, PauliType p) {
    inject_in_place(grid, slots, p);
    return grid;
}

void inject_first_level(ShareGrid &grid, size_t block, PauliType p) {
    if (has_x(p)) {
        for (size_t l : grid.code().logical_x().support()) {
            grid.mutable_errors().x.flip(grid.slot_index({block, l}));
        }
    }
    if (has_z(p)) {
        for (size_t l : grid.code().logical_z().support()) {
            grid.mutable_errors().z.flip(grid.slot_index({block, l}));
        }
    }
}

void propagate(ShareGrid &grid, GateId g) {
    auto &e = grid.mutable_errors();
    switch (g) {
        case GateId::P:
        case GateId::Pdag:
            e.z ^= e.x;
            break;
        case GateId::H:
            std::swap(e.x, e.z);
            break;
        case GateId::X:
        case GateId::Y:
        case GateId::Z:
            break;
        default:
            throw UnsupportedGate(std::string(gate_name(g)) + " has no Pauli-frame conjugation rule");
    }
}

void propagate_cx(ShareGrid &control, ShareGrid &target) {
    if (control.n() != target.n() || control.code().name() != target.code().name()) {
        throw std::invalid_argument("transversal CX needs two grids over the same code");
    }
    if (&control == &target) {
        throw std::invalid_argument("transversal CX needs two distinct grids");
    }
    target.mutable_errors().x ^= control.errors().x;
    control.mutable_errors().z ^= target.errors().z;
}

void sample_t_branch(ShareGrid &grid, std::mt19937_64 &rng) {
    auto &e = grid.mutable_errors();
    for (size_t s : e.x.support()) {
        if (rng() & 1) {
            e.z.flip(s);
        }
    }
}

std::optional<bool> label_outcome(const std::string &label, Basis basis) {
    if (basis == Basis::standard) {
        if (label == "|0>") {
            return false;
        }
        if (label == "|1>") {
            return true;
        }
    } else {
        if (label == "|+>") {
            return false;
        }
        if (label == "|->") {
            return true;
        }
    }
    return std::nullopt;
}

namespace {

BitVector random_element(const LinearCode &space, std::mt19937_64 &rng) {
    BitVector msg(space.k());
    for (size_t b = 0; b < space.k(); b++) {
        msg.set(b, rng() & 1);
    }
    return space.encode(msg);
}

// Random word of V with logical bit `bit` (standard), or of W with Fourier bit `bit`.
BitVector random_coset_word(const CssCode &code, Basis basis, bool bit, std::mt19937_64 &rng) {
    if (basis == Basis::standard) {
        BitVector w = random_element(code.W_perp(), rng);
        if (bit) {
            w ^= code.logical_x();
        }
        return w;
    }
    BitVector w = random_element(code.V_perp(), rng);
    if (bit) {
        w ^= code.logical_z();
    }
    return w;
}

}  // namespace

LogicalWord frame_measure(const ShareGrid &grid, Basis basis, bool logical_outcome, std::mt19937_64 &rng) {
    const CssCode &code = grid.code();
    size_t n = grid.n();
    BitVector first = random_coset_word(code, basis, logical_outcome, rng);
    LogicalWord word;
    word.blocks.reserve(n);
    for (size_t j = 0; j < n; j++) {
        BitVector block = random_coset_word(code, basis, first.get(j), rng);
        block ^= basis == Basis::standard ? grid.block_x(j) : grid.block_z(j);
        word.blocks.push_back(std::move(block));
    }
    return word;
}

LogicalWord frame_measure(const ShareGrid &grid, Basis basis, std::mt19937_64 &rng) {
    auto fixed = label_outcome(grid.label(), basis);
    bool outcome = fixed ? *fixed : static_cast<bool>(rng() & 1);
    return frame_measure(grid, basis, outcome, rng);
}

BlockDecode decode_block(const CssCode &code, const BitVector &word, Basis basis, const BitVector *erased_positions) {
    const LinearCode &c = basis == Basis::standard ? code.V() : code.W();
    BlockDecode out;
    BitVector erased = erased_positions ? *erased_positions : BitVector(code.n());
    auto decoded = c.try_decode_with_erasures(word, erased);
    if (!decoded) {
        return out;
    }
    out.ok = true;
    out.codeword = *decoded;
    out.error_positions = ((word ^ *decoded) & ~erased).support();
    out.bit = basis == Basis::standard ? code.logical_bit(*decoded) : code.logical_fourier_bit(*decoded);
    return out;
}

TwoLevelDecode two_level_decode(const CssCode &code, const LogicalWord &word, Basis basis,
                                const BitVector &erased_blocks, const std::vector<BitVector> *erased_positions) {
    size_t n = code.n();
    if (word.n() != n || erased_blocks.size() != n) {
        throw std::invalid_argument("two_level_decode: size mismatch");
    }
    TwoLevelDecode out;
    out.blocks.resize(n);
    out.erased_blocks = erased_blocks;
    out.first_level_word = BitVector(n);
    for (size_t j = 0; j < n; j++) {
        if (erased_blocks.get(j)) {
            continue;
        }
        const BitVector *ep = erased_positions ? &(*erased_positions)[j] : nullptr;
        out.blocks[j] = decode_block(code, word.blocks[j], basis, ep);
        if (out.blocks[j].ok) {
            out.first_level_word.set(j, out.blocks[j].bit);
        } else {
            out.erased_blocks.set(j, true);
        }
    }
    auto first = decode_block(code, out.first_level_word, basis, &out.erased_blocks);
    out.ok = first.ok;
    if (first.ok) {
        out.first_level_codeword = first.codeword;
        out.first_level_errors = first.error_positions;
        out.logical_bit = first.bit;
    }
    return out;
}

nlohmann::json to_json(const ShareGrid &grid) {
    return nlohmann::json{
        {"code", grid.code().name()},
        {"input_index", grid.input_index()},
        {"label", grid.label()},
        {"n", grid.n()},
        {"x", grid.errors().x.to_hex()},
        {"z", grid.errors().z.to_hex()},
    };
}

nlohmann::json to_json(const LogicalWord &word) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto &b : word.blocks) {
        blocks.push_back(b.to_string());
    }
    return blocks;
}

}  // namespace mpqc
