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

#include "mpqc/adversary.h"

#include <algorithm>

namespace mpqc {

namespace {

constexpr std::pair<Hook, std::string_view> kHooks[] = {
    {Hook::post_share, "post_share"},
    {Hook::per_verify_round, "per_verify_round"},
    {Hook::pre_measure_broadcast, "pre_measure_broadcast"},
    {Hook::pre_reconstruct, "pre_reconstruct"},
};

constexpr std::pair<GridRole, std::string_view> kRoles[] = {
    {GridRole::input, "input"},
    {GridRole::verify_ancilla, "verify_ancilla"},
    {GridRole::plus_ancilla, "plus_ancilla"},
    {GridRole::zero_ancilla, "zero_ancilla"},
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool role_matches(const std::optional<GridRole> &want, GridRole have) {
    return !want || *want == have;
}

PauliType random_pauli(std::mt19937_64 &rng) {
    return static_cast<PauliType>(1 + rng() % 3);
}

}  // namespace

std::string_view hook_name(Hook h) {
    for (const auto &[k, v] : kHooks) {
        if (k == h) {
            return v;
        }
    }
    return "?";
}

std::optional<Hook> parse_hook(std::string_view s) {
    for (const auto &[k, v] : kHooks) {
        if (v == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view role_name(GridRole r) {
    for (const auto &[k, v] : kRoles) {
        if (k == r) {
            return v;
        }
    }
    return "?";
}

std::optional<GridRole> parse_role(std::string_view s) {
    for (const auto &[k, v] : kRoles) {
        if (v == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string AdversaryStrategy::name() const {
    return std::visit(overloaded{
                          [](const HonestStrategy &) { return std::string("honest"); },
                          [](const PauliInjector &) { return std::string("pauli_injector"); },
                          [](const CheatingDealer &) { return std::string("cheating_dealer"); },
                          [](const LyingBroadcaster &) { return std::string("lying_broadcaster"); },
                          [](const OverThreshold &) { return std::string("over_threshold"); },
                      },
                      kind);
}

std::set<size_t> corrupt_set(const AdversaryStrategy &strategy, size_t n, size_t t, uint64_t seed) {
    if (n < 4) {
        throw std::invalid_argument("corrupt_set needs at least 4 nodes");
    }
    size_t size = t;
    if (std::holds_alternative<HonestStrategy>(strategy.kind)) {
        size = 0;
    } else if (std::holds_alternative<OverThreshold>(strategy.kind)) {
        size = t + 1;
    }
    std::vector<size_t> nodes(n);
    for (size_t k = 0; k < n; k++) {
        nodes[k] = k;
    }
    std::mt19937_64 rng(seed ^ 0x636f7272757074ULL);
    // Partial Fisher-Yates with explicit draws keeps the result independent of the library's shuffle.
    for (size_t k = 0; k < size; k++) {
        size_t pick = k + rng() % (n - k);
        std::swap(nodes[k], nodes[pick]);
    }
    return std::set<size_t>(nodes.begin(), nodes.begin() + size);
}

std::vector<Mutation> intervene(const AdversaryStrategy &strategy, const std::set<size_t> &corrupted,
                                const HookView &view, std::mt19937_64 &rng) {
    std::vector<Mutation> out;
    size_t n = view.grid ? view.grid->n() : 0;
    std::visit(
        overloaded{
            [](const HonestStrategy &) {},
            [&](const PauliInjector &s) {
                if (view.hook != s.hook || !role_matches(s.role, view.role) || (s.wire && *s.wire != view.wire) ||
                    (s.round && view.hook == Hook::per_verify_round && *s.round != view.round)) {
                    return;
                }
                std::vector<Slot> slots;
                switch (s.selector.mode) {
                    case SlotSelector::Mode::explicit_slots:
                        slots = s.selector.slots;
                        break;
                    case SlotSelector::Mode::corrupted_columns:
                        for (size_t j = 0; j < n; j++) {
                            for (size_t l : corrupted) {
                                slots.push_back({j, l});
                            }
                        }
                        break;
                    case SlotSelector::Mode::corrupted_rows:
                        for (size_t j : corrupted) {
                            for (size_t l = 0; l < n; l++) {
                                slots.push_back({j, l});
                            }
                        }
                        break;
                    case SlotSelector::Mode::random_columns: {
                        std::vector<Slot> pool;
                        for (size_t j = 0; j < n; j++) {
                            for (size_t l : corrupted) {
                                pool.push_back({j, l});
                            }
                        }
                        size_t count = std::min(s.selector.count, pool.size());
                        for (size_t k = 0; k < count; k++) {
                            size_t pick = k + rng() % (pool.size() - k);
                            std::swap(pool[k], pool[pick]);
                            slots.push_back(pool[k]);
                        }
                        break;
                    }
                }
                for (const auto &slot : slots) {
                    out.push_back({Mutation::Kind::slot_pauli, slot, s.pauli ? *s.pauli : random_pauli(rng)});
                }
            },
            [&](const CheatingDealer &s) {
                if (view.hook != Hook::post_share || !role_matches(s.role, view.role) || !corrupted.count(view.dealer)) {
                    return;
                }
                for (const auto &[block, p] : s.first_level_errors) {
                    out.push_back({Mutation::Kind::first_level_pauli, Slot{block, 0}, p});
                }
            },
            [&](const LyingBroadcaster &s) {
                if (view.hook != Hook::pre_measure_broadcast || !role_matches(s.role, view.role)) {
                    return;
                }
                std::vector<size_t> blocks = s.blocks;
                if (blocks.empty()) {
                    for (size_t j = 0; j < n; j++) {
                        blocks.push_back(j);
                    }
                }
                for (size_t j : blocks) {
                    for (size_t l : corrupted) {
                        out.push_back({Mutation::Kind::flip_announced_bit, Slot{j, l}, PauliType::I});
                    }
                }
            },
            [&](const OverThreshold &) {
                if (view.hook != Hook::post_share || view.role != GridRole::input) {
                    return;
                }
                const PauliType cycle[] = {PauliType::X, PauliType::Z, PauliType::Y};
                size_t idx = 0;
                for (size_t l : corrupted) {
                    for (size_t j = 0; j < n; j++) {
                        out.push_back({Mutation::Kind::slot_pauli, Slot{j, l}, cycle[idx % 3]});
                    }
                    idx++;
                }
            },
        },
        strategy.kind);
    return out;
}

void check_containment(const std::set<size_t> &corrupted, const HookView &view,
                       const std::vector<Mutation> &mutations) {
    size_t n = view.grid ? view.grid->n() : 0;
    for (const auto &m : mutations) {
        if (m.slot.block >= n || (m.kind != Mutation::Kind::first_level_pauli && m.slot.holder >= n)) {
            throw IllegalMutation("mutation outside the grid");
        }
        bool ok = false;
        switch (m.kind) {
            case Mutation::Kind::slot_pauli:
                ok = corrupted.count(m.slot.holder) ||
                     (view.hook == Hook::post_share && corrupted.count(m.slot.block));
                break;
            case Mutation::Kind::first_level_pauli:
                ok = view.hook == Hook::post_share && corrupted.count(view.dealer);
                break;
            case Mutation::Kind::flip_announced_bit:
                ok = view.hook == Hook::pre_measure_broadcast && corrupted.count(m.slot.holder);
                break;
        }
        if (!ok) {
            throw IllegalMutation("mutation at slot (" + std::to_string(m.slot.block) + ", " +
                                  std::to_string(m.slot.holder) + ") during " + std::string(hook_name(view.hook)) +
                                  " is outside the corrupted nodes' reach");
        }
    }
}

void apply_mutations(ShareGrid &grid, const std::vector<Mutation> &mutations) {
    for (const auto &m : mutations) {
        if (m.kind == Mutation::Kind::slot_pauli) {
            grid.mutable_errors().apply(grid.slot_index(m.slot), m.pauli);
        } else if (m.kind == Mutation::Kind::first_level_pauli) {
            inject_first_level(grid, m.slot.block, m.pauli);
        }
    }
}

void apply_announcement_flips(LogicalWord &word, const std::vector<Mutation> &mutations) {
    for (const auto &m : mutations) {
        if (m.kind == Mutation::Kind::flip_announced_bit) {
            word.flip(m.slot);
        }
    }
}

}  // namespace mpqc
