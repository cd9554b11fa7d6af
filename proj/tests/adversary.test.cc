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

#include <gtest/gtest.h>

#include <set>

#include "mpqc/adversary.h"

namespace mpqc {
namespace {

HookView view_of(const ShareGrid &g, Hook hook, GridRole role = GridRole::input, size_t dealer = 0) {
    HookView v;
    v.hook = hook;
    v.role = role;
    v.dealer = dealer;
    v.grid = &g;
    return v;
}

TEST(Adversary, NamesRoundTrip) {
    for (Hook h : {Hook::post_share, Hook::per_verify_round, Hook::pre_measure_broadcast, Hook::pre_reconstruct}) {
        EXPECT_EQ(parse_hook(hook_name(h)), h);
    }
    for (GridRole r : {GridRole::input, GridRole::verify_ancilla, GridRole::plus_ancilla, GridRole::zero_ancilla}) {
        EXPECT_EQ(parse_role(role_name(r)), r);
    }
    EXPECT_FALSE(parse_hook("later"));
    EXPECT_EQ((AdversaryStrategy{OverThreshold{}, {}}.name()), "over_threshold");
}

TEST(Adversary, CorruptSetSizesAndDeterminism) {
    AdversaryStrategy honest{HonestStrategy{}, {}};
    AdversaryStrategy inj{PauliInjector{}, {}};
    AdversaryStrategy over{OverThreshold{}, {}};
    EXPECT_TRUE(corrupt_set(honest, 15, 3, 1).empty());
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto a = corrupt_set(inj, 15, 3, seed);
        EXPECT_EQ(a.size(), 3u);
        EXPECT_EQ(a, corrupt_set(inj, 15, 3, seed));
        EXPECT_LT(*a.rbegin(), 15u);
        EXPECT_EQ(corrupt_set(over, 15, 3, seed).size(), 4u);
    }
    // Different seeds should not all give the same set.
    std::set<std::set<size_t>> seen;
    for (uint64_t seed = 0; seed < 20; seed++) {
        seen.insert(corrupt_set(inj, 15, 3, seed));
    }
    EXPECT_GT(seen.size(), 5u);
}

TEST(Adversary, InjectorRespectsFilters) {
    auto g = honest_share(code_by_name("steane_7"), "|0>", 0);
    PauliInjector p;
    p.hook = Hook::post_share;
    p.selector.slots = {{2, 1}};
    p.wire = 0;
    AdversaryStrategy s{p, {1}};
    std::mt19937_64 rng(3);
    EXPECT_EQ(intervene(s, {1}, view_of(g, Hook::post_share), rng).size(), 1u);
    EXPECT_TRUE(intervene(s, {1}, view_of(g, Hook::pre_reconstruct), rng).empty());
    EXPECT_TRUE(intervene(s, {1}, view_of(g, Hook::post_share, GridRole::verify_ancilla), rng).empty());
    HookView other_wire = view_of(g, Hook::post_share);
    other_wire.wire = 1;
    EXPECT_TRUE(intervene(s, {1}, other_wire, rng).empty());
}

TEST(Adversary, SelectorsCoverTheRightSlots) {
    auto g = honest_share(code_by_name("steane_7"), "|0>", 0);
    std::set<size_t> c = {2, 5};
    std::mt19937_64 rng(9);
    PauliInjector p;
    p.selector.mode = SlotSelector::Mode::corrupted_columns;
    auto cols = intervene({p, c}, c, view_of(g, Hook::post_share), rng);
    EXPECT_EQ(cols.size(), 14u);
    for (const auto &m : cols) {
        EXPECT_TRUE(c.count(m.slot.holder));
    }
    p.selector.mode = SlotSelector::Mode::corrupted_rows;
    auto rows = intervene({p, c}, c, view_of(g, Hook::post_share), rng);
    EXPECT_EQ(rows.size(), 14u);
    for (const auto &m : rows) {
        EXPECT_TRUE(c.count(m.slot.block));
    }
    p.selector.mode = SlotSelector::Mode::random_columns;
    p.selector.count = 5;
    p.pauli.reset();
    for (int trial = 0; trial < 50; trial++) {
        auto rnd = intervene({p, c}, c, view_of(g, Hook::post_share), rng);
        ASSERT_EQ(rnd.size(), 5u);
        std::set<Slot> distinct;
        for (const auto &m : rnd) {
            distinct.insert(m.slot);
            EXPECT_TRUE(c.count(m.slot.holder));
            EXPECT_NE(m.pauli, PauliType::I);
        }
        EXPECT_EQ(distinct.size(), 5u);
        EXPECT_NO_THROW(check_containment(c, view_of(g, Hook::per_verify_round), rnd));
    }
}

TEST(Adversary, ContainmentRules) {
    auto g = honest_share(code_by_name("steane_7"), "|0>", 0);
    std::set<size_t> c = {3};
    auto slot = [](size_t b, size_t h) { return Mutation{Mutation::Kind::slot_pauli, {b, h}, PauliType::X}; };
    // Held slots are always reachable.
    for (Hook h : {Hook::post_share, Hook::per_verify_round, Hook::pre_measure_broadcast, Hook::pre_reconstruct}) {
        EXPECT_NO_THROW(check_containment(c, view_of(g, h), {slot(0, 3)}));
    }
    // Rows only right after sharing.
    EXPECT_NO_THROW(check_containment(c, view_of(g, Hook::post_share), {slot(3, 0)}));
    EXPECT_THROW(check_containment(c, view_of(g, Hook::per_verify_round), {slot(3, 0)}), IllegalMutation);
    EXPECT_THROW(check_containment(c, view_of(g, Hook::post_share), {slot(0, 1)}), IllegalMutation);
    EXPECT_THROW(check_containment(c, view_of(g, Hook::post_share), {slot(7, 3)}), IllegalMutation);

    Mutation fl{Mutation::Kind::first_level_pauli, {4, 0}, PauliType::Z};
    EXPECT_NO_THROW(check_containment(c, view_of(g, Hook::post_share, GridRole::input, 3), {fl}));
    EXPECT_THROW(check_containment(c, view_of(g, Hook::post_share, GridRole::input, 2), {fl}), IllegalMutation);
    EXPECT_THROW(check_containment(c, view_of(g, Hook::pre_reconstruct, GridRole::input, 3), {fl}), IllegalMutation);

    Mutation flip{Mutation::Kind::flip_announced_bit, {1, 3}, PauliType::I};
    EXPECT_NO_THROW(check_containment(c, view_of(g, Hook::pre_measure_broadcast), {flip}));
    EXPECT_THROW(check_containment(c, view_of(g, Hook::post_share), {flip}), IllegalMutation);
    flip.slot.holder = 4;
    EXPECT_THROW(check_containment(c, view_of(g, Hook::pre_measure_broadcast), {flip}), IllegalMutation);
}

TEST(Adversary, CheatingDealerOnlyOnOwnGrids) {
    auto g = honest_share(code_by_name("qrm_15"), "|0>", 0);
    CheatingDealer d;
    d.first_level_errors = {{0, PauliType::X}, {4, PauliType::Z}};
    std::set<size_t> c = {6};
    std::mt19937_64 rng(1);
    AdversaryStrategy s{d, c};
    EXPECT_TRUE(intervene(s, c, view_of(g, Hook::post_share, GridRole::input, 5), rng).empty());
    auto muts = intervene(s, c, view_of(g, Hook::post_share, GridRole::input, 6), rng);
    ASSERT_EQ(muts.size(), 2u);
    check_containment(c, view_of(g, Hook::post_share, GridRole::input, 6), muts);
    apply_mutations(g, muts);
    EXPECT_EQ(g.block_x(0), g.code().logical_x());
    EXPECT_EQ(g.block_z(4), g.code().logical_z());
    EXPECT_TRUE(g.block_x(4).none());
}

TEST(Adversary, LyingBroadcasterFlipsOnlyCorruptedColumns) {
    auto code = code_by_name("steane_7");
    auto g = honest_share(code, "|0>", 0);
    std::set<size_t> c = {0, 4};
    std::mt19937_64 rng(2);
    LyingBroadcaster lb;
    lb.blocks = {1, 2};
    auto muts = intervene({lb, c}, c, view_of(g, Hook::pre_measure_broadcast), rng);
    EXPECT_EQ(muts.size(), 4u);
    check_containment(c, view_of(g, Hook::pre_measure_broadcast), muts);
    auto word = frame_measure(g, Basis::standard, rng);
    auto before = word;
    apply_announcement_flips(word, muts);
    for (size_t j = 0; j < 7; j++) {
        BitVector diff = word.blocks[j] ^ before.blocks[j];
        if (j == 1 || j == 2) {
            EXPECT_EQ(diff.support(), (std::vector<size_t>{0, 4}));
        } else {
            EXPECT_TRUE(diff.none());
        }
    }
    // Untouched blocks still decode clean.
    BitVector none(7);
    auto dec = two_level_decode(*code, word, Basis::standard, none);
    EXPECT_TRUE(dec.blocks[0].ok);
    EXPECT_TRUE(dec.blocks[0].error_positions.empty());
}

TEST(Adversary, OverThresholdCyclesPaulis) {
    auto g = honest_share(code_by_name("steane_7"), "|0>", 0);
    std::set<size_t> c = {1, 3, 6};
    std::mt19937_64 rng(0);
    auto muts = intervene({OverThreshold{}, c}, c, view_of(g, Hook::post_share), rng);
    ASSERT_EQ(muts.size(), 21u);
    for (const auto &m : muts) {
        PauliType want = m.slot.holder == 1 ? PauliType::X : m.slot.holder == 3 ? PauliType::Z : PauliType::Y;
        EXPECT_EQ(m.pauli, want);
    }
    EXPECT_TRUE(intervene({OverThreshold{}, c}, c, view_of(g, Hook::post_share, GridRole::plus_ancilla), rng).empty());
}

// Every single-slot Pauli placed by a corrupted holder is caught at that holder's position
// in the basis where it is visible.
TEST(Adversary, SingleSlotInjectionIsLocalized) {
    for (const auto &code : {code_by_name("steane_7"), code_by_name("qrm_15")}) {
        size_t n = code->n();
        std::mt19937_64 rng(77);
        for (size_t j = 0; j < n; j++) {
            for (size_t l = 0; l < n; l++) {
                for (PauliType p : {PauliType::X, PauliType::Y, PauliType::Z}) {
                    auto g = honest_share(code, has_x(p) ? "|0>" : "|+>", 0);
                    PauliInjector inj;
                    inj.selector.slots = {{j, l}};
                    inj.pauli = p;
                    std::set<size_t> c = {l};
                    auto muts = intervene({inj, c}, c, view_of(g, Hook::post_share), rng);
                    check_containment(c, view_of(g, Hook::post_share), muts);
                    apply_mutations(g, muts);
                    Basis b = has_x(p) ? Basis::standard : Basis::fourier;
                    auto dec = two_level_decode(*code, frame_measure(g, b, rng), b, BitVector(n));
                    ASSERT_TRUE(dec.ok);
                    EXPECT_EQ(dec.logical_bit, false);
                    EXPECT_EQ(dec.blocks[j].error_positions, std::vector<size_t>{l});
                    EXPECT_TRUE(dec.first_level_errors.empty());
                }
            }
        }
    }
}

}  // namespace
}  // namespace mpqc
