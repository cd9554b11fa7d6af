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

#include "mpqc/protocol.h"

namespace mpqc {
namespace {

RunConfig base_config(const std::string &code, uint64_t seed = 1) {
    RunConfig c;
    c.code = code;
    c.n = code_by_name(code)->n();
    c.t = 1;
    c.r = 2;
    c.seed = seed;
    return c;
}

CircuitGate gate(CircuitOp op, std::vector<size_t> wires) {
    return CircuitGate{op, std::move(wires)};
}

TEST(Protocol, HonestCxRunSucceeds) {
    auto c = base_config("steane_7");
    c.inputs = {"|1>", "|0>", "|+>", "|0>", "|0>", "|0>", "|->"};
    c.circuit = {gate(CircuitOp::CX, {0, 1})};
    auto tr = mpqc_run(c);
    EXPECT_EQ(tr.status, "success");
    EXPECT_TRUE(tr.cheater_sets.B.empty());
    ASSERT_EQ(tr.outputs.size(), 7u);
    EXPECT_EQ(tr.outputs[0].label, "|1>");
    EXPECT_EQ(tr.outputs[1].label, "|1>");
    EXPECT_EQ(tr.outputs[2].label, "|+>");
    EXPECT_EQ(tr.outputs[6].label, "|->");
    ASSERT_TRUE(tr.logical_fidelity);
    EXPECT_NEAR(*tr.logical_fidelity, 1.0, 1e-9);
    EXPECT_EQ(tr.resources.kappa(), 7u);
}

TEST(Protocol, HonestQrmCircuitMatchesDirectEvaluation) {
    auto c = base_config("qrm_15", 5);
    for (size_t i = 0; i < 15; i++) {
        c.inputs.push_back(i < 3 ? "rho" + std::to_string(i) : "|0>");
    }
    c.circuit = {gate(CircuitOp::T, {0}), gate(CircuitOp::H, {1}), gate(CircuitOp::CX, {0, 1}),
                 gate(CircuitOp::P, {2}), gate(CircuitOp::H, {2}), gate(CircuitOp::T, {2}),
                 gate(CircuitOp::CX, {2, 0}), gate(CircuitOp::Y, {1})};
    auto tr = mpqc_run(c);
    EXPECT_EQ(tr.status, "success");
    ASSERT_TRUE(tr.logical_fidelity);
    EXPECT_NEAR(*tr.logical_fidelity, 1.0, 1e-9);
    EXPECT_EQ(tr.num_h, 2u);
    EXPECT_EQ(tr.resources.kappa(), 17u);
}

TEST(Protocol, KappaAndPeakWorkspace) {
    auto c = base_config("steane_7");
    c.circuit = {gate(CircuitOp::H, {0}), gate(CircuitOp::ancilla0, {3}), gate(CircuitOp::H, {3})};
    auto tr = mpqc_run(c);
    EXPECT_EQ(tr.status, "success");
    EXPECT_EQ(tr.resources.kappa(), 10u);
    EXPECT_EQ(tr.resources.max_peak(), 7 * 7 + 3 * 7);
    EXPECT_NEAR(*tr.logical_fidelity, 1.0, 1e-9);

    auto v = base_config("steane_7");
    v.circuit = {gate(CircuitOp::P, {0}), gate(CircuitOp::CX, {0, 1})};
    auto tv = mpqc_run(v);
    EXPECT_EQ(tv.resources.max_peak(), 7 * 7 + 2 * 7);
    for (auto p : tv.resources.peak) {
        EXPECT_EQ(p, 7 * 7 + 2 * 7);
    }
}

TEST(Protocol, DeterministicUnderSeed) {
    auto c = base_config("steane_7", 42);
    c.circuit = {gate(CircuitOp::H, {0}), gate(CircuitOp::CX, {0, 1})};
    c.adversary.kind = PauliInjector{};
    auto a = mpqc_run(c);
    auto b = mpqc_run(c);
    EXPECT_EQ(a.broadcast_digest, b.broadcast_digest);
    EXPECT_EQ(a.events, b.events);
    c.seed = 43;
    EXPECT_NE(mpqc_run(c).broadcast_digest, a.broadcast_digest);
}

TEST(Protocol, OverThresholdAborts) {
    for (const char *code : {"steane_7", "qrm_15"}) {
        auto c = base_config(code, 3);
        c.adversary.kind = OverThreshold{};
        c.circuit = {gate(CircuitOp::H, {0})};
        auto tr = mpqc_run(c);
        EXPECT_EQ(tr.status, "aborted") << code;
        EXPECT_EQ(tr.corrupted.size(), 2u);
        for (const auto &o : tr.outputs) {
            EXPECT_EQ(o.label, tr.corrupted.count(o.wire) ? "corrupted" : "|0>");
        }
        EXPECT_FALSE(tr.logical_fidelity);
    }
}

TEST(Protocol, BoundedInjectorIsCaughtAndCorrected) {
    auto c = base_config("steane_7", 9);
    PauliInjector inj;
    inj.selector.mode = SlotSelector::Mode::corrupted_columns;
    inj.pauli.reset();
    inj.wire.reset();
    c.adversary.kind = inj;
    c.inputs = {"rho0", "rho1", "|0>", "|+>", "|1>", "|0>", "|0>"};
    c.circuit = {gate(CircuitOp::H, {0}), gate(CircuitOp::CX, {0, 1}), gate(CircuitOp::P, {1})};
    auto tr = mpqc_run(c);
    EXPECT_EQ(tr.status, "success");
    EXPECT_LE(tr.cheater_sets.B.size(), 1u);
    EXPECT_NEAR(*tr.logical_fidelity, 1.0, 1e-9);
}

TEST(Protocol, BMonotone) {
    auto c = base_config("qrm_15", 4);
    LyingBroadcaster lb;
    c.adversary.kind = lb;
    c.circuit = {gate(CircuitOp::H, {2}), gate(CircuitOp::T, {2})};
    auto tr = mpqc_run(c);
    size_t last = 0;
    for (const auto &h : tr.cheater_sets.history) {
        EXPECT_GT(h.size_after, last);
        last = h.size_after;
    }
    EXPECT_EQ(tr.status, "success");
    EXPECT_NEAR(*tr.logical_fidelity, 1.0, 1e-9);
}

TEST(Protocol, ConfigValidation) {
    auto c = base_config("steane_7");
    c.circuit = {gate(CircuitOp::T, {0})};
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.circuit = {gate(CircuitOp::CX, {0, 0})};
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.circuit = {gate(CircuitOp::P, {7})};
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.circuit.clear();
    c.t = 2;
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.t = 1;
    c.n = 15;
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.n = 7;
    c.inputs = {"|0>"};
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.inputs.assign(7, "|q>");
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    c.inputs.clear();
    c.code = "golay";
    EXPECT_THROW(validate_config(c), ConfigInvalid);
    auto q = base_config("qrm_15");
    q.circuit = {gate(CircuitOp::T, {0}), gate(CircuitOp::H, {0})};
    EXPECT_NO_THROW(validate_config(q));
}

TEST(Protocol, ApplyTransversalRejectsH) {
    Session s(code_by_name("qrm_15"), 1, 1, AdversaryStrategy{}, {}, 0);
    size_t g = s.vhss_share(0, "|0>", GridRole::input, 0);
    EXPECT_THROW(s.apply_transversal(GateId::H, {g}), NotTransversal);
    EXPECT_NO_THROW(s.apply_transversal(GateId::T, {g}));
    Session st(code_by_name("steane_7"), 1, 1, AdversaryStrategy{}, {}, 0);
    size_t h = st.vhss_share(0, "|0>", GridRole::input, 0);
    EXPECT_THROW(st.apply_transversal(GateId::T, {h}), NotTransversal);
}

TEST(Protocol, ConfirmZeroCatchesWrongDealer) {
    CheatingDealer d;
    d.substitute_label = "|1>";
    d.role = GridRole::zero_ancilla;
    Session s(code_by_name("steane_7"), 1, 1, AdversaryStrategy{d, {2}}, {2}, 0);
    size_t g = s.vhss_share(2, "|0>", GridRole::zero_ancilla, 0);
    auto rep = s.vhss_verify(g, VerifyMode::confirm_zero);
    EXPECT_FALSE(rep.confirmed);
    EXPECT_TRUE(s.cheater_sets().B.count(2));
    size_t h = s.vhss_share(3, "|0>", GridRole::zero_ancilla, 0);
    EXPECT_TRUE(s.vhss_verify(h, VerifyMode::confirm_zero).confirmed);
}

TEST(Protocol, HonestVhssRoundTrip) {
    for (const char *name : {"steane_7", "qrm_15"}) {
        Session s(code_by_name(name), 1, 2, AdversaryStrategy{}, {}, 11);
        size_t g = s.vhss_share(3, "rho4", GridRole::input, 3);
        auto rep = s.vhss_verify(g, VerifyMode::verify_input);
        EXPECT_EQ(rep.rounds, 8u);
        EXPECT_TRUE(rep.flagged.empty());
        auto res = s.vhss_reconstruct(g, 3);
        EXPECT_EQ(res.label, "rho4");
        EXPECT_EQ(res.residual, PauliType::I);
        EXPECT_EQ(res.chosen_blocks.size(), s.n() - 2);
    }
}

TEST(Protocol, TeleportBranchesFollowTable) {
    // Both outcomes show up across seeds and each gets the table's correction.
    std::set<int> seen;
    for (uint64_t seed = 0; seed < 12; seed++) {
        Session s(code_by_name("steane_7"), 1, 1, AdversaryStrategy{}, {}, seed, 8);
        size_t d = s.vhss_share(0, "|0>", GridRole::input, 0, 0);
        size_t p = s.vhss_share(1, "|+>", GridRole::plus_ancilla, 0, 7);
        s.vhss_verify(p, VerifyMode::confirm_plus);
        auto rep = s.teleport_h(d, p);
        seen.insert(rep.measured);
        EXPECT_EQ(rep.decoded, rep.measured);
        EXPECT_EQ(rep.correction, s.teleport_table().by_outcome[rep.measured]);
        auto b = s.logical_register().bloch(0);
        EXPECT_NEAR(b[0], 1.0, 1e-9);
        EXPECT_NEAR(s.logical_register().bloch(7)[2], 1.0, 1e-9);
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(Protocol, BroadcastViewsAgree) {
    Session s(code_by_name("steane_7"), 1, 1, AdversaryStrategy{}, {}, 0);
    size_t g = s.vhss_share(0, "|0>", GridRole::input, 0);
    s.vhss_verify(g, VerifyMode::verify_input);
    const auto &log = s.network().log();
    EXPECT_EQ(log.size(), 3u * 2 * 7);
    for (size_t k = 1; k < 7; k++) {
        EXPECT_EQ(&s.network().view(k), &s.network().view(0));
    }
}

}  // namespace
}  // namespace mpqc
