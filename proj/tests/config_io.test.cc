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

#include "mpqc/config_io.h"
#include "mpqc/resources.h"

namespace mpqc {
namespace {

using nlohmann::json;

TEST(ConfigIo, ParsesFullConfig) {
    json j = json::parse(R"({
        "schema_version": 1, "code": "steane_7", "n": 7, "t": 1, "r": 3, "seed": 17,
        "circuit": [{"gate": "H", "wires": [0]}, {"gate": "CX", "wires": [0, 1]}, {"gate": "ancilla0", "wires": [2]}],
        "inputs": ["|0>", "|1>", "|+>", "|->", "|+i>", "|-i>", "rho6"],
        "adversary": {"type": "pauli_injector", "hook": "per_verify_round", "slots": [[2, 3]], "pauli": "Z",
                      "corrupted": [3], "role": "any", "round": 2}
    })");
    auto c = config_from_json(j);
    EXPECT_EQ(c.r, 3u);
    EXPECT_EQ(c.seed, 17u);
    ASSERT_EQ(c.circuit.size(), 3u);
    EXPECT_EQ(c.circuit[2].op, CircuitOp::ancilla0);
    const auto &inj = std::get<PauliInjector>(c.adversary.kind);
    EXPECT_EQ(inj.hook, Hook::per_verify_round);
    EXPECT_FALSE(inj.role.has_value());
    EXPECT_EQ(inj.pauli, PauliType::Z);
    EXPECT_EQ(inj.round, 2u);
    EXPECT_EQ(inj.selector.slots, (std::vector<Slot>{{2, 3}}));
    EXPECT_EQ(c.adversary.corrupted, (std::set<size_t>{3}));
    EXPECT_NO_THROW(validate_config(c));
}

TEST(ConfigIo, AdversaryVariants) {
    auto d = adversary_from_json(json::parse(R"({"type": "cheating_dealer", "first_level_errors": [[1, "X"]],
                                                 "substitute_label": "|1>", "role": "zero_ancilla"})"));
    const auto &cd = std::get<CheatingDealer>(d.kind);
    EXPECT_EQ(cd.first_level_errors.size(), 1u);
    EXPECT_EQ(cd.role, GridRole::zero_ancilla);
    auto l = adversary_from_json(json::parse(R"({"type": "lying_broadcaster", "blocks": [0, 2]})"));
    EXPECT_EQ(std::get<LyingBroadcaster>(l.kind).blocks, (std::vector<size_t>{0, 2}));
    auto r = adversary_from_json(json::parse(R"({"type": "pauli_injector", "selector": {"random": 4}, "pauli": "random"})"));
    const auto &ri = std::get<PauliInjector>(r.kind);
    EXPECT_EQ(ri.selector.mode, SlotSelector::Mode::random_columns);
    EXPECT_EQ(ri.selector.count, 4u);
    EXPECT_FALSE(ri.pauli.has_value());
    EXPECT_TRUE(std::holds_alternative<OverThreshold>(adversary_from_json(json{{"type", "over_threshold"}}).kind));
}

TEST(ConfigIo, RejectsBadConfigs) {
    EXPECT_THROW(config_from_json(json::parse(R"({"schema_version": 2})")), ConfigInvalid);
    EXPECT_THROW(config_from_json(json::parse(R"({"circuit": [{"gate": "SWAP", "wires": [0]}]})")), ConfigInvalid);
    EXPECT_THROW(config_from_json(json::parse(R"({"n": "seven"})")), ConfigInvalid);
    EXPECT_THROW(config_from_json(json::parse(R"({"adversary": {"type": "ghost"}})")), ConfigInvalid);
    EXPECT_THROW(config_from_json(json::parse(R"({"adversary": {"type": "pauli_injector", "hook": "never"}})")),
                 ConfigInvalid);
    EXPECT_THROW(config_from_json(json::parse(R"({"adversary": {"type": "pauli_injector", "pauli": "I"}})")),
                 ConfigInvalid);
    EXPECT_THROW(load_config_file("/nonexistent/config.json"), ConfigInvalid);
}

TEST(ConfigIo, TranscriptIsStableAndComplete) {
    RunConfig c;
    c.seed = 8;
    c.circuit = {{CircuitOp::H, {0}}, {CircuitOp::ancilla0, {1}}};
    auto t1 = transcript_to_json(mpqc_run(c)).dump();
    auto t2 = transcript_to_json(mpqc_run(c)).dump();
    EXPECT_EQ(t1, t2);
    auto j = json::parse(t1);
    for (const char *key : {"schema_version", "config", "corrupted", "notes", "events", "cheater_sets", "resources",
                            "broadcast", "outcome"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["outcome"]["status"], "success");
    EXPECT_EQ(j["resources"]["kappa"]["total"], 9);
    // The echoed config parses back to the same run.
    auto again = config_from_json(j["config"]);
    EXPECT_EQ(transcript_to_json(mpqc_run(again)).dump(), t1);
}

TEST(ConfigIo, MetricsRow) {
    RunConfig c;
    c.circuit = {{CircuitOp::H, {0}}};
    auto t = mpqc_run(c);
    EXPECT_EQ(metrics_csv_header(), "schema_version,n,t,r,num_h,num_ancillas,kappa,peak_qubits,comm_qubits,outcome");
    std::string row = metrics_csv_row(t);
    EXPECT_EQ(row.rfind("1,7,1,2,1,0,8,70,", 0), 0u) << row;
    EXPECT_EQ(row.substr(row.size() - 8), ",success");
}

TEST(Resources, ProportionalFitIsExactOnLines) {
    auto f = fit_proportional({1, 2, 3}, {2, 4, 6});
    EXPECT_NEAR(f.c, 2, 1e-12);
    EXPECT_NEAR(f.relative_residual, 0, 1e-12);
    auto p = fit_power_law({1, 2, 4, 8}, {3, 12, 48, 192});
    EXPECT_NEAR(p.exponent, 2, 1e-9);
    EXPECT_NEAR(p.prefactor, 3, 1e-9);
    EXPECT_THROW(fit_proportional({}, {}), std::invalid_argument);
}

TEST(Resources, VhssCommunicationCount) {
    // Per VHSS: the dealer sends 2(n-1) per grid, over the input grid and 2(r^2+2r) ancilla grids.
    for (size_t r : {1, 2, 3}) {
        Session s(code_by_name("steane_7"), 1, r, AdversaryStrategy{}, {}, 0);
        size_t g = s.vhss_share(2, "|0>", GridRole::input, 0);
        s.vhss_verify(g, VerifyMode::verify_input);
        ASSERT_EQ(s.vhss_records().size(), 1u);
        const auto &v = s.vhss_records()[0];
        uint64_t grids = 1 + 2 * (r * r + 2 * r);
        EXPECT_EQ(v.max_node_sent, 2 * 6 * grids);
        EXPECT_EQ(v.total_sent, (49 - 1) * grids);
    }
}

}  // namespace
}  // namespace mpqc
