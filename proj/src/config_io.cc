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

#include "mpqc/config_io.h"

#include <fstream>
#include <sstream>

namespace mpqc {

namespace {

using nlohmann::json;

template <class T>
T field(const json &j, const char *key, T fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigInvalid(std::string("field '") + key + "': " + e.what());
    }
}

std::optional<GridRole> role_field(const json &j, std::optional<GridRole> fallback) {
    if (!j.contains("role")) {
        return fallback;
    }
    auto s = field<std::string>(j, "role", "");
    if (s == "any") {
        return std::nullopt;
    }
    auto r = parse_role(s);
    if (!r) {
        throw ConfigInvalid("unknown grid role " + s);
    }
    return r;
}

PauliType pauli_value(const std::string &s) {
    auto p = parse_pauli(s);
    if (!p || *p == PauliType::I) {
        throw ConfigInvalid("expected X, Y or Z, got " + s);
    }
    return *p;
}

json role_json(const std::optional<GridRole> &r) {
    return r ? json(std::string(role_name(*r))) : json("any");
}

json slots_json(const std::vector<Slot> &slots) {
    json a = json::array();
    for (const auto &s : slots) {
        a.push_back({s.block, s.holder});
    }
    return a;
}

}  // namespace

AdversaryStrategy adversary_from_json(const json &j) {
    AdversaryStrategy a;
    if (j.is_null()) {
        return a;
    }
    if (!j.is_object()) {
        throw ConfigInvalid("adversary must be an object");
    }
    auto corrupted = field<std::vector<size_t>>(j, "corrupted", {});
    a.corrupted = std::set<size_t>(corrupted.begin(), corrupted.end());
    auto type = field<std::string>(j, "type", "honest");
    if (type == "honest") {
        a.kind = HonestStrategy{};
    } else if (type == "pauli_injector") {
        PauliInjector p;
        auto hook = field<std::string>(j, "hook", "post_share");
        auto h = parse_hook(hook);
        if (!h) {
            throw ConfigInvalid("unknown hook " + hook);
        }
        p.hook = *h;
        p.role = role_field(j, GridRole::input);
        if (j.contains("wire")) {
            p.wire = field<size_t>(j, "wire", 0);
        }
        if (j.contains("round")) {
            p.round = field<uint64_t>(j, "round", 0);
        }
        auto pauli = field<std::string>(j, "pauli", "X");
        if (pauli == "random") {
            p.pauli.reset();
        } else {
            p.pauli = pauli_value(pauli);
        }
        if (j.contains("slots")) {
            p.selector.mode = SlotSelector::Mode::explicit_slots;
            for (const auto &s : field<std::vector<std::vector<size_t>>>(j, "slots", {})) {
                if (s.size() != 2) {
                    throw ConfigInvalid("slots are [block, holder] pairs");
                }
                p.selector.slots.push_back({s[0], s[1]});
            }
        } else if (j.contains("selector")) {
            const auto &sel = j.at("selector");
            if (sel == "columns") {
                p.selector.mode = SlotSelector::Mode::corrupted_columns;
            } else if (sel == "rows") {
                p.selector.mode = SlotSelector::Mode::corrupted_rows;
            } else if (sel.is_object() && sel.contains("random")) {
                p.selector.mode = SlotSelector::Mode::random_columns;
                p.selector.count = field<size_t>(sel, "random", 1);
            } else {
                throw ConfigInvalid("selector must be \"columns\", \"rows\" or {\"random\": k}");
            }
        } else {
            p.selector.mode = SlotSelector::Mode::corrupted_columns;
        }
        a.kind = p;
    } else if (type == "cheating_dealer") {
        CheatingDealer d;
        if (j.contains("first_level_errors")) {
            for (const auto &e : j.at("first_level_errors")) {
                if (!e.is_array() || e.size() != 2) {
                    throw ConfigInvalid("first_level_errors entries are [block, pauli]");
                }
                d.first_level_errors.push_back({e[0].get<size_t>(), pauli_value(e[1].get<std::string>())});
            }
        }
        if (j.contains("substitute_label")) {
            d.substitute_label = field<std::string>(j, "substitute_label", "");
        }
        d.role = role_field(j, GridRole::input);
        a.kind = d;
    } else if (type == "lying_broadcaster") {
        LyingBroadcaster l;
        l.blocks = field<std::vector<size_t>>(j, "blocks", {});
        l.role = role_field(j, std::nullopt);
        a.kind = l;
    } else if (type == "over_threshold") {
        a.kind = OverThreshold{};
    } else {
        throw ConfigInvalid("unknown adversary type " + type);
    }
    return a;
}

RunConfig config_from_json(const json &j) {
    if (!j.is_object()) {
        throw ConfigInvalid("config must be a JSON object");
    }
    int version = field<int>(j, "schema_version", RunConfig::kSchemaVersion);
    if (version != RunConfig::kSchemaVersion) {
        throw ConfigInvalid("unsupported schema_version " + std::to_string(version));
    }
    RunConfig c;
    c.code = field<std::string>(j, "code", c.code);
    auto colon = c.code.find(':');
    if (colon != std::string::npos) {
        try {
            c.code_ref = load_code_files(c.code.substr(0, colon), c.code.substr(colon + 1));
        } catch (const std::exception &e) {
            throw ConfigInvalid(std::string("cannot load code files: ") + e.what());
        }
    }
    size_t default_n = 7;
    if (c.code_ref) {
        default_n = c.code_ref->n();
    } else if (c.code == "qrm_15") {
        default_n = 15;
    }
    c.n = field<size_t>(j, "n", default_n);
    c.t = field<size_t>(j, "t", 1);
    c.r = field<size_t>(j, "r", 2);
    c.seed = field<uint64_t>(j, "seed", 0);
    c.inputs = field<std::vector<std::string>>(j, "inputs", {});
    if (j.contains("circuit")) {
        if (!j.at("circuit").is_array()) {
            throw ConfigInvalid("circuit must be an array");
        }
        for (const auto &g : j.at("circuit")) {
            auto name = field<std::string>(g, "gate", "");
            auto op = parse_circuit_op(name);
            if (!op) {
                throw ConfigInvalid("unknown circuit gate " + name);
            }
            c.circuit.push_back({*op, field<std::vector<size_t>>(g, "wires", {})});
        }
    }
    if (j.contains("adversary")) {
        c.adversary = adversary_from_json(j.at("adversary"));
        c.adversary_spec = j.at("adversary");
    }
    return c;
}

RunConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigInvalid("cannot open config " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

json config_to_json(const RunConfig &c) {
    json circuit = json::array();
    for (const auto &g : c.circuit) {
        circuit.push_back({{"gate", circuit_op_name(g.op)}, {"wires", g.wires}});
    }
    json adv = c.adversary_spec;
    if (adv.empty()) {
        adv = {{"type", c.adversary.name()}};
        if (const auto *p = std::get_if<PauliInjector>(&c.adversary.kind)) {
            adv["hook"] = hook_name(p->hook);
            adv["role"] = role_json(p->role);
            adv["pauli"] = p->pauli ? std::string(1, pauli_char(*p->pauli)) : "random";
            if (p->selector.mode == SlotSelector::Mode::explicit_slots) {
                adv["slots"] = slots_json(p->selector.slots);
            } else if (p->selector.mode == SlotSelector::Mode::corrupted_rows) {
                adv["selector"] = "rows";
            } else if (p->selector.mode == SlotSelector::Mode::random_columns) {
                adv["selector"] = {{"random", p->selector.count}};
            } else {
                adv["selector"] = "columns";
            }
        }
        if (!c.adversary.corrupted.empty()) {
            adv["corrupted"] = std::vector<size_t>(c.adversary.corrupted.begin(), c.adversary.corrupted.end());
        }
    }
    return {{"schema_version", RunConfig::kSchemaVersion},
            {"code", c.code_ref ? c.code_ref->name() : c.code},
            {"n", c.n},
            {"t", c.t},
            {"r", c.r},
            {"seed", c.seed},
            {"circuit", circuit},
            {"inputs", c.inputs},
            {"adversary", adv}};
}

json transcript_to_json(const ProtocolTranscript &t) {
    const auto &cs = t.cheater_sets;
    json grids = json::array();
    for (const auto &[id, bi] : cs.per_grid) {
        json g = {{"grid", id}, {"B_i", std::vector<size_t>(bi.begin(), bi.end())}};
        json bij = json::array();
        auto it = cs.per_block.find(id);
        if (it != cs.per_block.end()) {
            for (const auto &s : it->second) {
                bij.push_back(std::vector<size_t>(s.begin(), s.end()));
            }
        }
        g["B_ij"] = bij;
        json bt = json::array();
        auto rt = cs.reconstruction.find(id);
        if (rt != cs.reconstruction.end()) {
            for (const auto &s : rt->second) {
                bt.push_back(std::vector<size_t>(s.begin(), s.end()));
            }
        }
        g["B_tilde"] = bt;
        grids.push_back(g);
    }
    json history = json::array();
    for (const auto &h : cs.history) {
        history.push_back({{"phase", h.phase}, {"cause", h.cause}, {"added", h.added}, {"size_after", h.size_after}});
    }
    json unions = json::array();
    for (const auto &u : cs.union_positions) {
        unions.push_back(std::vector<size_t>(u.begin(), u.end()));
    }
    const auto &rc = t.resources;
    json vhss = json::array();
    for (const auto &v : t.vhss) {
        vhss.push_back({{"grid", v.grid},
                        {"role", role_name(v.role)},
                        {"max_node_sent", v.max_node_sent},
                        {"total_sent", v.total_sent}});
    }
    json outputs = json::array();
    for (const auto &o : t.outputs) {
        json e = {{"wire", o.wire}, {"label", o.label}};
        if (o.bloch) {
            e["bloch"] = *o.bloch;
        }
        if (!o.residual.empty()) {
            e["residual"] = o.residual;
        }
        outputs.push_back(e);
    }
    json outcome = {{"status", t.status}, {"outputs", outputs}};
    outcome["logical_fidelity"] = t.logical_fidelity ? json(*t.logical_fidelity) : json(nullptr);
    std::ostringstream digest;
    digest << std::hex << t.broadcast_digest;
    return {{"schema_version", RunConfig::kSchemaVersion},
            {"config", config_to_json(t.config)},
            {"corrupted", std::vector<size_t>(t.corrupted.begin(), t.corrupted.end())},
            {"notes", t.notes},
            {"events", t.events},
            {"cheater_sets",
             {{"B", std::vector<size_t>(cs.B.begin(), cs.B.end())},
              {"history", history},
              {"grids", grids},
              {"union_positions", unions}}},
            {"resources",
             {{"peak_qubits", rc.peak},
              {"sent_qubits", rc.sent},
              {"broadcast_bits", rc.broadcast_bits},
              {"max_peak", rc.max_peak()},
              {"max_sent", rc.max_sent()},
              {"kappa", {{"inputs", rc.kappa_inputs}, {"ancillas", rc.kappa_ancillas}, {"h", rc.kappa_h},
                         {"total", rc.kappa()}}},
              {"vhss", vhss}}},
            {"broadcast", {{"entries", t.broadcast_entries}, {"digest", digest.str()}}},
            {"outcome", outcome}};
}

std::string metrics_csv_header() {
    return "schema_version,n,t,r,num_h,num_ancillas,kappa,peak_qubits,comm_qubits,outcome";
}

std::string metrics_csv_row(const ProtocolTranscript &t) {
    std::ostringstream out;
    out << RunConfig::kSchemaVersion << ',' << t.config.n << ',' << t.config.t << ',' << t.config.r << ',' << t.num_h
        << ',' << t.num_ancillas << ',' << t.resources.kappa() << ',' << t.resources.max_peak() << ','
        << t.resources.max_sent() << ',' << t.status;
    return out.str();
}

}  // namespace mpqc
