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

#include "mpqc/protocol.h"

#include <algorithm>
#include <cmath>

namespace mpqc {

namespace {

constexpr std::pair<CircuitOp, std::string_view> kOps[] = {
    {CircuitOp::H, "H"}, {CircuitOp::P, "P"}, {CircuitOp::T, "T"},
    {CircuitOp::CX, "CX"}, {CircuitOp::Y, "Y"}, {CircuitOp::ancilla0, "ancilla0"},
};

const char *kNamedLabels[] = {"|0>", "|1>", "|+>", "|->", "|+i>", "|-i>", "|m>"};

nlohmann::json set_json(const std::set<size_t> &s) {
    return nlohmann::json(std::vector<size_t>(s.begin(), s.end()));
}

GateId pauli_gate(PauliType p) {
    return p == PauliType::X ? GateId::X : p == PauliType::Y ? GateId::Y : GateId::Z;
}

}  // namespace

std::string_view verify_mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::verify_input:
            return "verify_input";
        case VerifyMode::confirm_zero:
            return "confirm_zero";
        case VerifyMode::confirm_plus:
            return "confirm_plus";
    }
    return "?";
}

std::string_view circuit_op_name(CircuitOp op) {
    for (const auto &[k, v] : kOps) {
        if (k == op) {
            return v;
        }
    }
    return "?";
}

std::optional<CircuitOp> parse_circuit_op(std::string_view s) {
    for (const auto &[k, v] : kOps) {
        if (v == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string label_after(GateId g, const std::string &label) {
    if (auto s = named_single_qubit_state(label)) {
        StateVector out = apply_gate(*s, g, {0});
        for (const char *name : kNamedLabels) {
            if (fidelity(out, *named_single_qubit_state(name)) > 1 - kAccumulatedTolerance) {
                return name;
            }
        }
    }
    return std::string(gate_name(g)) + "·" + label;
}

Session::Session(CodeRef code, size_t t, size_t r, AdversaryStrategy adversary, std::set<size_t> corrupted,
                 uint64_t seed, size_t register_qubits)
    : code_(std::move(code)),
      t_(t),
      r_(r),
      adversary_(std::move(adversary)),
      corrupted_(std::move(corrupted)),
      seed_(seed),
      net_(code_->n(), seed),
      measure_rng_(seed ^ 0x6d6561737572ULL),
      frame_rng_(seed ^ 0x6672616d65ULL),
      adversary_rng_(seed ^ 0x616476ULL),
      profile_(&transversal_profile(*code_)),
      table_(derive_teleport_correction_table()) {
    if (r_ == 0) {
        throw std::invalid_argument("security parameter r must be at least 1");
    }
    if (register_qubits > 0) {
        register_ = LogicalRegister(register_qubits);
        spare_ = register_qubits - 1;
    }
    sets_.union_positions.resize(n());
}

bool Session::random_bit() {
    return measure_rng_() >> 63;
}

std::vector<Mutation> Session::fire(Hook hook, const GridRecord &rec, uint64_t round) {
    HookView view{hook, rec.role, rec.dealer, rec.wire, round, &rec.grid};
    auto muts = intervene(adversary_, corrupted_, view, adversary_rng_);
    check_containment(corrupted_, view, muts);
    if (!muts.empty()) {
        events_.push_back({{"phase", phase_},
                           {"type", "adversary"},
                           {"hook", hook_name(hook)},
                           {"grid", rec.id},
                           {"role", role_name(rec.role)},
                           {"round", round},
                           {"mutations", muts.size()}});
    }
    return muts;
}

size_t Session::vhss_share(size_t dealer, const std::string &label, GridRole role, size_t wire,
                           std::optional<size_t> qubit) {
    if (dealer >= n()) {
        throw std::out_of_range("dealer out of range");
    }
    std::string actual = label;
    if (const auto *cd = std::get_if<CheatingDealer>(&adversary_.kind)) {
        if (cd->substitute_label && corrupted_.count(dealer) && (!cd->role || *cd->role == role)) {
            actual = *cd->substitute_label;
        }
    }
    size_t id = next_grid_++;
    GridRecord rec{id, honest_share(code_, actual, wire), role, dealer, wire, label, qubit, true, {}};
    const auto sent_before = net_.counters().sent;
    if (register_.enabled() && qubit) {
        auto st = input_state(actual, seed_);
        if (!st) {
            throw ConfigInvalid("unknown state label " + actual);
        }
        register_.prepare(*qubit, *st);
    }
    // First level: the dealer keeps one qubit and sends the rest; second level: every node
    // re-encodes its qubit and sends n - 1 slots.
    for (size_t k = 0; k < n(); k++) {
        net_.send_qubits(dealer, k, 1);
    }
    for (size_t k = 0; k < n(); k++) {
        for (size_t l = 0; l < n(); l++) {
            net_.send_qubits(k, l, 1);
        }
    }
    rec.share_sent.resize(n());
    for (size_t k = 0; k < n(); k++) {
        rec.share_sent[k] = net_.counters().sent[k] - sent_before[k];
    }
    net_.adjust_live_all(static_cast<int64_t>(n()));
    auto &counters = net_.mutable_counters();
    if (role == GridRole::input) {
        counters.kappa_inputs++;
    } else if (role == GridRole::plus_ancilla) {
        counters.kappa_h++;
    } else if (role == GridRole::zero_ancilla) {
        counters.kappa_ancillas++;
    }
    auto &stored = grids_.emplace(id, std::move(rec)).first->second;
    if (role != GridRole::verify_ancilla) {
        events_.push_back({{"phase", phase_},
                           {"type", "share"},
                           {"grid", id},
                           {"role", role_name(role)},
                           {"dealer", dealer},
                           {"wire", wire},
                           {"label", label}});
    }
    apply_mutations(stored.grid, fire(Hook::post_share, stored, 0));
    return id;
}

BitVector Session::erased_blocks(size_t grid) const {
    BitVector e(n());
    for (size_t j : sets_.B) {
        e.set(j, true);
    }
    auto it = sets_.per_grid.find(grid);
    if (it != sets_.per_grid.end()) {
        for (size_t j : it->second) {
            e.set(j, true);
        }
    }
    return e;
}

std::vector<BitVector> Session::erased_positions() const {
    std::vector<BitVector> out;
    for (const auto &u : sets_.union_positions) {
        BitVector e(n());
        for (size_t l : u) {
            e.set(l, true);
        }
        out.push_back(e);
    }
    return out;
}

void Session::broadcast_word(const LogicalWord &word, const std::string &topic) {
    round_counter_++;
    for (size_t l = 0; l < n(); l++) {
        BitVector column(n());
        for (size_t j = 0; j < n(); j++) {
            column.set(j, word.blocks[j].get(l));
        }
        net_.broadcast(l, round_counter_, topic, std::move(column));
    }
}

void Session::record_block_findings(size_t grid, const TwoLevelDecode &dec, const BitVector &requested) {
    auto &bi = sets_.per_grid[grid];
    auto &bij = sets_.per_block[grid];
    bij.resize(n());
    for (size_t j = 0; j < n(); j++) {
        if (requested.get(j)) {
            continue;
        }
        if (!dec.blocks[j].ok) {
            bi.insert(j);
            continue;
        }
        for (size_t l : dec.blocks[j].error_positions) {
            bij[j].insert(l);
            sets_.union_positions[j].insert(l);
        }
        if (bij[j].size() > t_ || sets_.union_positions[j].size() > t_) {
            bi.insert(j);
        }
    }
}

void Session::record_first_level(size_t grid, const TwoLevelDecode &dec) {
    auto &bi = sets_.per_grid[grid];
    if (!dec.ok || dec.first_level_errors.size() > t_) {
        bi.insert(grids_.at(grid).dealer);
    } else {
        bi.insert(dec.first_level_errors.begin(), dec.first_level_errors.end());
    }
}

bool Session::check_outcome(GridRecord &data, const std::string &anc_label, Basis basis) {
    auto anc_bit = label_outcome(anc_label, basis);
    if (!anc_bit) {
        // The ancilla is unbiased in this basis, so the outcome is too and the data is untouched.
        return random_bit();
    }
    bool data_bit;
    if (register_.enabled() && data.qubit) {
        data_bit = register_.measure(*data.qubit, basis, measure_rng_);
    } else if (auto b = label_outcome(data.grid.label(), basis)) {
        data_bit = *b;
    } else {
        data_bit = random_bit();
    }
    return *anc_bit != data_bit;
}

VerifyReport Session::vhss_verify(size_t id, VerifyMode mode) {
    auto &data = grids_.at(id);
    if (!data.live) {
        throw std::logic_error("cannot verify a released grid");
    }
    VerifyReport report;
    report.rounds = r_ * r_ + 2 * r_;
    const std::string anc_x_label = mode == VerifyMode::confirm_zero ? "|0>" : "|+>";
    const std::string anc_z_label = mode == VerifyMode::confirm_plus ? "|+>" : "|0>";
    std::set<size_t> before = sets_.per_grid[id];
    sets_.per_block[id].resize(n());
    // Traffic of this VHSS instance: the data grid's sharing plus every ancilla grid it deals.
    std::vector<uint64_t> vhss_sent = data.share_sent;
    for (uint64_t round = 1; round <= report.rounds; round++) {
        apply_mutations(data.grid, fire(Hook::per_verify_round, data, round));
        size_t ax = vhss_share(data.dealer, anc_x_label, GridRole::verify_ancilla, data.wire);
        size_t az = vhss_share(data.dealer, anc_z_label, GridRole::verify_ancilla, data.wire);
        for (size_t k = 0; k < n(); k++) {
            vhss_sent[k] += grids_.at(ax).share_sent[k] + grids_.at(az).share_sent[k];
        }
        propagate_cx(data.grid, grids_.at(ax).grid);
        propagate_cx(grids_.at(az).grid, data.grid);
        struct Check {
            size_t anc;
            Basis basis;
            bool confirms;
        };
        const Check checks[] = {{ax, Basis::standard, mode == VerifyMode::confirm_zero},
                                {az, Basis::fourier, mode == VerifyMode::confirm_plus}};
        for (const auto &c : checks) {
            auto &anc = grids_.at(c.anc);
            bool outcome = check_outcome(data, anc.grid.label(), c.basis);
            auto flips = fire(Hook::pre_measure_broadcast, anc, round);
            LogicalWord word = frame_measure(anc.grid, c.basis, outcome, measure_rng_);
            apply_announcement_flips(word, flips);
            broadcast_word(word, "verify:" + std::to_string(id) + (c.basis == Basis::standard ? ":x" : ":z"));
            BitVector requested = erased_blocks(id);
            auto positions = erased_positions();
            auto dec = two_level_decode(*code_, word, c.basis, requested, &positions);
            record_block_findings(id, dec, requested);
            record_first_level(id, dec);
            if (c.confirms && (!dec.ok || dec.logical_bit)) {
                sets_.per_grid[id].insert(data.dealer);
                report.confirmed = false;
            }
            net_.adjust_live_all(-static_cast<int64_t>(n()));
            anc.live = false;
        }
    }
    const auto &bi = sets_.per_grid[id];
    std::set_difference(bi.begin(), bi.end(), before.begin(), before.end(),
                        std::inserter(report.flagged, report.flagged.end()));
    merge_into_b(bi, phase_, "verification of grid " + std::to_string(id));

    VhssRecord vr{id, data.role, 0, 0};
    for (uint64_t d : vhss_sent) {
        vr.max_node_sent = std::max(vr.max_node_sent, d);
        vr.total_sent += d;
    }
    vhss_.push_back(vr);
    events_.push_back({{"phase", phase_},
                       {"type", "verify"},
                       {"grid", id},
                       {"mode", verify_mode_name(mode)},
                       {"rounds", report.rounds},
                       {"flagged", set_json(report.flagged)},
                       {"confirmed", report.confirmed}});
    return report;
}

void Session::merge_into_b(const std::set<size_t> &nodes, const std::string &phase, const std::string &cause) {
    std::vector<size_t> added;
    for (size_t k : nodes) {
        if (sets_.B.insert(k).second) {
            added.push_back(k);
        }
    }
    if (!added.empty()) {
        sets_.history.push_back({phase, cause, added, sets_.B.size()});
    }
}

void Session::check_abort(const std::string &phase) {
    if (!aborted_ && sets_.B.size() > t_) {
        aborted_ = true;
        events_.push_back({{"phase", phase}, {"type", "abort"}, {"B", set_json(sets_.B)}});
    }
}

size_t Session::random_honest_looking_node() {
    std::vector<size_t> pool;
    for (size_t k = 0; k < n(); k++) {
        if (!sets_.B.count(k)) {
            pool.push_back(k);
        }
    }
    if (pool.empty()) {
        return net_.public_rng()() % n();
    }
    return pool[net_.public_rng()() % pool.size()];
}

void Session::apply_word(ShareGrid &grid, const std::vector<GateId> &word) {
    for (GateId g : word) {
        if (g == GateId::T) {
            sample_t_branch(grid, frame_rng_);
        } else {
            propagate(grid, g);
        }
    }
}

void Session::apply_transversal(GateId logical, const std::vector<size_t> &ids) {
    if (!profile_->supports(logical) || logical == GateId::H) {
        throw NotTransversal(std::string(gate_name(logical)) + " is not transversal on " + code_->name());
    }
    if (logical == GateId::CX) {
        if (ids.size() != 2 || ids[0] == ids[1]) {
            throw ArityMismatch("CX needs two distinct grids");
        }
        auto &c = grids_.at(ids[0]);
        auto &t = grids_.at(ids[1]);
        propagate_cx(c.grid, t.grid);
        if (register_.enabled() && c.qubit && t.qubit) {
            register_.apply(GateId::CX, {*c.qubit, *t.qubit});
        }
        return;
    }
    if (ids.size() != 1) {
        throw ArityMismatch(std::string(gate_name(logical)) + " needs one grid");
    }
    auto &rec = grids_.at(ids[0]);
    apply_word(rec.grid, profile_->realizations.at(logical));
    rec.grid.set_label(label_after(logical, rec.grid.label()));
    if (register_.enabled() && rec.qubit) {
        register_.apply(logical, {*rec.qubit});
    }
}

TeleportReport Session::teleport_h(size_t data_id, size_t plus_id) {
    auto &data = grids_.at(data_id);
    auto &plus = grids_.at(plus_id);
    if (!profile_->supports(GateId::P)) {
        throw NotTransversal("H teleportation needs a transversal P on " + code_->name());
    }
    const auto &p_word = profile_->realizations.at(GateId::P);
    TeleportReport report;
    bool with_register = register_.enabled() && data.qubit && plus.qubit;
    if (with_register) {
        register_.apply(GateId::P, {*data.qubit});
        register_.apply(GateId::P, {*plus.qubit});
        register_.apply(GateId::CX, {*plus.qubit, *data.qubit});
        register_.apply(GateId::P, {*data.qubit});
    }
    apply_word(plus.grid, p_word);
    apply_word(data.grid, p_word);
    propagate_cx(plus.grid, data.grid);
    apply_word(data.grid, p_word);

    auto flips = fire(Hook::pre_measure_broadcast, plus, 0);
    bool m = with_register ? register_.measure(*plus.qubit, Basis::fourier, measure_rng_) : random_bit();
    report.measured = m;
    LogicalWord word = frame_measure(plus.grid, Basis::fourier, m, measure_rng_);
    apply_announcement_flips(word, flips);
    broadcast_word(word, "teleport:" + std::to_string(plus_id));
    BitVector requested = erased_blocks(plus_id);
    auto positions = erased_positions();
    auto dec = two_level_decode(*code_, word, Basis::fourier, requested, &positions);
    sets_.per_block[plus_id].resize(n());
    record_block_findings(plus_id, dec, requested);
    record_first_level(plus_id, dec);
    merge_into_b(sets_.per_grid[plus_id], phase_, "teleportation with grid " + std::to_string(plus_id));
    check_abort(phase_);
    if (sets_.B.size() > t_ || !dec.ok) {
        report.assumed_plus = true;
        report.decoded = 0;
    } else {
        report.decoded = dec.logical_bit;
    }
    report.correction = table_.by_outcome[report.decoded];
    if (report.correction == Correction::Y) {
        apply_word(data.grid, profile_->realizations.at(GateId::Y));
        if (with_register) {
            register_.apply(GateId::Y, {*data.qubit});
        }
    }
    if (with_register) {
        // The Fourier measurement left |+> or |->; rotate back to |0>.
        register_.apply(GateId::H, {*plus.qubit});
        register_.reset_after(*plus.qubit, m);
    }
    data.grid.set_label(label_after(GateId::H, data.grid.label()));
    net_.adjust_live_all(-static_cast<int64_t>(n()));
    plus.live = false;
    events_.push_back({{"phase", phase_},
                       {"type", "teleport_h"},
                       {"data", data_id},
                       {"plus", plus_id},
                       {"measured", report.measured},
                       {"decoded", report.decoded},
                       {"assumed_plus", report.assumed_plus},
                       {"correction", report.correction == Correction::Y ? "Y" : "I"}});
    return report;
}

TeleportReport Session::apply_h(size_t data) {
    size_t dealer = random_honest_looking_node();
    size_t plus = vhss_share(dealer, "|+>", GridRole::plus_ancilla, grids_.at(data).wire, spare_);
    vhss_verify(plus, VerifyMode::confirm_plus);
    check_abort(phase_);
    return teleport_h(data, plus);
}

bool Session::discard(size_t id) {
    auto &rec = grids_.at(id);
    bool bit = false;
    if (register_.enabled() && rec.qubit) {
        bit = register_.measure(*rec.qubit, Basis::standard, measure_rng_);
    }
    net_.adjust_live_all(-static_cast<int64_t>(n()));
    rec.live = false;
    return bit;
}

Session::AncillaSwap Session::ancilla_zero(size_t old_grid) {
    size_t wire = grids_.at(old_grid).wire;
    size_t dealer = random_honest_looking_node();
    AncillaSwap out;
    out.new_grid = vhss_share(dealer, "|0>", GridRole::zero_ancilla, wire, spare_);
    vhss_verify(out.new_grid, VerifyMode::confirm_zero);
    check_abort(phase_);
    auto old_qubit = grids_.at(old_grid).qubit;
    out.discarded_bit = discard(old_grid);
    auto &fresh = grids_.at(out.new_grid);
    if (register_.enabled() && old_qubit && fresh.qubit) {
        // Move the confirmed ancilla onto the wire's qubit; the confirmation left it in a basis state.
        bool s = register_.measure(*fresh.qubit, Basis::standard, measure_rng_);
        register_.reset_after(*old_qubit, out.discarded_bit != s);
        register_.reset_after(*fresh.qubit, s);
        fresh.qubit = old_qubit;
    }
    events_.push_back({{"phase", phase_},
                       {"type", "ancilla0"},
                       {"wire", wire},
                       {"old", old_grid},
                       {"new", out.new_grid},
                       {"dealer", dealer}});
    return out;
}

ReconstructResult Session::vhss_reconstruct(size_t id, size_t reconstructor) {
    auto &rec = grids_.at(id);
    if (!rec.live) {
        throw std::logic_error("cannot reconstruct a released grid");
    }
    apply_mutations(rec.grid, fire(Hook::pre_reconstruct, rec, 0));
    ReconstructResult out;
    int64_t nn = static_cast<int64_t>(n());
    // Blocks arrive one at a time; each is decoded down to one qubit before the next.
    for (size_t j = 0; j < n(); j++) {
        for (size_t l = 0; l < n(); l++) {
            if (l != reconstructor) {
                net_.send_qubits(l, reconstructor, 1);
                net_.adjust_live(l, -1);
            }
        }
        net_.adjust_live(reconstructor, nn - 1);
        net_.adjust_live(reconstructor, -(nn - 1));
    }
    net_.adjust_live(reconstructor, -(nn - 1));
    rec.live = false;

    auto &tilde = sets_.reconstruction[id];
    tilde.resize(n());
    auto &bij = sets_.per_block[id];
    bij.resize(n());
    BitVector fx(n());
    BitVector fz(n());
    std::vector<size_t> usable;
    std::set<size_t> newly;
    for (size_t j = 0; j < n(); j++) {
        if (sets_.B.count(j)) {
            continue;
        }
        auto &u = sets_.union_positions[j];
        BitVector erased(n());
        for (size_t l : u) {
            erased.set(l, true);
        }
        auto dx = decode_block(*code_, rec.grid.block_x(j), Basis::standard, &erased);
        auto dz = decode_block(*code_, rec.grid.block_z(j), Basis::fourier, &erased);
        std::set<size_t> found(dx.error_positions.begin(), dx.error_positions.end());
        found.insert(dz.error_positions.begin(), dz.error_positions.end());
        tilde[j].insert(found.begin(), found.end());
        bij[j].insert(found.begin(), found.end());
        u.insert(found.begin(), found.end());
        if (!dx.ok || !dz.ok || u.size() > t_) {
            newly.insert(j);
            continue;
        }
        fx.set(j, dx.bit);
        fz.set(j, dz.bit);
        usable.push_back(j);
    }
    out.blocks_added_to_b.assign(newly.begin(), newly.end());
    merge_into_b(newly, phase_, "reconstruction of grid " + std::to_string(id));
    check_abort(phase_);
    if (aborted_) {
        out.aborted = true;
        out.label = "|0>";
        return out;
    }
    size_t need = n() - 2 * t_;
    if (usable.size() < need) {
        throw ReconstructFailure("only " + std::to_string(usable.size()) + " decodable blocks, need " +
                                 std::to_string(need));
    }
    auto &prng = net_.public_rng();
    for (size_t k = 0; k < need; k++) {
        size_t pick = k + prng() % (usable.size() - k);
        std::swap(usable[k], usable[pick]);
    }
    out.chosen_blocks.assign(usable.begin(), usable.begin() + need);
    std::sort(out.chosen_blocks.begin(), out.chosen_blocks.end());
    BitVector erased = BitVector::ones(n());
    for (size_t j : out.chosen_blocks) {
        erased.set(j, false);
    }
    BitVector cx, cz;
    try {
        cx = code_->V().erasure_decode(fx, erased);
        cz = code_->W().erasure_decode(fz, erased);
    } catch (const ErasureInconsistent &e) {
        throw ReconstructFailure(std::string("first-level recovery of grid ") + std::to_string(id) + ": " + e.what());
    } catch (const ErasureAmbiguous &e) {
        throw ReconstructFailure(std::string("first-level recovery of grid ") + std::to_string(id) + ": " + e.what());
    }
    out.residual = pauli_from_bits(code_->logical_bit(cx), code_->logical_fourier_bit(cz));
    out.label = out.residual == PauliType::I ? rec.grid.label() : label_after(pauli_gate(out.residual), rec.grid.label());
    if (register_.enabled() && rec.qubit) {
        register_.apply_pauli(*rec.qubit, out.residual);
    }
    events_.push_back({{"phase", phase_},
                       {"type", "reconstruct"},
                       {"grid", id},
                       {"reconstructor", reconstructor},
                       {"chosen", out.chosen_blocks},
                       {"residual", std::string(1, pauli_char(out.residual))},
                       {"added_to_B", out.blocks_added_to_b}});
    return out;
}

CodeRef validate_config(const RunConfig &cfg) {
    CodeRef code = cfg.code_ref;
    if (!code) {
        try {
            code = code_by_name(cfg.code);
        } catch (const std::invalid_argument &e) {
            throw ConfigInvalid(e.what());
        }
    }
    size_t n = code->n();
    if (cfg.n != n) {
        throw ConfigInvalid("n = " + std::to_string(cfg.n) + " but " + code->name() + " has " + std::to_string(n) +
                            " qubits");
    }
    if (4 * cfg.t >= n) {
        throw ConfigInvalid("t must satisfy t < n/4");
    }
    if (cfg.t > code->t_max()) {
        throw ConfigInvalid("t exceeds the code's correction radius " + std::to_string(code->t_max()));
    }
    if (cfg.r == 0) {
        throw ConfigInvalid("r must be at least 1");
    }
    if (!cfg.inputs.empty() && cfg.inputs.size() != n) {
        throw ConfigInvalid("inputs must list one label per wire");
    }
    for (const auto &label : cfg.inputs) {
        if (!input_state(label, cfg.seed)) {
            throw ConfigInvalid("unknown input label " + label);
        }
    }
    const auto &profile = transversal_profile(*code);
    for (const auto &g : cfg.circuit) {
        size_t arity = g.op == CircuitOp::CX ? 2 : 1;
        if (g.wires.size() != arity) {
            throw ConfigInvalid(std::string(circuit_op_name(g.op)) + " takes " + std::to_string(arity) + " wire(s)");
        }
        for (size_t w : g.wires) {
            if (w >= n) {
                throw ConfigInvalid("wire " + std::to_string(w) + " out of range");
            }
        }
        if (g.op == CircuitOp::CX && g.wires[0] == g.wires[1]) {
            throw ConfigInvalid("CX needs two distinct wires");
        }
        GateId needed = GateId::P;
        switch (g.op) {
            case CircuitOp::T:
                needed = GateId::T;
                break;
            case CircuitOp::Y:
                needed = GateId::Y;
                break;
            case CircuitOp::CX:
                needed = GateId::CX;
                break;
            default:
                break;
        }
        if (!profile.supports(needed) || (g.op == CircuitOp::H && !profile.supports(GateId::Y))) {
            throw ConfigInvalid(std::string(circuit_op_name(g.op)) + " is not available on " + code->name());
        }
    }
    const auto &adv = cfg.adversary;
    for (size_t k : adv.corrupted) {
        if (k >= n) {
            throw ConfigInvalid("corrupted node out of range");
        }
    }
    if (!std::holds_alternative<OverThreshold>(adv.kind) && adv.corrupted.size() > cfg.t) {
        throw ConfigInvalid("more than t corrupted nodes needs the over_threshold strategy");
    }
    if (const auto *inj = std::get_if<PauliInjector>(&adv.kind)) {
        for (const auto &s : inj->selector.slots) {
            if (s.block >= n || s.holder >= n) {
                throw ConfigInvalid("injection slot out of range");
            }
        }
    }
    return code;
}

ProtocolTranscript mpqc_run(const RunConfig &cfg) {
    CodeRef code = validate_config(cfg);
    size_t n = code->n();
    ProtocolTranscript tr;
    tr.config = cfg;
    tr.corrupted = cfg.adversary.corrupted.empty() ? corrupt_set(cfg.adversary, n, cfg.t, cfg.seed)
                                                   : cfg.adversary.corrupted;
    bool use_register = n + 1 <= kDefaultQubitCeiling;
    Session s(code, cfg.t, cfg.r, cfg.adversary, tr.corrupted, cfg.seed, use_register ? n + 1 : 0);

    const auto &profile = s.profile();
    for (const auto &[logical, word] : profile.realizations) {
        std::string w;
        for (GateId g : word) {
            w += (w.empty() ? "" : " ") + std::string(gate_name(g));
        }
        tr.notes.push_back("logical " + std::string(gate_name(logical)) + " realized by transversal " + w);
    }
    const auto &table = s.teleport_table();
    for (int m = 0; m < 2; m++) {
        tr.notes.push_back(std::string("teleported H: Fourier outcome ") + (m ? "1 (|->)" : "0 (|+>)") + " -> " +
                           (table.by_outcome[m] == Correction::Y ? "Y" : "identity"));
    }

    std::vector<std::string> inputs = cfg.inputs;
    if (inputs.empty()) {
        inputs.assign(n, "|0>");
    }
    LogicalRegister reference;
    if (use_register) {
        reference = LogicalRegister(n);
        for (size_t i = 0; i < n; i++) {
            reference.prepare(i, *input_state(inputs[i], cfg.seed));
        }
    }

    std::vector<size_t> ids(n);
    s.set_phase("sharing");
    for (size_t i = 0; i < n; i++) {
        ids[i] = s.vhss_share(i, inputs[i], GridRole::input, i, use_register ? std::optional<size_t>(i) : std::nullopt);
    }
    s.set_phase("verification");
    for (size_t i = 0; i < n; i++) {
        s.vhss_verify(ids[i], VerifyMode::verify_input);
    }
    s.check_abort("verification");

    s.set_phase("computation");
    for (const auto &g : cfg.circuit) {
        size_t w = g.wires[0];
        switch (g.op) {
            case CircuitOp::P:
            case CircuitOp::T:
            case CircuitOp::Y: {
                GateId gid = g.op == CircuitOp::P ? GateId::P : g.op == CircuitOp::T ? GateId::T : GateId::Y;
                s.apply_transversal(gid, {ids[w]});
                if (use_register) {
                    reference.apply(gid, {w});
                }
                break;
            }
            case CircuitOp::CX:
                s.apply_transversal(GateId::CX, {ids[w], ids[g.wires[1]]});
                if (use_register) {
                    reference.apply(GateId::CX, {w, g.wires[1]});
                }
                break;
            case CircuitOp::H:
                tr.num_h++;
                s.apply_h(ids[w]);
                s.check_abort("computation");
                if (use_register) {
                    reference.apply(GateId::H, {w});
                }
                break;
            case CircuitOp::ancilla0: {
                tr.num_ancillas++;
                auto swap = s.ancilla_zero(ids[w]);
                ids[w] = swap.new_grid;
                s.check_abort("computation");
                if (use_register) {
                    // Follow the same discard outcome so the comparison stays meaningful.
                    bool b = swap.discarded_bit;
                    if (reference.project(w, b) < kAlgebraicTolerance) {
                        b = !b;
                        reference.project(w, b);
                    }
                    reference.reset_after(w, b);
                }
                break;
            }
        }
    }

    s.set_phase("reconstruction");
    tr.status = "success";
    if (!s.aborted()) {
        try {
            for (size_t i = 0; i < n; i++) {
                auto res = s.vhss_reconstruct(ids[i], i);
                if (res.aborted) {
                    break;
                }
                WireOutput out;
                out.wire = i;
                out.label = res.label;
                out.residual = std::string(1, pauli_char(res.residual));
                tr.outputs.push_back(out);
            }
        } catch (const ReconstructFailure &e) {
            tr.status = "failed";
            s.add_event({{"phase", "reconstruction"}, {"type", "reconstruct_failure"}, {"message", e.what()}});
        }
    }
    if (s.aborted()) {
        tr.status = "aborted";
        tr.outputs.clear();
        for (size_t i = 0; i < n; i++) {
            WireOutput out;
            out.wire = i;
            out.label = tr.corrupted.count(i) ? "corrupted" : "|0>";
            tr.outputs.push_back(out);
        }
    } else if (tr.status == "success" && use_register) {
        auto &reg = s.logical_register();
        for (auto &out : tr.outputs) {
            out.bloch = reg.bloch(out.wire);
            out.label = "bloch";
            for (const char *name : kNamedLabels) {
                LogicalRegister probe(1);
                probe.prepare(0, *named_single_qubit_state(name));
                auto b = probe.bloch(0);
                double dist = std::abs(b[0] - (*out.bloch)[0]) + std::abs(b[1] - (*out.bloch)[1]) +
                              std::abs(b[2] - (*out.bloch)[2]);
                if (dist < 1e-6) {
                    out.label = name;
                }
            }
        }
        StateVector expected = reference.state().tensor(StateVector(1));
        tr.logical_fidelity = fidelity(reg.state(), expected);
    }

    tr.events = s.events();
    tr.cheater_sets = s.cheater_sets();
    tr.resources = s.network().counters();
    tr.vhss = s.vhss_records();
    tr.broadcast_entries = s.network().log().size();
    tr.broadcast_digest = s.network().log_digest();
    return tr;
}

}  // namespace mpqc
