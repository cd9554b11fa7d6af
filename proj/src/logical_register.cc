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

#include "mpqc/logical_register.h"

#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace mpqc {

std::optional<StateVector> input_state(const std::string &label, uint64_t seed) {
    if (auto named = named_single_qubit_state(label)) {
        return named;
    }
    if (label.size() > 3 && label.compare(0, 3, "rho") == 0) {
        uint64_t k = 0;
        for (size_t i = 3; i < label.size(); i++) {
            if (label[i] < '0' || label[i] > '9') {
                return std::nullopt;
            }
            k = 10 * k + static_cast<uint64_t>(label[i] - '0');
        }
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
        return StateVector::random_single_qubit(rng);
    }
    return std::nullopt;
}

LogicalRegister::LogicalRegister(size_t num_qubits) : state_(StateVector(num_qubits)) {
}

void LogicalRegister::prepare(size_t q, const StateVector &single) {
    Complex a = single.amplitude(0);
    Complex b = single.amplitude(1);
    Eigen::Matrix2cd u;
    u << a, -std::conj(b), b, std::conj(a);
    state_->apply_1q(u, q);
}

void LogicalRegister::apply(GateId g, const std::vector<size_t> &targets) {
    state_->apply(g, targets);
}

void LogicalRegister::apply_pauli(size_t q, PauliType p) {
    switch (p) {
        case PauliType::I:
            return;
        case PauliType::X:
            state_->apply(GateId::X, {q});
            return;
        case PauliType::Y:
            state_->apply(GateId::Y, {q});
            return;
        case PauliType::Z:
            state_->apply(GateId::Z, {q});
            return;
    }
}

bool LogicalRegister::measure(size_t q, Basis basis, std::mt19937_64 &rng) {
    auto [rec, post] = mpqc::measure(std::move(*state_), {q}, basis, rng);
    state_ = std::move(post);
    return rec.outcomes.at(0) != 0;
}

double LogicalRegister::project(size_t q, bool bit) {
    return state_->project(q, bit);
}

void LogicalRegister::reset_after(size_t q, bool bit) {
    if (bit) {
        state_->apply(GateId::X, {q});
    }
}

std::array<double, 3> LogicalRegister::bloch(size_t q) const {
    const auto &a = state_->amplitudes();
    size_t mask = size_t{1} << q;
    Complex cross = 0;
    double z = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (i & mask) {
            z -= std::norm(a[i]);
        } else {
            z += std::norm(a[i]);
            cross += std::conj(a[i]) * a[i | mask];
        }
    }
    return {2 * cross.real(), 2 * cross.imag(), z};
}

namespace {

Eigen::MatrixXcd word_action(const TransversalProfile &p, const std::vector<GateId> &word) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    for (GateId g : word) {
        m = (*p.reports.at(g).induced_logical) * m;
    }
    return m;
}

TransversalProfile build_profile(const CssCode &code) {
    TransversalProfile p;
    p.code = code.name();
    const GateId physical[] = {GateId::X, GateId::Y, GateId::Z, GateId::P, GateId::Pdag, GateId::T, GateId::H};
    const GateId targets[] = {GateId::X, GateId::Y, GateId::Z, GateId::P, GateId::T};
    if (code.n() > kDefaultQubitCeiling) {
        for (GateId g : transversal_gate_set(code)) {
            p.realizations[g] = {g};
        }
        for (GateId g : {GateId::X, GateId::Y, GateId::Z}) {
            p.realizations[g] = {g};
        }
        return p;
    }
    p.checked = true;
    std::vector<GateId> usable;
    for (GateId g : physical) {
        p.reports[g] = check_transversal_action(code, g);
        if (p.reports[g].preserves_codespace) {
            usable.push_back(g);
        }
    }
    // Shortest words first, in a fixed gate order, so the choice is stable.
    std::deque<std::vector<GateId>> queue;
    for (GateId g : usable) {
        queue.push_back({g});
    }
    while (!queue.empty()) {
        auto word = queue.front();
        queue.pop_front();
        Eigen::MatrixXcd m = word_action(p, word);
        for (GateId t : targets) {
            if (!p.realizations.count(t) && equal_up_to_phase(m, single_qubit_matrix(t))) {
                p.realizations[t] = word;
            }
        }
        if (word.size() < 3) {
            for (GateId g : usable) {
                auto next = word;
                next.push_back(g);
                queue.push_back(next);
            }
        }
    }
    if (transversal_gate_set(code).count(GateId::CX)) {
        p.realizations[GateId::CX] = {GateId::CX};
    }
    return p;
}

}  // namespace

const TransversalProfile &transversal_profile(const CssCode &code) {
    static std::mutex mu;
    static std::map<std::string, TransversalProfile> cache;
    std::string key = code.name() + "\n" + code.V().to_text() + code.W().to_text();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_profile(code)).first;
    }
    return it->second;
}

}  // namespace mpqc
