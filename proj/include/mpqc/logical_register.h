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

#ifndef MPQC_LOGICAL_REGISTER_H
#define MPQC_LOGICAL_REGISTER_H

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpqc/pauli_frame.h"
#include "mpqc/quantum_checks.h"
#include "mpqc/state_vector.h"

namespace mpqc {

/// Single-qubit state for an input label: a named state, or "rho<k>" for a Haar-random state
/// drawn from a stream keyed by (seed, k).
std::optional<StateVector> input_state(const std::string &label, uint64_t seed);

/// The logical content of the shared grids, one unencoded qubit per grid. Errors live in the
/// Pauli frames; this register only sees logical operations and decoded residual Paulis.
class LogicalRegister {
   public:
    /// A disabled register; callers fall back to label arithmetic.
    LogicalRegister() = default;
    explicit LogicalRegister(size_t num_qubits);

    bool enabled() const {
        return state_.has_value();
    }
    size_t num_qubits() const {
        return state_ ? state_->num_qubits() : 0;
    }
    const StateVector &state() const {
        return *state_;
    }

    /// Rotates qubit q from |0> to `single`. The qubit must be in |0> and unentangled.
    void prepare(size_t q, const StateVector &single);
    void apply(GateId g, const std::vector<size_t> &targets);
    void apply_pauli(size_t q, PauliType p);
    /// Born-rule measurement with collapse.
    bool measure(size_t q, Basis basis, std::mt19937_64 &rng);
    /// Forces qubit q to outcome `bit` (standard basis) and renormalizes. Returns the branch probability.
    double project(size_t q, bool bit);
    /// After a standard-basis outcome `bit`, returns the qubit to |0>.
    void reset_after(size_t q, bool bit);
    /// (<X>, <Y>, <Z>) of qubit q.
    std::array<double, 3> bloch(size_t q) const;

   private:
    std::optional<StateVector> state_;
};

/// Which physical transversal word realizes each logical gate on a code.
struct TransversalProfile {
    std::string code;
    /// Physical single-qubit gates examined, with their reports.
    std::map<GateId, TransversalReport> reports;
    /// Logical gate -> physical gate word (applied first to last). Missing means not realizable.
    std::map<GateId, std::vector<GateId>> realizations;
    /// True when the reports came from the statevector check rather than the weight classification.
    bool checked = false;

    bool supports(GateId logical) const {
        return realizations.count(logical) > 0;
    }
};

/// Cached per code (name and generators). Uses check_transversal_action when the code fits the
/// qubit ceiling; larger codes fall back to transversal_gate_set with the physical gate itself.
const TransversalProfile &transversal_profile(const CssCode &code);

}  // namespace mpqc

#endif
