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

#ifndef MPQC_QUANTUM_CHECKS_H
#define MPQC_QUANTUM_CHECKS_H

#include <array>
#include <optional>
#include <string>

#include "mpqc/css_code.h"
#include "mpqc/state_vector.h"

namespace mpqc {

/// alpha|0_L> + beta|1_L>, each logical state a uniform superposition over its coset.
StateVector prepare_logical(const CssCode &code, const StateVector &input, size_t ceiling = kDefaultQubitCeiling);

struct TransversalReport {
    GateId gate = GateId::X;
    bool preserves_codespace = false;
    /// Largest weight a logical basis input loses outside the codespace.
    double leakage = 0;
    /// 2x2 (or 4x4 for two-qubit gates) matrix of the logical action, present when preserved.
    std::optional<Eigen::MatrixXcd> induced_logical;
    /// Name of the induced action up to global phase ("T", "Pdag", ...), or "" if unnamed.
    std::string induced_name;
    /// "dense" or "sparse": how the two-block evaluation was carried out.
    std::string method;
};

/// Applies `g` on every physical qubit (two-qubit gates pairwise between two blocks).
TransversalReport check_transversal_action(const CssCode &code, GateId g, size_t ceiling = kDefaultQubitCeiling);

/// Finds a standard gate equal to `u` up to global phase. Single-qubit candidates include
/// I, X, Y, Z, H, P, Pdag, T, Tdag; two-qubit candidates include CX, CPdag, CXPdag.
std::string name_unitary_up_to_phase(const Eigen::MatrixXcd &u, double tolerance = kAccumulatedTolerance);

/// True when a and b agree up to a global phase.
bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tolerance = kAccumulatedTolerance);

enum class Correction { identity, Y };

/// Correction to apply to the data qubit for each Fourier outcome (0 = |+>, 1 = |->).
struct TeleportCorrectionTable {
    std::array<Correction, 2> by_outcome{Correction::identity, Correction::identity};
};

/// Builds the table by analysing both measurement branches of the two-qubit circuit:
/// P on data and ancilla, CX with the |+> ancilla as control, P on data, Fourier
/// measurement of the ancilla.
TeleportCorrectionTable derive_teleport_correction_table();

struct TeleportOracleResult {
    StateVector output;
    int outcome = 0;
    TeleportCorrectionTable table;
};

TeleportOracleResult teleport_h_oracle(const StateVector &input, std::mt19937_64 &rng);

/// Returns lambda with u s = lambda s within the algebraic tolerance, or nothing.
std::optional<Complex> eigen_check(const Eigen::MatrixXcd &u, const StateVector &s);
std::optional<Complex> eigen_check(GateId g, const StateVector &s);

struct CliffordWitness {
    std::string pauli_in;
    /// Pauli expansion of the conjugate, e.g. "0.7071*ZI + 0.7071i*ZZ".
    std::string conjugate_out;
};

struct CliffordReport {
    bool is_clifford = false;
    std::optional<CliffordWitness> witness;
};

/// Conjugates the 15 nontrivial two-qubit Paulis. Pauli names read left to right as
/// (first qubit, second qubit), the first qubit being the high bit of the matrix index.
CliffordReport clifford_membership(const Eigen::Matrix4cd &u);

/// The magic state (|0> + e^{i pi/4}|1>)/sqrt(2).
StateVector magic_state();

/// Named single-qubit states: |0>, |1>, |+>, |->, |+i>, |-i>, |m>.
std::optional<StateVector> named_single_qubit_state(const std::string &label);

}  // namespace mpqc

#endif
