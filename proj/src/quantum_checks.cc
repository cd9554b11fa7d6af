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

#include "mpqc/quantum_checks.h"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace mpqc {

namespace {

const Complex kI(0, 1);

using SparseState = std::map<uint64_t, Complex>;

SparseState sparse_logical(const CssCode &code, int bit) {
    auto words = logical_codewords(code, bit);
    double amp = 1 / std::sqrt(static_cast<double>(words.size()));
    SparseState s;
    for (const auto &w : words) {
        s[w.to_u64()] = amp;
    }
    return s;
}

// Product of two sparse block states: first block on the low n bits.
SparseState sparse_pair(const SparseState &a, const SparseState &b, size_t n) {
    SparseState out;
    for (const auto &[ka, va] : a) {
        for (const auto &[kb, vb] : b) {
            out[ka | (kb << n)] = va * vb;
        }
    }
    return out;
}

Complex sparse_inner(const SparseState &a, const SparseState &b) {
    Complex acc = 0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        if (it != b.end()) {
            acc += std::conj(v) * it->second;
        }
    }
    return acc;
}

// Applies u to every pair (j, n + j). u must have one nonzero entry per column.
SparseState apply_monomial_pairs(const SparseState &s, const Eigen::Matrix4cd &u, size_t n) {
    std::array<int, 4> target{};
    std::array<Complex, 4> phase{};
    for (int c = 0; c < 4; c++) {
        int found = -1;
        for (int r = 0; r < 4; r++) {
            if (std::abs(u(r, c)) > kAlgebraicTolerance) {
                if (found >= 0) {
                    throw std::invalid_argument("sparse transversal evaluation needs a monomial gate");
                }
                found = r;
            }
        }
        target[c] = found;
        phase[c] = u(found, c);
    }
    SparseState out;
    for (const auto &[key, amp] : s) {
        uint64_t result = 0;
        Complex a = amp;
        for (size_t j = 0; j < n; j++) {
            int x = (key >> j) & 1;
            int y = (key >> (n + j)) & 1;
            int c = 2 * x + y;
            int r = target[c];
            a *= phase[c];
            result |= uint64_t(r >> 1) << j;
            result |= uint64_t(r & 1) << (n + j);
        }
        out[result] += a;
    }
    return out;
}

std::string format_complex(Complex c) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(4);
    double re = std::abs(c.real()) < 5e-5 ? 0 : c.real();
    double im = std::abs(c.imag()) < 5e-5 ? 0 : c.imag();
    if (im == 0) {
        ss << re;
    } else if (re == 0) {
        ss << im << "i";
    } else {
        ss << "(" << re << (im < 0 ? "-" : "+") << std::abs(im) << "i)";
    }
    return ss.str();
}

const std::array<std::pair<char, GateId>, 3> kPauliGates{{{'X', GateId::X}, {'Y', GateId::Y}, {'Z', GateId::Z}}};

Eigen::Matrix2cd pauli_matrix(char p) {
    if (p == 'I') {
        return Eigen::Matrix2cd::Identity();
    }
    for (const auto &[c, g] : kPauliGates) {
        if (c == p) {
            return single_qubit_matrix(g);
        }
    }
    throw std::invalid_argument("unknown Pauli letter");
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
                }
            }
        }
    }
    return m;
}

}  // namespace

StateVector prepare_logical(const CssCode &code, const StateVector &input, size_t ceiling) {
    if (code.n() > ceiling) {
        throw TooManyQubits(code.name() + " needs " + std::to_string(code.n()) + " qubits, ceiling is " +
                            std::to_string(ceiling));
    }
    if (input.num_qubits() != 1) {
        throw std::invalid_argument("prepare_logical needs a single-qubit input");
    }
    std::vector<Complex> amps(size_t{1} << code.n(), Complex(0));
    for (int b = 0; b < 2; b++) {
        auto words = logical_codewords(code, b);
        Complex amp = input.amplitude(b) / std::sqrt(static_cast<double>(words.size()));
        for (const auto &w : words) {
            amps[w.to_u64()] = amp;
        }
    }
    return StateVector::from_amplitudes(std::move(amps), ceiling);
}

bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tolerance) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Complex denom = (b.adjoint() * b).trace();
    if (std::abs(denom) == 0) {
        return a.norm() <= tolerance;
    }
    Complex lambda = (b.adjoint() * a).trace() / denom;
    if (std::abs(std::abs(lambda) - 1) > tolerance) {
        return false;
    }
    return (a - lambda * b).cwiseAbs().maxCoeff() <= tolerance;
}

std::string name_unitary_up_to_phase(const Eigen::MatrixXcd &u, double tolerance) {
    if (u.rows() == 2) {
        Eigen::Matrix2cd tdag;
        tdag << 1, 0, 0, std::exp(-kI * (M_PI / 4));
        std::vector<std::pair<std::string, Eigen::Matrix2cd>> named = {
            {"I", Eigen::Matrix2cd::Identity()},
            {"X", single_qubit_matrix(GateId::X)},
            {"Y", single_qubit_matrix(GateId::Y)},
            {"Z", single_qubit_matrix(GateId::Z)},
            {"H", single_qubit_matrix(GateId::H)},
            {"P", single_qubit_matrix(GateId::P)},
            {"Pdag", single_qubit_matrix(GateId::Pdag)},
            {"T", single_qubit_matrix(GateId::T)},
            {"Tdag", tdag},
        };
        for (const auto &[name, m] : named) {
            if (equal_up_to_phase(u, m, tolerance)) {
                return name;
            }
        }
    } else if (u.rows() == 4) {
        Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
        cz(3, 3) = -1;
        std::vector<std::pair<std::string, Eigen::Matrix4cd>> named = {
            {"II", Eigen::Matrix4cd::Identity()},
            {"CX", two_qubit_matrix(GateId::CX)},
            {"CZ", cz},
            {"CPdag", two_qubit_matrix(GateId::CPdag)},
            {"CXPdag", two_qubit_matrix(GateId::CXPdag)},
        };
        for (const auto &[name, m] : named) {
            if (equal_up_to_phase(u, m, tolerance)) {
                return name;
            }
        }
    }
    return "";
}

TransversalReport check_transversal_action(const CssCode &code, GateId g, size_t ceiling) {
    size_t n = code.n();
    if (n > ceiling) {
        throw TooManyQubits(code.name() + " does not fit the statevector ceiling");
    }
    if (code.k() != 1) {
        throw KNotOne("transversal checks need a k = 1 code");
    }
    TransversalReport report;
    report.gate = g;
    if (gate_arity(g) == 1) {
        report.method = "dense";
        auto u = single_qubit_matrix(g);
        std::array<StateVector, 2> logical{prepare_logical(code, StateVector::basis_state(1, 0), ceiling),
                                           prepare_logical(code, StateVector::basis_state(1, 1), ceiling)};
        Eigen::MatrixXcd m(2, 2);
        for (int b = 0; b < 2; b++) {
            StateVector s = logical[b];
            for (size_t q = 0; q < n; q++) {
                s.apply_1q(u, q);
            }
            double kept = 0;
            for (int a = 0; a < 2; a++) {
                m(a, b) = logical[a].inner(s);
                kept += std::norm(m(a, b));
            }
            report.leakage = std::max(report.leakage, 1 - kept);
        }
        report.preserves_codespace = report.leakage <= kAccumulatedTolerance;
        if (report.preserves_codespace) {
            report.induced_logical = m;
            report.induced_name = name_unitary_up_to_phase(m);
        }
        return report;
    }

    auto u = two_qubit_matrix(g);
    Eigen::MatrixXcd m(4, 4);
    if (2 * n <= ceiling) {
        report.method = "dense";
        std::vector<StateVector> logical;
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                auto la = prepare_logical(code, StateVector::basis_state(1, a), ceiling);
                auto lb = prepare_logical(code, StateVector::basis_state(1, b), ceiling);
                logical.push_back(la.tensor(lb));
            }
        }
        for (int in = 0; in < 4; in++) {
            StateVector s = logical[in];
            for (size_t j = 0; j < n; j++) {
                s.apply_2q(u, j, n + j);
            }
            double kept = 0;
            for (int out = 0; out < 4; out++) {
                m(out, in) = logical[out].inner(s);
                kept += std::norm(m(out, in));
            }
            report.leakage = std::max(report.leakage, 1 - kept);
        }
    } else {
        // The 2n-qubit register is too large for dense amplitudes; monomial gates keep the
        // logical basis states sparse (one amplitude per pair of coset elements).
        report.method = "sparse";
        std::array<SparseState, 2> block{sparse_logical(code, 0), sparse_logical(code, 1)};
        std::vector<SparseState> logical;
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                logical.push_back(sparse_pair(block[a], block[b], n));
            }
        }
        for (int in = 0; in < 4; in++) {
            auto s = apply_monomial_pairs(logical[in], u, n);
            double kept = 0;
            for (int out = 0; out < 4; out++) {
                m(out, in) = sparse_inner(logical[out], s);
                kept += std::norm(m(out, in));
            }
            report.leakage = std::max(report.leakage, 1 - kept);
        }
    }
    report.preserves_codespace = report.leakage <= kAccumulatedTolerance;
    if (report.preserves_codespace) {
        report.induced_logical = m;
        report.induced_name = name_unitary_up_to_phase(m);
    }
    return report;
}

namespace {

// Runs the teleport circuit up to (but excluding) the ancilla measurement.
// Qubit 0 is the data, qubit 1 the |+> ancilla.
StateVector teleport_pre_measurement(const StateVector &input) {
    StateVector s = input.tensor(StateVector::single_qubit(1, 1));
    s.apply(GateId::P, {0});
    s.apply(GateId::P, {1});
    s.apply(GateId::CX, {1, 0});
    s.apply(GateId::P, {0});
    return s;
}

// Data amplitudes conditioned on the ancilla being found in |+> (m = 0) or |-> (m = 1).
std::array<Complex, 2> data_branch(const StateVector &s, int m) {
    double sign = m == 0 ? 1 : -1;
    double r = 1 / std::sqrt(2.0);
    return {r * (s.amplitude(0) + sign * s.amplitude(2)), r * (s.amplitude(1) + sign * s.amplitude(3))};
}

}  // namespace

TeleportCorrectionTable derive_teleport_correction_table() {
    TeleportCorrectionTable table;
    auto h = single_qubit_matrix(GateId::H);
    auto y = single_qubit_matrix(GateId::Y);
    for (int m = 0; m < 2; m++) {
        Eigen::Matrix2cd k;
        for (int d = 0; d < 2; d++) {
            auto branch = data_branch(teleport_pre_measurement(StateVector::basis_state(1, d)), m);
            k(0, d) = branch[0];
            k(1, d) = branch[1];
        }
        // Each branch occurs with probability 1/2 for every input, so sqrt(2) K is unitary.
        k *= std::sqrt(2.0);
        if (equal_up_to_phase(k, h, kAlgebraicTolerance)) {
            table.by_outcome[m] = Correction::identity;
        } else if (equal_up_to_phase(y * k, h, kAlgebraicTolerance)) {
            table.by_outcome[m] = Correction::Y;
        } else {
            throw std::logic_error("teleport branch is neither H nor Y-correctable to H");
        }
    }
    return table;
}

TeleportOracleResult teleport_h_oracle(const StateVector &input, std::mt19937_64 &rng) {
    if (input.num_qubits() != 1) {
        throw std::invalid_argument("teleport_h_oracle needs a single-qubit input");
    }
    static const TeleportCorrectionTable table = derive_teleport_correction_table();
    auto [rec, post] = measure(teleport_pre_measurement(input), {1}, Basis::fourier, rng);
    int m = rec.outcomes[0];
    auto branch = data_branch(post, m);
    StateVector out = StateVector::single_qubit(branch[0], branch[1]);
    if (table.by_outcome[m] == Correction::Y) {
        out.apply(GateId::Y, {0});
    }
    return TeleportOracleResult{out, m, table};
}

std::optional<Complex> eigen_check(const Eigen::MatrixXcd &u, const StateVector &s) {
    size_t dim = s.amplitudes().size();
    if (static_cast<size_t>(u.rows()) != dim || static_cast<size_t>(u.cols()) != dim) {
        throw std::invalid_argument("operator dimension does not match the state");
    }
    Eigen::VectorXcd v(dim);
    for (size_t i = 0; i < dim; i++) {
        v(i) = s.amplitude(i);
    }
    Eigen::VectorXcd w = u * v;
    Complex lambda = v.dot(w);
    if ((w - lambda * v).norm() > kAlgebraicTolerance) {
        return std::nullopt;
    }
    return lambda;
}

std::optional<Complex> eigen_check(GateId g, const StateVector &s) {
    return eigen_check(gate_matrix(g), s);
}

CliffordReport clifford_membership(const Eigen::Matrix4cd &u) {
    if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > kAlgebraicTolerance) {
        throw NotUnitary("clifford_membership needs a unitary matrix");
    }
    const std::string letters = "IXYZ";
    CliffordReport report;
    report.is_clifford = true;
    for (char a : letters) {
        for (char b : letters) {
            if (a == 'I' && b == 'I') {
                continue;
            }
            Eigen::Matrix4cd conj = u * kron(pauli_matrix(a), pauli_matrix(b)) * u.adjoint();
            std::vector<std::pair<std::string, Complex>> terms;
            for (char c : letters) {
                for (char d : letters) {
                    Complex coeff = (kron(pauli_matrix(c), pauli_matrix(d)).adjoint() * conj).trace() / 4.0;
                    if (std::abs(coeff) > kAlgebraicTolerance) {
                        terms.push_back({std::string{c, d}, coeff});
                    }
                }
            }
            bool is_pauli = terms.size() == 1 && std::abs(std::abs(terms[0].second) - 1) <= kAlgebraicTolerance;
            if (is_pauli) {
                Complex p = terms[0].second;
                bool unit_phase = std::abs(p - Complex(1)) <= kAlgebraicTolerance ||
                                  std::abs(p + Complex(1)) <= kAlgebraicTolerance ||
                                  std::abs(p - kI) <= kAlgebraicTolerance || std::abs(p + kI) <= kAlgebraicTolerance;
                is_pauli = unit_phase;
            }
            if (!is_pauli && report.is_clifford) {
                report.is_clifford = false;
                std::string out;
                for (const auto &[name, coeff] : terms) {
                    if (!out.empty()) {
                        out += " + ";
                    }
                    out += format_complex(coeff) + "*" + name;
                }
                report.witness = CliffordWitness{std::string{a, b}, out};
            }
        }
    }
    return report;
}

StateVector magic_state() {
    return StateVector::single_qubit(1, std::exp(kI * (M_PI / 4)));
}

std::optional<StateVector> named_single_qubit_state(const std::string &label) {
    if (label == "|0>") {
        return StateVector::basis_state(1, 0);
    }
    if (label == "|1>") {
        return StateVector::basis_state(1, 1);
    }
    if (label == "|+>") {
        return StateVector::single_qubit(1, 1);
    }
    if (label == "|->") {
        return StateVector::single_qubit(1, -1);
    }
    if (label == "|+i>") {
        return StateVector::single_qubit(1, kI);
    }
    if (label == "|-i>") {
        return StateVector::single_qubit(1, -kI);
    }
    if (label == "|m>") {
        return magic_state();
    }
    return std::nullopt;
}

}  // namespace mpqc
