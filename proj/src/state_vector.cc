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

#include "mpqc/state_vector.h"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace mpqc {

namespace {

const Complex kI(0, 1);

}  // namespace

double uniform_draw(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

StateVector::StateVector(size_t num_qubits, size_t ceiling) : num_qubits_(num_qubits) {
    if (num_qubits > ceiling) {
        throw TooManyQubits(std::to_string(num_qubits) + " qubits exceeds the ceiling of " + std::to_string(ceiling));
    }
    amps_.assign(size_t{1} << num_qubits, Complex(0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes, size_t ceiling) {
    size_t len = amplitudes.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    size_t n = 0;
    while ((size_t{1} << n) < len) {
        n++;
    }
    StateVector s(n, ceiling);
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1) > kAccumulatedTolerance) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::basis_state(size_t num_qubits, size_t index) {
    StateVector s(num_qubits);
    if (index >= s.amps_.size()) {
        throw IndexOutOfRange("basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::single_qubit(Complex a0, Complex a1) {
    double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    if (norm == 0) {
        throw std::invalid_argument("zero vector is not a state");
    }
    return from_amplitudes({a0 / norm, a1 / norm});
}

StateVector StateVector::random_single_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0, 1);
    Complex a(gauss(rng), gauss(rng));
    Complex b(gauss(rng), gauss(rng));
    return single_qubit(a, b);
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::check_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw IndexOutOfRange("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                              " qubits");
    }
}

void StateVector::apply_1q(const Eigen::Matrix2cd &u, size_t q) {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a0 = amps_[i];
        Complex a1 = amps_[i | bit];
        amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_2q(const Eigen::Matrix4cd &u, size_t q0, size_t q1) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) {
        throw std::invalid_argument("two-qubit gate targets must be distinct");
    }
    size_t b0 = size_t{1} << q0;
    size_t b1 = size_t{1} << q1;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & (b0 | b1)) {
            continue;
        }
        size_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
        Complex in[4];
        for (int k = 0; k < 4; k++) {
            in[k] = amps_[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += u(r, c) * in[c];
            }
            amps_[idx[r]] = acc;
        }
    }
}

void StateVector::apply(GateId g, const std::vector<size_t> &targets) {
    size_t arity = gate_arity(g);
    if (targets.size() != arity) {
        throw ArityMismatch(std::string(gate_name(g)) + " acts on " + std::to_string(arity) + " qubit(s), got " +
                            std::to_string(targets.size()));
    }
    for (size_t q : targets) {
        check_qubit(q);
    }
    if (arity == 1) {
        apply_1q(single_qubit_matrix(g), targets[0]);
    } else {
        apply_2q(two_qubit_matrix(g), targets[0], targets[1]);
    }
}

double StateVector::probability_one(size_t q) const {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    double p = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

double StateVector::project(size_t q, bool value) {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    double p = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (static_cast<bool>(i & bit) != value) {
            amps_[i] = 0;
        } else {
            p += std::norm(amps_[i]);
        }
    }
    if (p <= 0) {
        throw std::domain_error("projection onto a zero-probability branch");
    }
    double scale = 1 / std::sqrt(p);
    for (auto &a : amps_) {
        a *= scale;
    }
    return p;
}

StateVector StateVector::tensor(const StateVector &other) const {
    StateVector out(num_qubits_ + other.num_qubits_);
    for (size_t hi = 0; hi < other.amps_.size(); hi++) {
        for (size_t lo = 0; lo < amps_.size(); lo++) {
            out.amps_[(hi << num_qubits_) | lo] = amps_[lo] * other.amps_[hi];
        }
    }
    return out;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Complex acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

Eigen::Matrix2cd single_qubit_matrix(GateId g) {
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (g) {
        case GateId::H:
            m << r, r, r, -r;
            break;
        case GateId::P:
            m << 1, 0, 0, kI;
            break;
        case GateId::Pdag:
            m << 1, 0, 0, -kI;
            break;
        case GateId::T:
            m << 1, 0, 0, std::exp(kI * (M_PI / 4));
            break;
        case GateId::X:
            m << 0, 1, 1, 0;
            break;
        case GateId::Y:
            m << 0, -kI, kI, 0;
            break;
        case GateId::Z:
            m << 1, 0, 0, -1;
            break;
        default:
            throw ArityMismatch(std::string(gate_name(g)) + " is not a single-qubit gate");
    }
    return m;
}

Eigen::Matrix4cd two_qubit_matrix(GateId g) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    Eigen::Matrix2cd target;
    switch (g) {
        case GateId::CX:
            target = single_qubit_matrix(GateId::X);
            break;
        case GateId::CPdag:
            target = single_qubit_matrix(GateId::Pdag);
            break;
        case GateId::CXPdag:
            target = single_qubit_matrix(GateId::X) * single_qubit_matrix(GateId::Pdag);
            break;
        default:
            throw ArityMismatch(std::string(gate_name(g)) + " is not a two-qubit gate");
    }
    m.block<2, 2>(2, 2) = target;
    return m;
}

Eigen::MatrixXcd gate_matrix(GateId g) {
    if (gate_arity(g) == 1) {
        return single_qubit_matrix(g);
    }
    return two_qubit_matrix(g);
}

StateVector apply_gate(StateVector s, GateId g, const std::vector<size_t> &targets) {
    std::set<size_t> distinct(targets.begin(), targets.end());
    if (distinct.size() != targets.size()) {
        throw std::invalid_argument("gate targets must be distinct");
    }
    s.apply(g, targets);
    return s;
}

std::pair<MeasurementRecord, StateVector> measure(StateVector s, const std::vector<size_t> &qubits, Basis basis,
                                                  std::mt19937_64 &rng) {
    MeasurementRecord rec;
    rec.qubits = qubits;
    rec.basis = basis;
    auto h = single_qubit_matrix(GateId::H);
    for (size_t q : qubits) {
        if (basis == Basis::fourier) {
            s.apply_1q(h, q);
        }
        double p1 = s.probability_one(q);
        double u = uniform_draw(rng);
        bool outcome = u >= 1 - p1;
        s.project(q, outcome);
        if (basis == Basis::fourier) {
            s.apply_1q(h, q);
        }
        rec.outcomes.push_back(outcome);
        rec.draws.push_back(u);
    }
    return {std::move(rec), std::move(s)};
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(a.inner(b));
}

void write_amplitudes(std::ostream &out, const StateVector &s) {
    out << std::setprecision(17);
    for (size_t i = 0; i < s.amplitudes().size(); i++) {
        out << i << ' ' << s.amplitudes()[i].real() << ' ' << s.amplitudes()[i].imag() << '\n';
    }
}

StateVector read_amplitudes(std::istream &in, size_t ceiling) {
    std::vector<Complex> amps;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        size_t index;
        double re;
        double im;
        if (!(ls >> index >> re >> im)) {
            throw std::invalid_argument("malformed amplitude line " + std::to_string(line_no));
        }
        if (index != amps.size()) {
            throw std::invalid_argument("amplitude indices must be consecutive from 0 (line " +
                                        std::to_string(line_no) + ")");
        }
        amps.emplace_back(re, im);
    }
    return StateVector::from_amplitudes(std::move(amps), ceiling);
}

AmplitudeComparison compare_amplitudes(const StateVector &a, const StateVector &b, double tolerance,
                                       bool phase_invariant) {
    AmplitudeComparison result;
    if (a.num_qubits() != b.num_qubits()) {
        return result;
    }
    Complex phase = 1;
    if (phase_invariant) {
        Complex overlap = b.inner(a);
        if (std::abs(overlap) > 0) {
            phase = overlap / std::abs(overlap);
        }
    }
    for (size_t i = 0; i < a.amplitudes().size(); i++) {
        double dev = std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]);
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.worst_index = i;
        }
    }
    result.equal = result.max_deviation <= tolerance;
    return result;
}

}  // namespace mpqc
