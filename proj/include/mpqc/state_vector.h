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

#ifndef MPQC_STATE_VECTOR_H
#define MPQC_STATE_VECTOR_H

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpqc/gate.h"

namespace mpqc {

using Complex = std::complex<double>;

constexpr double kAlgebraicTolerance = 1e-10;
constexpr double kAccumulatedTolerance = 1e-9;
constexpr size_t kDefaultQubitCeiling = 16;

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct TooManyQubits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Basis { standard, fourier };

/// Dense state of up to `ceiling` qubits. Qubit q is bit q of the basis index.
class StateVector {
   public:
    explicit StateVector(size_t num_qubits, size_t ceiling = kDefaultQubitCeiling);
    /// Length must be a power of two; the norm must be 1 within the accumulated tolerance.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes, size_t ceiling = kDefaultQubitCeiling);
    static StateVector basis_state(size_t num_qubits, size_t index);
    static StateVector single_qubit(Complex a0, Complex a1);
    /// Haar-random single-qubit state.
    static StateVector random_single_qubit(std::mt19937_64 &rng);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    Complex amplitude(size_t index) const {
        return amps_.at(index);
    }
    double norm_squared() const;

    void apply_1q(const Eigen::Matrix2cd &u, size_t q);
    /// Matrix index is 2 * bit(q0) + bit(q1).
    void apply_2q(const Eigen::Matrix4cd &u, size_t q0, size_t q1);
    void apply(GateId g, const std::vector<size_t> &targets);

    /// Projects qubit q onto `bit` in the standard basis and renormalizes. Returns the branch probability.
    double project(size_t q, bool bit);
    double probability_one(size_t q) const;

    /// |this> (x) |other>, with `other` on the higher qubit indices.
    StateVector tensor(const StateVector &other) const;
    Complex inner(const StateVector &other) const;

   private:
    void check_qubit(size_t q) const;

    size_t num_qubits_;
    std::vector<Complex> amps_;
};

struct MeasurementRecord {
    std::vector<size_t> qubits;
    Basis basis = Basis::standard;
    std::vector<uint8_t> outcomes;
    /// The uniform draw in [0, 1) consumed for each outcome.
    std::vector<double> draws;
};

Eigen::Matrix2cd single_qubit_matrix(GateId g);
Eigen::Matrix4cd two_qubit_matrix(GateId g);
Eigen::MatrixXcd gate_matrix(GateId g);

StateVector apply_gate(StateVector s, GateId g, const std::vector<size_t> &targets);

/// Measures the listed qubits one after another. Fourier basis = H, standard measurement, H.
/// Outcome 0 in the Fourier basis is |+>.
std::pair<MeasurementRecord, StateVector> measure(StateVector s, const std::vector<size_t> &qubits, Basis basis,
                                                  std::mt19937_64 &rng);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform_draw(std::mt19937_64 &rng);

/// One "index real imag" line per amplitude.
void write_amplitudes(std::ostream &out, const StateVector &s);
StateVector read_amplitudes(std::istream &in, size_t ceiling = kDefaultQubitCeiling);

struct AmplitudeComparison {
    bool equal = false;
    double max_deviation = 0;
    size_t worst_index = 0;
};
/// With phase_invariant set, b is first rotated by the global phase that best aligns it with a.
AmplitudeComparison compare_amplitudes(const StateVector &a, const StateVector &b, double tolerance,
                                       bool phase_invariant);

}  // namespace mpqc

#endif
