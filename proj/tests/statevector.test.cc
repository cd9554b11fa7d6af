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

#include <cmath>
#include <fstream>
#include <sstream>

#include "mpqc/quantum_checks.h"

using namespace mpqc;

namespace {

const Complex kI(0, 1);

StateVector random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    std::vector<Complex> a(size_t{1} << n);
    double norm = 0;
    for (auto &x : a) {
        x = Complex(g(rng), g(rng));
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(a);
}

}  // namespace

TEST(statevector, x_twice_is_identity) {
    auto s = apply_gate(apply_gate(StateVector(1), GateId::X, {0}), GateId::X, {0});
    EXPECT_EQ(s.amplitude(0), Complex(1));
    EXPECT_EQ(s.amplitude(1), Complex(0));
}

TEST(statevector, h_on_zero) {
    auto s = apply_gate(StateVector(1), GateId::H, {0});
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-12);
}

TEST(statevector, p_then_pdag_restores_random_state) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        auto s = random_state(3, rng);
        auto t = apply_gate(apply_gate(s, GateId::P, {1}), GateId::Pdag, {1});
        EXPECT_TRUE(compare_amplitudes(s, t, kAlgebraicTolerance, false).equal);
    }
}

TEST(statevector, cx_matches_explicit_permutation) {
    // Control qubit 2, target qubit 0 on |q2 q1 q0> = |1 0 0> -> |1 0 1>.
    auto s = apply_gate(StateVector::basis_state(3, 0b100), GateId::CX, {2, 0});
    EXPECT_EQ(s.amplitude(0b101), Complex(1));
}

TEST(statevector, errors) {
    StateVector s(2);
    EXPECT_THROW(apply_gate(s, GateId::CX, {0}), ArityMismatch);
    EXPECT_THROW(apply_gate(s, GateId::H, {2}), IndexOutOfRange);
    EXPECT_THROW(apply_gate(s, GateId::CX, {1, 1}), std::invalid_argument);
    EXPECT_THROW(StateVector(17), TooManyQubits);
}

TEST(statevector, norm_preserved_over_random_sequences) {
    std::mt19937_64 rng(2);
    auto s = random_state(6, rng);
    const GateId gates[] = {GateId::H, GateId::P, GateId::T, GateId::X, GateId::Y, GateId::Z, GateId::Pdag};
    for (int step = 0; step < 2000; step++) {
        if (rng() % 4 == 0) {
            size_t a = rng() % 6;
            size_t b = (a + 1 + rng() % 5) % 6;
            s.apply(GateId::CX, {a, b});
        } else {
            s.apply(gates[rng() % 7], {rng() % 6});
        }
    }
    EXPECT_NEAR(s.norm_squared(), 1, kAccumulatedTolerance);
}

TEST(measure, deterministic_cases) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        EXPECT_EQ(measure(StateVector(1), {0}, Basis::standard, rng).first.outcomes[0], 0);
        auto plus = StateVector::single_qubit(1, 1);
        auto [rec, post] = measure(plus, {0}, Basis::fourier, rng);
        EXPECT_EQ(rec.outcomes[0], 0);
        EXPECT_NEAR(fidelity(post, plus), 1, 1e-12);
    }
}

TEST(measure, fourier_on_zero_is_balanced) {
    std::mt19937_64 rng(4);
    int ones = 0;
    for (int trial = 0; trial < 10000; trial++) {
        ones += measure(StateVector(1), {0}, Basis::fourier, rng).first.outcomes[0];
    }
    EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
}

TEST(measure, born_frequencies_and_collapse) {
    std::mt19937_64 rng(5);
    auto s = StateVector::single_qubit(std::sqrt(0.2), std::sqrt(0.8));
    int ones = 0;
    for (int trial = 0; trial < 10000; trial++) {
        auto [rec, post] = measure(s, {0}, Basis::standard, rng);
        ones += rec.outcomes[0];
        EXPECT_NEAR(std::abs(post.amplitude(rec.outcomes[0])), 1, 1e-12);
    }
    EXPECT_NEAR(ones / 10000.0, 0.8, 0.02);
}

TEST(measure, same_seed_same_record) {
    std::mt19937_64 seed_rng(9);
    auto s = random_state(4, seed_rng);
    std::mt19937_64 a(77);
    std::mt19937_64 b(77);
    auto ra = measure(s, {0, 1, 2, 3}, Basis::fourier, a).first;
    auto rb = measure(s, {0, 1, 2, 3}, Basis::fourier, b).first;
    EXPECT_EQ(ra.outcomes, rb.outcomes);
    EXPECT_EQ(ra.draws, rb.draws);
}

TEST(prepare_logical, steane_zero_and_one) {
    auto code = steane_7();
    for (int b = 0; b < 2; b++) {
        auto s = prepare_logical(code, StateVector::basis_state(1, b));
        auto words = logical_codewords(code, b);
        ASSERT_EQ(words.size(), 8u);
        for (const auto &w : words) {
            EXPECT_NEAR(s.amplitude(w.to_u64()).real(), 1 / std::sqrt(8.0), 1e-12);
        }
        EXPECT_NEAR(s.norm_squared(), 1, 1e-12);
    }
}

TEST(prepare_logical, standard_measurement_always_lands_in_v) {
    std::mt19937_64 rng(6);
    for (const auto &code : {steane_7(), quantum_reed_muller_15()}) {
        auto input = StateVector::random_single_qubit(rng);
        auto s = prepare_logical(code, input);
        std::vector<size_t> all(code.n());
        for (size_t q = 0; q < code.n(); q++) {
            all[q] = q;
        }
        int trials = code.n() == 7 ? 1000 : 100;
        for (int t = 0; t < trials; t++) {
            auto rec = measure(s, all, Basis::standard, rng).first;
            BitVector word(code.n());
            for (size_t q = 0; q < code.n(); q++) {
                word.set(q, rec.outcomes[q]);
            }
            ASSERT_TRUE(code.V().contains(word));
        }
    }
}

TEST(transversal, steane) {
    auto code = steane_7();
    auto p = check_transversal_action(code, GateId::P);
    EXPECT_TRUE(p.preserves_codespace);
    EXPECT_EQ(p.induced_name, "Pdag");
    auto h = check_transversal_action(code, GateId::H);
    EXPECT_TRUE(h.preserves_codespace);
    EXPECT_EQ(h.induced_name, "H");
    auto t = check_transversal_action(code, GateId::T);
    EXPECT_FALSE(t.preserves_codespace);
    EXPECT_NEAR(t.leakage, 0.4375, 1e-9);
    auto cx = check_transversal_action(code, GateId::CX);
    EXPECT_TRUE(cx.preserves_codespace);
    EXPECT_EQ(cx.induced_name, "CX");
    EXPECT_EQ(cx.method, "dense");
}

TEST(transversal, sparse_cx_matches_dense_on_steane) {
    auto code = steane_7();
    auto dense = check_transversal_action(code, GateId::CX);
    auto sparse = check_transversal_action(code, GateId::CX, 13);
    EXPECT_EQ(sparse.method, "sparse");
    ASSERT_TRUE(sparse.induced_logical && dense.induced_logical);
    EXPECT_LT((*sparse.induced_logical - *dense.induced_logical).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(transversal, qrm) {
    auto code = quantum_reed_muller_15();
    auto p = check_transversal_action(code, GateId::P);
    EXPECT_TRUE(p.preserves_codespace);
    EXPECT_EQ(p.induced_name, "Pdag");
    auto t = check_transversal_action(code, GateId::T);
    EXPECT_TRUE(t.preserves_codespace);
    EXPECT_EQ(t.induced_name, "Tdag");
    auto h = check_transversal_action(code, GateId::H);
    EXPECT_FALSE(h.preserves_codespace);
    EXPECT_NEAR(h.leakage, 0.984375, 1e-9);
    auto cx = check_transversal_action(code, GateId::CX);
    EXPECT_TRUE(cx.preserves_codespace);
    EXPECT_EQ(cx.induced_name, "CX");
    EXPECT_EQ(cx.method, "sparse");
}

TEST(transversal, advertised_set_confirmed) {
    for (const auto &code : {steane_7(), quantum_reed_muller_15()}) {
        for (GateId g : transversal_gate_set(code)) {
            EXPECT_TRUE(check_transversal_action(code, g).preserves_codespace) << gate_name(g);
        }
    }
}

TEST(teleport, correction_table_from_branch_analysis) {
    auto table = derive_teleport_correction_table();
    EXPECT_EQ(table.by_outcome[0], Correction::Y);
    EXPECT_EQ(table.by_outcome[1], Correction::identity);
}

TEST(teleport, basis_examples) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto out0 = teleport_h_oracle(StateVector::basis_state(1, 0), rng).output;
        EXPECT_NEAR(fidelity(out0, StateVector::single_qubit(1, 1)), 1, 1e-12);
        auto outp = teleport_h_oracle(StateVector::single_qubit(1, 1), rng).output;
        EXPECT_NEAR(fidelity(outp, StateVector::basis_state(1, 0)), 1, 1e-12);
    }
}

TEST(teleport, random_inputs_reach_h_and_table_is_outcome_deterministic) {
    std::mt19937_64 rng(10);
    auto h = single_qubit_matrix(GateId::H);
    std::array<int, 2> seen{0, 0};
    for (int trial = 0; trial < 100; trial++) {
        auto input = StateVector::random_single_qubit(rng);
        auto expected = input;
        expected.apply_1q(h, 0);
        auto r = teleport_h_oracle(input, rng);
        EXPECT_GE(fidelity(expected, r.output), 1 - 1e-9);
        EXPECT_EQ(r.table.by_outcome[r.outcome], derive_teleport_correction_table().by_outcome[r.outcome]);
        seen[r.outcome]++;
    }
    EXPECT_GT(seen[0], 0);
    EXPECT_GT(seen[1], 0);
}

TEST(eigen_check, magic_state_identities) {
    Eigen::Matrix2cd xpdag = single_qubit_matrix(GateId::X) * single_qubit_matrix(GateId::Pdag);
    auto lambda = eigen_check(xpdag, magic_state());
    ASSERT_TRUE(lambda.has_value());
    EXPECT_LT(std::abs(*lambda - std::exp(kI * (7 * M_PI / 4))), 1e-10);
    auto one = eigen_check(std::exp(kI * (M_PI / 4)) * xpdag, magic_state());
    ASSERT_TRUE(one.has_value());
    EXPECT_LT(std::abs(*one - Complex(1)), 1e-10);
    EXPECT_FALSE(eigen_check(GateId::Z, StateVector::single_qubit(1, 1)).has_value());
}

TEST(clifford_membership, known_gates) {
    EXPECT_TRUE(clifford_membership(two_qubit_matrix(GateId::CX)).is_clifford);
    auto cpdag = clifford_membership(two_qubit_matrix(GateId::CPdag));
    EXPECT_FALSE(cpdag.is_clifford);
    ASSERT_TRUE(cpdag.witness.has_value());
    EXPECT_FALSE(cpdag.witness->pauli_in.empty());
    auto cxpdag = clifford_membership(two_qubit_matrix(GateId::CXPdag));
    EXPECT_FALSE(cxpdag.is_clifford);
    ASSERT_TRUE(cxpdag.witness.has_value());
    Eigen::Matrix4cd bad = Eigen::Matrix4cd::Identity() * 2.0;
    EXPECT_THROW(clifford_membership(bad), NotUnitary);
}

TEST(clifford_membership, witness_is_really_non_pauli) {
    // Independently: conjugating the witness Pauli must give a matrix with more than one
    // nonzero Pauli coefficient.
    auto rep = clifford_membership(two_qubit_matrix(GateId::CPdag));
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_NE(rep.witness->conjugate_out.find('+'), std::string::npos);
}

TEST(amplitude_dump, round_trip_and_phase_invariant_compare) {
    std::mt19937_64 rng(12);
    auto s = random_state(3, rng);
    std::stringstream ss;
    write_amplitudes(ss, s);
    auto back = read_amplitudes(ss);
    EXPECT_TRUE(compare_amplitudes(s, back, 1e-15, false).equal);
    std::vector<Complex> rotated = s.amplitudes();
    for (auto &a : rotated) {
        a *= std::exp(kI * 0.3);
    }
    auto r = StateVector::from_amplitudes(rotated);
    EXPECT_FALSE(compare_amplitudes(s, r, 1e-10, false).equal);
    EXPECT_TRUE(compare_amplitudes(s, r, 1e-10, true).equal);
}

TEST(amplitude_dump, steane_plus_matches_golden_file) {
    std::ifstream in(std::string(MPQC_SOURCE_DIR) + "/tests/golden/steane_plus.amp");
    ASSERT_TRUE(in.good());
    auto golden = read_amplitudes(in);
    auto fresh = prepare_logical(steane_7(), *named_single_qubit_state("|+>"));
    auto cmp = compare_amplitudes(golden, fresh, kAccumulatedTolerance, false);
    EXPECT_TRUE(cmp.equal) << "worst index " << cmp.worst_index << " deviation " << cmp.max_deviation;
}
