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

#include "mpqc/lemma.h"

namespace mpqc {
namespace {

const LemmaOp kAllOps[] = {LemmaOp::P, LemmaOp::T, LemmaOp::CX, LemmaOp::Y,
                           LemmaOp::teleported_H, LemmaOp::measure_standard, LemmaOp::measure_fourier};

TEST(Lemma, CleanFramesCommute) {
    for (const char *name : {"steane_7", "qrm_15"}) {
        auto code = code_by_name(name);
        LemmaPattern clean;
        for (LemmaOp op : kAllOps) {
            for (uint64_t seed = 0; seed < 5; seed++) {
                EXPECT_TRUE(lemma_check(code, op, clean, seed)) << name << " " << lemma_op_name(op);
            }
        }
    }
}

TEST(Lemma, BoundedPatternsCommute) {
    for (const char *name : {"steane_7", "qrm_15"}) {
        auto code = code_by_name(name);
        std::mt19937_64 rng(2024);
        for (LemmaOp op : kAllOps) {
            for (int k = 0; k < 150; k++) {
                auto p = random_bounded_pattern(*code, code->t_max(), rng);
                ASSERT_LE(p.support.size(), code->t_max());
                ASSERT_TRUE(lemma_check(code, op, p, rng())) << name << " " << lemma_op_name(op) << " trial " << k;
            }
        }
    }
}

TEST(Lemma, BoundedPatternsDecodeToIdentity) {
    auto code = code_by_name("qrm_15");
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; k++) {
        auto p = random_bounded_pattern(*code, 1, rng);
        EXPECT_EQ(decode_residual(code, p.primary), (LogicalResidual{true, false, false}));
    }
}

TEST(Lemma, OverBoundCounterexamplesExist) {
    // Two cheating nodes on a distance-3 code: decoding stops being linear, so P and CX break.
    for (const char *name : {"steane_7", "qrm_15"}) {
        auto code = code_by_name(name);
        for (LemmaOp op : {LemmaOp::P, LemmaOp::CX}) {
            auto ce = find_counterexample(code, op, code->t_max() + 1, 99, 2000);
            ASSERT_TRUE(ce.has_value()) << name << " " << lemma_op_name(op);
            EXPECT_EQ(ce->support.size(), code->t_max() + 1);
            EXPECT_FALSE(lemma_check(code, op, *ce, 0));
        }
    }
}

// Syndrome decoding is invariant under adding codewords, so a measured word decodes to the
// true outcome flipped by the residual whenever the error frame decodes at all.
TEST(Lemma, MeasurementCommutesWheneverDecodable) {
    auto code = code_by_name("steane_7");
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; k++) {
        auto p = random_pattern(*code, 2, rng);
        ASSERT_TRUE(decode_residual(code, p.primary).ok);
        EXPECT_TRUE(lemma_check(code, LemmaOp::measure_standard, p, rng()));
        EXPECT_TRUE(lemma_check(code, LemmaOp::measure_fourier, p, rng()));
    }
}

TEST(Lemma, OpNamesRoundTrip) {
    for (LemmaOp op : kAllOps) {
        EXPECT_EQ(parse_lemma_op(lemma_op_name(op)), op);
    }
    EXPECT_FALSE(parse_lemma_op("H"));
}

}  // namespace
}  // namespace mpqc
