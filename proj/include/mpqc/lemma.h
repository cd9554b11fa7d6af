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

#ifndef MPQC_LEMMA_H
#define MPQC_LEMMA_H

#include <optional>
#include <random>
#include <set>
#include <string>

#include "mpqc/pauli_frame.h"

namespace mpqc {

enum class LemmaOp { P, T, CX, Y, teleported_H, measure_standard, measure_fourier };
std::string_view lemma_op_name(LemmaOp op);
std::optional<LemmaOp> parse_lemma_op(std::string_view s);

/// Pauli errors on one grid (two for CX and teleported H: target resp. |+> grid in `secondary`),
/// confined to the rows and columns of the nodes in `support`.
struct LemmaPattern {
    std::set<size_t> support;
    PauliError primary;
    PauliError secondary;
};

/// Logical Pauli left after two-level decoding of an error frame, if both parts decode.
struct LogicalResidual {
    bool ok = false;
    bool x = false;
    bool z = false;
    bool operator==(const LogicalResidual &o) const = default;
};
LogicalResidual decode_residual(const CodeRef &code, const PauliError &errors);

/// True when decoding commutes with the operation: the residual of the propagated frame equals
/// the logical propagation of the residual (for T: one of the allowed Z branches; for
/// measurements: the decoded outcome is the true outcome flipped by the visible residual).
/// A pattern whose frame does not decode fails.
bool lemma_check(const CodeRef &code, LemmaOp op, const LemmaPattern &pattern, uint64_t seed);

/// Support of 1..bound random nodes; each slot in their rows and columns carries a random
/// Pauli with probability 1/2.
LemmaPattern random_pattern(const CssCode &code, size_t support_size, std::mt19937_64 &rng);
LemmaPattern random_bounded_pattern(const CssCode &code, size_t bound, std::mt19937_64 &rng);

/// Random search for a pattern on `support_size` nodes that breaks the check.
std::optional<LemmaPattern> find_counterexample(const CodeRef &code, LemmaOp op, size_t support_size, uint64_t seed,
                                                size_t tries);

}  // namespace mpqc

#endif
