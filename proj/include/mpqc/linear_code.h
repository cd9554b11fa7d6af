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

#ifndef MPQC_LINEAR_CODE_H
#define MPQC_LINEAR_CODE_H

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpqc/binary_matrix.h"

namespace mpqc {

/// No codeword lies within the bounded-distance radius of the received word.
struct DecodeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration was requested for a code whose dimension is too large.
struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// More than one codeword agrees with the non-erased positions.
struct ErasureAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No codeword agrees with the non-erased positions.
struct ErasureInconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecodeResult {
    BitVector codeword;
    BitVector error;
};

/// Largest dimension for which codewords are enumerated exhaustively.
constexpr size_t kMaxEnumerableDimension = 24;

/// A binary linear [n, k, d] code.
///
/// The generator may be any full-rank matrix; it is stored as given. The
/// parity-check matrix, the minimum distance and the coset-leader table are
/// derived on construction (for n <= 20) and then never change.
class LinearCode {
   public:
    /// Computes the minimum distance exhaustively. Requires n <= 20 and k <= 24.
    explicit LinearCode(BinaryMatrix generator);
    /// For larger codes. The declared distance is spot-checked with random codewords and,
    /// when k is small enough, verified exactly.
    LinearCode(BinaryMatrix generator, size_t declared_distance, uint64_t spot_check_seed = 0);

    /// The [n, 0] code containing only the zero word.
    static LinearCode zero_code(size_t n);

    size_t n() const {
        return generator_.num_cols();
    }
    size_t k() const {
        return generator_.num_rows();
    }
    const BinaryMatrix &generator() const {
        return generator_;
    }
    const BinaryMatrix &parity_check() const {
        return parity_check_;
    }
    /// Minimum nonzero codeword weight. The zero code reports n + 1.
    size_t distance() const {
        return distance_;
    }
    /// floor((d - 1) / 2).
    size_t correction_radius() const;

    bool contains(const BitVector &word) const;
    BitVector syndrome(const BitVector &word) const;
    BitVector encode(const BitVector &message) const;
    /// All 2^k codewords in order of message value. Throws DimensionTooLarge for k > 24.
    std::vector<BitVector> codewords() const;
    /// True when both codes span the same space.
    bool same_codewords(const LinearCode &other) const;

    /// Bounded-distance decoding through the coset-leader table.
    DecodeResult syndrome_decode(const BitVector &word) const;
    std::optional<DecodeResult> try_decode(const BitVector &word) const;

    /// Unique codeword agreeing with `known` outside `erased` (erased values are ignored).
    BitVector erasure_decode(const BitVector &known, const BitVector &erased) const;

    /// Joint error and erasure decoding: the unique codeword within distance
    /// floor((d - 1 - |erased|) / 2) of `word` on the non-erased positions.
    std::optional<BitVector> try_decode_with_erasures(const BitVector &word, const BitVector &erased) const;

    /// "n k" followed by k generator rows.
    std::string to_text() const;
    static LinearCode from_text(std::string_view text);

   private:
    struct Tables;
    LinearCode(BinaryMatrix generator, bool);
    void init_common();
    void build_tables();

    BinaryMatrix generator_;
    BinaryMatrix parity_check_;
    size_t distance_ = 0;
    std::shared_ptr<const Tables> tables_;
};

LinearCode dual_code(const LinearCode &c);

/// Brute-force minimum distance. Throws DimensionTooLarge for k > 24.
size_t min_distance(const BinaryMatrix &generator);
size_t min_distance(const LinearCode &c);


}  // namespace mpqc

#endif
