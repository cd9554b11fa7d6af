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

#ifndef MPQC_BIT_VECTOR_H
#define MPQC_BIT_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mpqc {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond size() in the last word are kept at zero so that equality and
/// popcount can work word-wise.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters. Index 0 is the first character.
    static BitVector from_string(std::string_view bits);
    static BitVector from_u64(uint64_t value, size_t num_bits);
    static BitVector from_indices(size_t num_bits, const std::vector<size_t> &indices);
    static BitVector ones(size_t num_bits);
    /// Inverse of to_hex().
    static BitVector from_hex(std::string_view hex, size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);
    bool operator[](size_t index) const {
        return get(index);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    BitVector operator|(const BitVector &other) const;
    BitVector operator~() const;
    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Inner product mod 2.
    bool dot(const BitVector &other) const;
    std::vector<size_t> support() const;

    /// Only valid when size() <= 64.
    uint64_t to_u64() const;
    std::string to_string() const;
    /// Little-endian nibbles: hex digit k holds bits 4k..4k+3 (bit 4k is the low bit).
    std::string to_hex() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

   private:
    void check_same_size(const BitVector &other) const;
    void check_index(size_t index) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace mpqc

#endif
