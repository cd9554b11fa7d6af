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

#include "mpqc/bit_vector.h"

#include <bit>
#include <stdexcept>

namespace mpqc {

namespace {

size_t num_words(size_t num_bits) {
    return (num_bits + 63) / 64;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(num_words(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        char c = bits[k];
        if (c == '1') {
            result.set(k, true);
        } else if (c != '0') {
            throw std::invalid_argument("bit string contains a character other than '0' or '1'");
        }
    }
    return result;
}

BitVector BitVector::from_u64(uint64_t value, size_t num_bits) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_u64 needs num_bits <= 64");
    }
    BitVector result(num_bits);
    if (num_bits > 0) {
        uint64_t mask = num_bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_bits) - 1);
        result.words_[0] = value & mask;
    }
    return result;
}

BitVector BitVector::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVector result(num_bits);
    for (size_t k : indices) {
        result.set(k, true);
    }
    return result;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector result(num_bits);
    for (size_t k = 0; k < num_bits; k++) {
        result.set(k, true);
    }
    return result;
}

BitVector BitVector::from_hex(std::string_view hex, size_t num_bits) {
    if (hex.size() != (num_bits + 3) / 4) {
        throw std::invalid_argument("hex string has the wrong length for the requested bit count");
    }
    BitVector result(num_bits);
    for (size_t k = 0; k < hex.size(); k++) {
        char c = hex[k];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw std::invalid_argument("invalid hex digit");
        }
        for (size_t b = 0; b < 4; b++) {
            if ((v >> b) & 1) {
                if (4 * k + b >= num_bits) {
                    throw std::invalid_argument("hex string sets bits past the end");
                }
                result.set(4 * k + b, true);
            }
        }
    }
    return result;
}

void BitVector::check_index(size_t index) const {
    if (index >= num_bits_) {
        throw std::out_of_range("bit index " + std::to_string(index) + " out of range for length " +
                                std::to_string(num_bits_));
    }
}

void BitVector::check_same_size(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
}

bool BitVector::get(size_t index) const {
    check_index(index);
    return (words_[index >> 6] >> (index & 63)) & 1;
}

void BitVector::set(size_t index, bool value) {
    check_index(index);
    uint64_t bit = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= bit;
    } else {
        words_[index >> 6] &= ~bit;
    }
}

void BitVector::flip(size_t index) {
    check_index(index);
    words_[index >> 6] ^= uint64_t{1} << (index & 63);
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector r = *this;
    r &= other;
    return r;
}

BitVector BitVector::operator|(const BitVector &other) const {
    BitVector r = *this;
    r |= other;
    return r;
}

BitVector BitVector::operator~() const {
    BitVector r = *this;
    for (auto &w : r.words_) {
        w = ~w;
    }
    if (num_bits_ % 64 != 0) {
        r.words_.back() &= (uint64_t{1} << (num_bits_ % 64)) - 1;
    }
    return r;
}

bool BitVector::operator<(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    for (size_t k = words_.size(); k-- > 0;) {
        if (words_[k] != other.words_[k]) {
            return words_[k] < other.words_[k];
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> result;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t v = words_[w];
        while (v) {
            result.push_back(w * 64 + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return result;
}

uint64_t BitVector::to_u64() const {
    if (num_bits_ > 64) {
        throw std::invalid_argument("to_u64 needs size() <= 64");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string s(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

std::string BitVector::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s((num_bits_ + 3) / 4, '0');
    for (size_t k = 0; k < s.size(); k++) {
        int v = 0;
        for (size_t b = 0; b < 4 && 4 * k + b < num_bits_; b++) {
            v |= get(4 * k + b) << b;
        }
        s[k] = digits[v];
    }
    return s;
}

}  // namespace mpqc
