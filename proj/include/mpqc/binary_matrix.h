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

#ifndef MPQC_BINARY_MATRIX_H
#define MPQC_BINARY_MATRIX_H

#include <string_view>
#include <vector>

#include "mpqc/bit_vector.h"

namespace mpqc {

/// Dense row-major matrix over GF(2). Each row is a BitVector.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t num_rows, size_t num_cols);
    /// All rows must have length num_cols. num_cols is needed for the zero-row case.
    BinaryMatrix(std::vector<BitVector> rows, size_t num_cols);
    static BinaryMatrix from_strings(const std::vector<std::string_view> &rows);
    static BinaryMatrix identity(size_t size);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    bool at(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool value);
    const BitVector &row(size_t r) const;
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    void append_row(const BitVector &row);

    /// Returns M * v (one dot product per row).
    BitVector multiply(const BitVector &v) const;
    /// Returns sum_k coeffs[k] * row(k).
    BitVector combine_rows(const BitVector &coeffs) const;
    BinaryMatrix transpose() const;
    size_t rank() const;
    /// Basis of {x : M x = 0}, one vector per free column of the reduced form.
    std::vector<BitVector> null_space() const;

    bool operator==(const BinaryMatrix &other) const = default;
    std::string to_string() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BinaryMatrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_columns;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is unchanged.
RrefResult rref(const BinaryMatrix &m);

}  // namespace mpqc

#endif
