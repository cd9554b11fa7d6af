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

#include "mpqc/binary_matrix.h"

#include <stdexcept>
#include <utility>

namespace mpqc {

BinaryMatrix::BinaryMatrix(size_t num_rows, size_t num_cols)
    : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BinaryMatrix::BinaryMatrix(std::vector<BitVector> rows, size_t num_cols) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw std::invalid_argument("matrix rows must all have the same length");
        }
    }
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string_view> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("from_strings needs at least one row");
    }
    std::vector<BitVector> parsed;
    for (auto s : rows) {
        parsed.push_back(BitVector::from_string(s));
    }
    size_t cols = parsed[0].size();
    return BinaryMatrix(std::move(parsed), cols);
}

BinaryMatrix BinaryMatrix::identity(size_t size) {
    BinaryMatrix m(size, size);
    for (size_t k = 0; k < size; k++) {
        m.set(k, k, true);
    }
    return m;
}

bool BinaryMatrix::at(size_t r, size_t c) const {
    return row(r).get(c);
}

void BinaryMatrix::set(size_t r, size_t c, bool value) {
    if (r >= rows_.size()) {
        throw std::out_of_range("matrix row index out of range");
    }
    rows_[r].set(c, value);
}

const BitVector &BinaryMatrix::row(size_t r) const {
    if (r >= rows_.size()) {
        throw std::out_of_range("matrix row index out of range");
    }
    return rows_[r];
}

void BinaryMatrix::append_row(const BitVector &row) {
    if (row.size() != num_cols_) {
        throw std::invalid_argument("appended row has the wrong length");
    }
    rows_.push_back(row);
}

BitVector BinaryMatrix::multiply(const BitVector &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

BitVector BinaryMatrix::combine_rows(const BitVector &coeffs) const {
    if (coeffs.size() != rows_.size()) {
        throw std::invalid_argument("coefficient vector length must equal the row count");
    }
    BitVector out(num_cols_);
    for (size_t r : coeffs.support()) {
        out ^= rows_[r];
    }
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].support()) {
            t.set(c, r, true);
        }
    }
    return t;
}

size_t BinaryMatrix::rank() const {
    return rref(*this).rank;
}

std::vector<BitVector> BinaryMatrix::null_space() const {
    RrefResult red = rref(*this);
    std::vector<bool> is_pivot(num_cols_, false);
    for (size_t c : red.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (size_t free = 0; free < num_cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(num_cols_);
        v.set(free, true);
        for (size_t k = 0; k < red.rank; k++) {
            if (red.reduced.at(k, free)) {
                v.set(red.pivot_columns[k], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string BinaryMatrix::to_string() const {
    std::string s;
    for (const auto &r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

RrefResult rref(const BinaryMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    RrefResult result;
    size_t next = 0;
    for (size_t c = 0; c < m.num_cols() && next < rows.size(); c++) {
        size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[next]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        result.pivot_columns.push_back(c);
        next++;
    }
    result.rank = next;
    result.reduced = BinaryMatrix(std::move(rows), m.num_cols());
    return result;
}

}  // namespace mpqc
