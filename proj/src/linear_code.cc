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

#include "mpqc/linear_code.h"

#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

namespace mpqc {

namespace {

constexpr size_t kMaxBlockLength = 64;
constexpr size_t kEagerDistanceLength = 20;
constexpr size_t kMaxListedDimension = 20;
constexpr size_t kMaxLeaderTable = size_t{1} << 22;

uint64_t binomial_sum(size_t n, size_t r) {
    uint64_t total = 0;
    uint64_t term = 1;
    for (size_t w = 0; w <= r && w <= n; w++) {
        total += term;
        term = term * (n - w) / (w + 1);
    }
    return total;
}

std::vector<uint64_t> row_masks(const BinaryMatrix &m) {
    std::vector<uint64_t> out;
    for (const auto &r : m.rows()) {
        out.push_back(r.to_u64());
    }
    return out;
}

uint64_t syndrome_of(const std::vector<uint64_t> &checks, uint64_t word) {
    uint64_t s = 0;
    for (size_t k = 0; k < checks.size(); k++) {
        s |= uint64_t(std::popcount(checks[k] & word) & 1) << k;
    }
    return s;
}

template <typename F>
void for_each_pattern(size_t n, size_t max_weight, F &&f) {
    // Visits every pattern of weight <= max_weight, lowest weight first.
    f(uint64_t{0});
    std::vector<size_t> idx;
    for (size_t w = 1; w <= max_weight && w <= n; w++) {
        idx.resize(w);
        for (size_t k = 0; k < w; k++) {
            idx[k] = k;
        }
        while (true) {
            uint64_t p = 0;
            for (size_t k : idx) {
                p |= uint64_t{1} << k;
            }
            f(p);
            size_t pos = w;
            while (pos > 0 && idx[pos - 1] == n - w + pos - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            idx[pos - 1]++;
            for (size_t k = pos; k < w; k++) {
                idx[k] = idx[k - 1] + 1;
            }
        }
    }
}

}  // namespace

struct LinearCode::Tables {
    std::vector<uint64_t> checks;
    std::unordered_map<uint64_t, uint64_t> leaders;
    bool has_leaders = false;
    std::vector<uint64_t> codewords;
    bool has_codewords = false;
};

size_t min_distance(const BinaryMatrix &generator) {
    size_t k = generator.num_rows();
    size_t n = generator.num_cols();
    if (k > kMaxEnumerableDimension) {
        throw DimensionTooLarge("min_distance: dimension " + std::to_string(k) + " is too large to enumerate");
    }
    if (k == 0) {
        return n + 1;
    }
    if (n > kMaxBlockLength) {
        throw std::invalid_argument("block lengths above 64 are not supported");
    }
    auto rows = row_masks(generator);
    // Gray-code walk over all nonzero messages.
    size_t best = n + 1;
    uint64_t word = 0;
    for (uint64_t g = 1; g < (uint64_t{1} << k); g++) {
        word ^= rows[std::countr_zero(g)];
        size_t w = std::popcount(word);
        if (w < best) {
            best = w;
        }
    }
    return best;
}

size_t min_distance(const LinearCode &c) {
    return min_distance(c.generator());
}

LinearCode::LinearCode(BinaryMatrix generator, bool) : generator_(std::move(generator)) {
    init_common();
}

LinearCode::LinearCode(BinaryMatrix generator) : generator_(std::move(generator)) {
    init_common();
    if (n() > kEagerDistanceLength) {
        throw std::invalid_argument("codes longer than 20 bits must be constructed with a declared distance");
    }
    distance_ = min_distance(generator_);
    build_tables();
}

LinearCode::LinearCode(BinaryMatrix generator, size_t declared_distance, uint64_t spot_check_seed)
    : generator_(std::move(generator)) {
    init_common();
    if (k() <= kMaxEnumerableDimension && n() <= kEagerDistanceLength) {
        distance_ = min_distance(generator_);
        if (distance_ != declared_distance) {
            throw std::invalid_argument("declared distance " + std::to_string(declared_distance) +
                                        " differs from the computed distance " + std::to_string(distance_));
        }
    } else {
        std::mt19937_64 rng(spot_check_seed);
        for (int trial = 0; trial < 4096; trial++) {
            BitVector msg(k());
            for (size_t b = 0; b < k(); b++) {
                msg.set(b, rng() & 1);
            }
            if (msg.none()) {
                continue;
            }
            if (encode(msg).popcount() < declared_distance) {
                throw std::invalid_argument("declared distance is contradicted by a low-weight codeword");
            }
        }
        distance_ = declared_distance;
    }
    build_tables();
}

LinearCode LinearCode::zero_code(size_t n) {
    LinearCode c(BinaryMatrix(0, n), true);
    c.distance_ = n + 1;
    c.build_tables();
    return c;
}

void LinearCode::init_common() {
    if (n() == 0) {
        throw std::invalid_argument("linear code needs a positive block length");
    }
    if (n() > kMaxBlockLength) {
        throw std::invalid_argument("block lengths above 64 are not supported");
    }
    size_t r = generator_.rank();
    if (r != k()) {
        throw std::invalid_argument("generator matrix is not full row rank (rank " + std::to_string(r) + ", rows " +
                                    std::to_string(k()) + ")");
    }
    auto basis = generator_.null_space();
    parity_check_ = BinaryMatrix(std::move(basis), n());
}

void LinearCode::build_tables() {
    auto t = std::make_shared<Tables>();
    t->checks = row_masks(parity_check_);
    size_t radius = correction_radius();
    if (binomial_sum(n(), radius) <= kMaxLeaderTable) {
        for_each_pattern(n(), radius, [&](uint64_t e) {
            t->leaders.emplace(syndrome_of(t->checks, e), e);
        });
        t->has_leaders = true;
    }
    if (k() <= kMaxListedDimension) {
        auto rows = row_masks(generator_);
        t->codewords.reserve(size_t{1} << k());
        for (uint64_t m = 0; m < (uint64_t{1} << k()); m++) {
            uint64_t w = 0;
            for (size_t b = 0; b < k(); b++) {
                if ((m >> b) & 1) {
                    w ^= rows[b];
                }
            }
            t->codewords.push_back(w);
        }
        t->has_codewords = true;
    }
    tables_ = std::move(t);
}

size_t LinearCode::correction_radius() const {
    return distance_ == 0 ? 0 : (distance_ - 1) / 2;
}

bool LinearCode::contains(const BitVector &word) const {
    return syndrome(word).none();
}

BitVector LinearCode::syndrome(const BitVector &word) const {
    if (word.size() != n()) {
        throw std::invalid_argument("word length does not match the code");
    }
    return parity_check_.multiply(word);
}

BitVector LinearCode::encode(const BitVector &message) const {
    return generator_.combine_rows(message);
}

std::vector<BitVector> LinearCode::codewords() const {
    if (k() > kMaxEnumerableDimension) {
        throw DimensionTooLarge("codewords: dimension too large to enumerate");
    }
    std::vector<BitVector> out;
    out.reserve(size_t{1} << k());
    for (uint64_t m = 0; m < (uint64_t{1} << k()); m++) {
        out.push_back(encode(BitVector::from_u64(m, k())));
    }
    return out;
}

bool LinearCode::same_codewords(const LinearCode &other) const {
    if (n() != other.n() || k() != other.k()) {
        return false;
    }
    for (const auto &row : other.generator().rows()) {
        if (!contains(row)) {
            return false;
        }
    }
    return true;
}

std::optional<DecodeResult> LinearCode::try_decode(const BitVector &word) const {
    if (word.size() != n()) {
        throw std::invalid_argument("word length does not match the code");
    }
    if (!tables_->has_leaders) {
        throw DimensionTooLarge("coset-leader table is too large for this code");
    }
    uint64_t w = word.to_u64();
    auto it = tables_->leaders.find(syndrome_of(tables_->checks, w));
    if (it == tables_->leaders.end()) {
        return std::nullopt;
    }
    return DecodeResult{BitVector::from_u64(w ^ it->second, n()), BitVector::from_u64(it->second, n())};
}

DecodeResult LinearCode::syndrome_decode(const BitVector &word) const {
    auto r = try_decode(word);
    if (!r) {
        throw DecodeFailure("no codeword within distance " + std::to_string(correction_radius()) + " of " +
                            word.to_string());
    }
    return *r;
}

BitVector LinearCode::erasure_decode(const BitVector &known, const BitVector &erased) const {
    if (known.size() != n() || erased.size() != n()) {
        throw std::invalid_argument("erasure_decode: length mismatch");
    }
    // Solve m G = known on the non-erased columns.
    std::vector<size_t> cols = (~erased).support();
    BinaryMatrix system(cols.size(), k() + 1);
    for (size_t e = 0; e < cols.size(); e++) {
        for (size_t b = 0; b < k(); b++) {
            system.set(e, b, generator_.at(b, cols[e]));
        }
        system.set(e, k(), known.get(cols[e]));
    }
    RrefResult red = rref(system);
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == k()) {
        throw ErasureInconsistent("no codeword agrees with the known positions");
    }
    if (red.rank < k()) {
        throw ErasureAmbiguous("several codewords agree with the known positions");
    }
    BitVector msg(k());
    for (size_t e = 0; e < red.rank; e++) {
        msg.set(red.pivot_columns[e], red.reduced.at(e, k()));
    }
    return encode(msg);
}

std::optional<BitVector> LinearCode::try_decode_with_erasures(const BitVector &word, const BitVector &erased) const {
    if (word.size() != n() || erased.size() != n()) {
        throw std::invalid_argument("try_decode_with_erasures: length mismatch");
    }
    size_t num_erased = erased.popcount();
    if (num_erased == 0 && tables_->has_leaders) {
        auto r = try_decode(word);
        if (!r) {
            return std::nullopt;
        }
        return r->codeword;
    }
    if (num_erased + 1 > distance_) {
        return std::nullopt;
    }
    size_t radius = (distance_ - 1 - num_erased) / 2;
    if (!tables_->has_codewords) {
        throw DimensionTooLarge("joint erasure decoding needs an enumerable code");
    }
    uint64_t keep = (~erased).to_u64();
    uint64_t w = word.to_u64();
    for (uint64_t c : tables_->codewords) {
        if (static_cast<size_t>(std::popcount((c ^ w) & keep)) <= radius) {
            // Unique: two codewords within the radius would be closer than d on the kept positions.
            return BitVector::from_u64(c, n());
        }
    }
    return std::nullopt;
}

std::string LinearCode::to_text() const {
    std::string s = std::to_string(n()) + " " + std::to_string(k()) + "\n";
    s += generator_.to_string();
    return s;
}

LinearCode LinearCode::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    size_t n = 0;
    size_t k = 0;
    if (!(in >> n >> k)) {
        throw std::invalid_argument("code text must start with \"n k\"");
    }
    if (k > n) {
        throw std::invalid_argument("code text declares k > n");
    }
    std::vector<BitVector> rows;
    std::string line;
    std::getline(in, line);
    while (rows.size() < k && std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.size() != n) {
            throw std::invalid_argument("generator row has length " + std::to_string(line.size()) + ", expected " +
                                        std::to_string(n));
        }
        rows.push_back(BitVector::from_string(line));
    }
    if (rows.size() != k) {
        throw std::invalid_argument("code text has fewer generator rows than declared");
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw std::invalid_argument("code text has more generator rows than declared");
        }
    }
    if (k == 0) {
        return zero_code(n);
    }
    return LinearCode(BinaryMatrix(std::move(rows), n));
}

LinearCode dual_code(const LinearCode &c) {
    auto basis = c.generator().null_space();
    if (basis.empty()) {
        return LinearCode::zero_code(c.n());
    }
    BinaryMatrix g(std::move(basis), c.n());
    if (c.n() <= 20) {
        return LinearCode(std::move(g));
    }
    size_t d = min_distance(g);
    return LinearCode(std::move(g), d);
}

}  // namespace mpqc
