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

#include "mpqc/css_code.h"

#include <fstream>
#include <sstream>

namespace mpqc {

std::string_view weight_class_name(WeightClass w) {
    switch (w) {
        case WeightClass::even:
            return "even";
        case WeightClass::doubly_even:
            return "doubly_even";
        case WeightClass::triply_even:
            return "triply_even";
        default:
            return "unclassified";
    }
}

namespace {

std::vector<BitVector> canonical_rows(const LinearCode &c) {
    auto red = rref(c.generator());
    std::vector<BitVector> rows;
    for (size_t r = 0; r < red.rank; r++) {
        rows.push_back(red.reduced.row(r));
    }
    return rows;
}

}  // namespace

size_t css_distance(const LinearCode &v, const LinearCode &w, const LinearCode &v_perp, const LinearCode &w_perp) {
    size_t best = v.n() + 1;
    for (const auto &c : v.codewords()) {
        if (!w_perp.contains(c)) {
            best = std::min(best, c.popcount());
        }
    }
    for (const auto &c : w.codewords()) {
        if (!v_perp.contains(c)) {
            best = std::min(best, c.popcount());
        }
    }
    return best;
}

CssCode build_css(const LinearCode &v, const LinearCode &w, std::string name) {
    if (v.n() != w.n()) {
        throw std::invalid_argument("V and W must have the same block length");
    }
    LinearCode v_perp = dual_code(v);
    for (size_t r = 0; r < v_perp.k(); r++) {
        if (!w.contains(v_perp.generator().row(r))) {
            throw DualContainmentViolated("dual generator " + v_perp.generator().row(r).to_string() +
                                          " of V is not a codeword of W");
        }
    }
    long long k = static_cast<long long>(v.k()) + static_cast<long long>(w.k()) - static_cast<long long>(v.n());
    if (k <= 0) {
        throw NonPositiveK("k = k_V + k_W - n = " + std::to_string(k) + " is not positive");
    }
    LinearCode w_perp = dual_code(w);
    CssCode code(v, w, v_perp, w_perp);
    code.name_ = std::move(name);
    code.k_ = static_cast<size_t>(k);
    code.d_ = css_distance(code.v_, code.w_, code.v_perp_, code.w_perp_);
    code.x_stabilizers_ = canonical_rows(code.w_perp_);
    code.z_stabilizers_ = canonical_rows(code.v_perp_);
    code.weight_class_ = classify_weight(code.x_stabilizers_);
    code.self_dual_ = code.v_.same_codewords(code.w_);

    if (code.k_ == 1) {
        size_t n = v.n();
        auto ones = BitVector::ones(n);
        if (v.contains(ones) && !w_perp.contains(ones)) {
            code.logical_x_ = ones;
        } else {
            for (const auto &c : v.codewords()) {
                if (!w_perp.contains(c) && (code.logical_x_.size() == 0 || c.popcount() < code.logical_x_.popcount())) {
                    code.logical_x_ = c;
                }
            }
        }
        if (w.contains(ones) && !code.v_perp_.contains(ones) && ones.dot(code.logical_x_)) {
            code.logical_z_ = ones;
        } else {
            for (const auto &c : w.codewords()) {
                if (!code.v_perp_.contains(c) && c.dot(code.logical_x_) &&
                    (code.logical_z_.size() == 0 || c.popcount() < code.logical_z_.popcount())) {
                    code.logical_z_ = c;
                }
            }
        }
    }
    return code;
}

WeightClass classify_weight(const std::vector<BitVector> &gens) {
    bool mod2 = true;
    bool mod4 = true;
    bool mod8 = true;
    for (const auto &g : gens) {
        size_t w = g.popcount();
        mod2 = mod2 && w % 2 == 0;
        mod4 = mod4 && w % 4 == 0;
        mod8 = mod8 && w % 8 == 0;
    }
    if (!mod2) {
        return WeightClass::unclassified;
    }
    bool pair_even = true;
    bool pair_mod4 = true;
    bool triple_even = true;
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            auto ab = gens[a] & gens[b];
            size_t w = ab.popcount();
            pair_even = pair_even && w % 2 == 0;
            pair_mod4 = pair_mod4 && w % 4 == 0;
            for (size_t c = b + 1; c < gens.size(); c++) {
                triple_even = triple_even && (ab & gens[c]).popcount() % 2 == 0;
            }
        }
    }
    if (mod8 && pair_mod4 && triple_even) {
        return WeightClass::triply_even;
    }
    if (mod4 && pair_even) {
        return WeightClass::doubly_even;
    }
    return WeightClass::even;
}

WeightClass classify_weight(const CssCode &code) {
    return classify_weight(code.x_stabilizers());
}

std::set<GateId> transversal_gate_set(const CssCode &code) {
    std::set<GateId> gates{GateId::CX};
    if (code.weight_class() >= WeightClass::doubly_even) {
        gates.insert(GateId::P);
    }
    if (code.weight_class() == WeightClass::triply_even) {
        gates.insert(GateId::T);
    }
    if (code.self_dual()) {
        gates.insert(GateId::H);
    }
    return gates;
}

std::vector<BitVector> logical_codewords(const CssCode &code, int bit) {
    if (code.k() != 1) {
        throw KNotOne("logical codewords are defined only for k = 1 codes");
    }
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("logical bit must be 0 or 1");
    }
    std::vector<BitVector> out;
    for (const auto &c : code.V().codewords()) {
        if (code.logical_bit(c) == static_cast<bool>(bit)) {
            out.push_back(c);
        }
    }
    return out;
}

CssCode steane_7() {
    LinearCode hamming(BinaryMatrix::from_strings({"1110000", "1001100", "0101010", "1101001"}));
    return build_css(hamming, hamming, "steane_7");
}

CssCode quantum_reed_muller_15() {
    // Punctured first-order Reed-Muller code RM(1,4)* and punctured RM(2,4)*, which is the
    // [15,11,3] Hamming code. RM(2,4)* contains RM(1,4)* plus the degree-2 monomials.
    std::vector<std::string_view> rm1 = {
        "111111111111111", "101010101010101", "011001100110011", "000111100001111", "000000011111111",
    };
    std::vector<std::string_view> rm2 = rm1;
    for (auto row : {"001000100010001", "000010100000101", "000000001010101", "000001100000011", "000000000110011",
                     "000000000001111"}) {
        rm2.push_back(row);
    }
    LinearCode v(BinaryMatrix::from_strings(rm1));
    LinearCode w(BinaryMatrix::from_strings(rm2));
    return build_css(v, w, "qrm_15");
}

CodeRef code_by_name(std::string_view name) {
    if (name == "steane_7") {
        static const CodeRef steane = std::make_shared<const CssCode>(steane_7());
        return steane;
    }
    if (name == "qrm_15") {
        static const CodeRef qrm = std::make_shared<const CssCode>(quantum_reed_muller_15());
        return qrm;
    }
    throw std::invalid_argument("unknown code name \"" + std::string(name) + "\" (known: steane_7, qrm_15)");
}

std::vector<std::string> catalog_names() {
    return {"steane_7", "qrm_15"};
}

CodeRef load_code_files(const std::string &v_path, const std::string &w_path) {
    auto read = [](const std::string &path) {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot open code file " + path);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return LinearCode::from_text(ss.str());
    };
    return std::make_shared<const CssCode>(build_css(read(v_path), read(w_path), "custom"));
}

}  // namespace mpqc
