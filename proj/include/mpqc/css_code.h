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

#ifndef MPQC_CSS_CODE_H
#define MPQC_CSS_CODE_H

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpqc/gate.h"
#include "mpqc/linear_code.h"

namespace mpqc {

struct DualContainmentViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveK : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct KNotOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class WeightClass { unclassified = 0, even = 1, doubly_even = 2, triply_even = 3 };

std::string_view weight_class_name(WeightClass w);

/// CSS(V, W) with V^perp inside W.
///
/// Z-type stabilizers are the codewords of V^perp (they fix every |c>, c in V) and
/// X-type stabilizers are the codewords of W^perp. The logical |b> is the uniform
/// superposition over the coset b of W^perp inside V.
class CssCode {
   public:
    const std::string &name() const {
        return name_;
    }
    size_t n() const {
        return v_.n();
    }
    size_t k() const {
        return k_;
    }
    size_t d() const {
        return d_;
    }
    size_t t_max() const {
        return d_ == 0 ? 0 : (d_ - 1) / 2;
    }
    const LinearCode &V() const {
        return v_;
    }
    const LinearCode &W() const {
        return w_;
    }
    const LinearCode &V_perp() const {
        return v_perp_;
    }
    const LinearCode &W_perp() const {
        return w_perp_;
    }
    const std::vector<BitVector> &x_stabilizers() const {
        return x_stabilizers_;
    }
    const std::vector<BitVector> &z_stabilizers() const {
        return z_stabilizers_;
    }
    WeightClass weight_class() const {
        return weight_class_;
    }
    /// True when V and W have the same codewords.
    bool self_dual() const {
        return self_dual_;
    }
    /// A representative of V \ W^perp: flips the logical bit. Only for k = 1.
    const BitVector &logical_x() const {
        return logical_x_;
    }
    /// A representative of W \ V^perp: the logical Z operator support. Only for k = 1.
    const BitVector &logical_z() const {
        return logical_z_;
    }
    /// Logical bit of a codeword c of V (parity against logical_z).
    bool logical_bit(const BitVector &c) const {
        return c.dot(logical_z_);
    }
    /// Logical Fourier bit of a codeword y of W (parity against logical_x); 0 means |+>.
    bool logical_fourier_bit(const BitVector &y) const {
        return y.dot(logical_x_);
    }

   private:
    friend CssCode build_css(const LinearCode &v, const LinearCode &w, std::string name);

    CssCode(LinearCode v, LinearCode w, LinearCode v_perp, LinearCode w_perp)
        : v_(std::move(v)), w_(std::move(w)), v_perp_(std::move(v_perp)), w_perp_(std::move(w_perp)) {
    }

    std::string name_;
    size_t k_ = 0;
    size_t d_ = 0;
    LinearCode v_;
    LinearCode w_;
    LinearCode v_perp_;
    LinearCode w_perp_;
    std::vector<BitVector> x_stabilizers_;
    std::vector<BitVector> z_stabilizers_;
    WeightClass weight_class_ = WeightClass::unclassified;
    bool self_dual_ = false;
    BitVector logical_x_;
    BitVector logical_z_;
};

using CodeRef = std::shared_ptr<const CssCode>;

CssCode build_css(const LinearCode &v, const LinearCode &w, std::string name = "custom");

/// Classification of a set of X-type generators: triply even needs weights = 0 mod 8,
/// pairwise overlaps = 0 mod 4 and triple overlaps even; doubly even needs weights = 0 mod 4
/// and even pairwise overlaps; even needs even weights.
WeightClass classify_weight(const std::vector<BitVector> &generators);
WeightClass classify_weight(const CssCode &code);

std::set<GateId> transversal_gate_set(const CssCode &code);

/// Codewords of V in the coset encoding logical bit b.
std::vector<BitVector> logical_codewords(const CssCode &code, int bit);

/// Minimum weight of V \ W^perp and W \ V^perp, by enumeration.
size_t css_distance(const LinearCode &v, const LinearCode &w, const LinearCode &v_perp, const LinearCode &w_perp);

CssCode steane_7();
CssCode quantum_reed_muller_15();

/// Catalog lookup: "steane_7" or "qrm_15". Throws std::invalid_argument otherwise.
CodeRef code_by_name(std::string_view name);
std::vector<std::string> catalog_names();
/// Custom code from two generator files in the LinearCode text format.
CodeRef load_code_files(const std::string &v_path, const std::string &w_path);

}  // namespace mpqc

#endif
