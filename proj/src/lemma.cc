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

#include "mpqc/lemma.h"

namespace mpqc {

namespace {

constexpr std::pair<LemmaOp, std::string_view> kOps[] = {
    {LemmaOp::P, "P"},
    {LemmaOp::T, "T"},
    {LemmaOp::CX, "CX"},
    {LemmaOp::Y, "Y"},
    {LemmaOp::teleported_H, "teleported_H"},
    {LemmaOp::measure_standard, "measure_standard"},
    {LemmaOp::measure_fourier, "measure_fourier"},
};

ShareGrid grid_with(const CodeRef &code, const PauliError &e) {
    ShareGrid g(code, 0, "frame");
    g.mutable_errors() = e.size() ? e : PauliError(code->n() * code->n());
    return g;
}

LogicalWord error_word(const ShareGrid &g, bool x_part) {
    LogicalWord w;
    for (size_t j = 0; j < g.n(); j++) {
        w.blocks.push_back(x_part ? g.block_x(j) : g.block_z(j));
    }
    return w;
}

LogicalResidual residual_of(const ShareGrid &g) {
    BitVector none(g.n());
    auto dx = two_level_decode(g.code(), error_word(g, true), Basis::standard, none);
    auto dz = two_level_decode(g.code(), error_word(g, false), Basis::fourier, none);
    return {dx.ok && dz.ok, dx.ok && dx.logical_bit, dz.ok && dz.logical_bit};
}

std::optional<bool> decoded_outcome(const ShareGrid &g, Basis basis, bool m, std::mt19937_64 &rng) {
    auto dec = two_level_decode(g.code(), frame_measure(g, basis, m, rng), basis, BitVector(g.n()));
    if (!dec.ok) {
        return std::nullopt;
    }
    return dec.logical_bit;
}

void logical_p(LogicalResidual &r) {
    r.z ^= r.x;
}

void logical_cx(LogicalResidual &c, LogicalResidual &t) {
    t.x ^= c.x;
    c.z ^= t.z;
}

}  // namespace

std::string_view lemma_op_name(LemmaOp op) {
    for (const auto &[k, v] : kOps) {
        if (k == op) {
            return v;
        }
    }
    return "?";
}

std::optional<LemmaOp> parse_lemma_op(std::string_view s) {
    for (const auto &[k, v] : kOps) {
        if (v == s) {
            return k;
        }
    }
    return std::nullopt;
}

LogicalResidual decode_residual(const CodeRef &code, const PauliError &errors) {
    return residual_of(grid_with(code, errors));
}

bool lemma_check(const CodeRef &code, LemmaOp op, const LemmaPattern &pattern, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ShareGrid a = grid_with(code, pattern.primary);
    ShareGrid b = grid_with(code, pattern.secondary);
    LogicalResidual ra = residual_of(a);
    LogicalResidual rb = residual_of(b);
    if (!ra.ok || !rb.ok) {
        return false;
    }
    switch (op) {
        case LemmaOp::P: {
            propagate(a, GateId::P);
            logical_p(ra);
            return residual_of(a) == ra;
        }
        case LemmaOp::Y: {
            propagate(a, GateId::Y);
            return residual_of(a) == ra;
        }
        case LemmaOp::T: {
            sample_t_branch(a, rng);
            LogicalResidual after = residual_of(a);
            // T maps X to X times a phase branch; Z parts pass through.
            return after.ok && after.x == ra.x && (ra.x || after.z == ra.z);
        }
        case LemmaOp::CX: {
            propagate_cx(a, b);
            logical_cx(ra, rb);
            return residual_of(a) == ra && residual_of(b) == rb;
        }
        case LemmaOp::teleported_H: {
            // a = data, b = |+> grid: P on both, CX from the |+> grid, P on data, Fourier measurement of b.
            propagate(b, GateId::P);
            propagate(a, GateId::P);
            propagate_cx(b, a);
            propagate(a, GateId::P);
            logical_p(rb);
            logical_p(ra);
            logical_cx(rb, ra);
            logical_p(ra);
            bool m = rng() >> 63;
            auto mhat = decoded_outcome(b, Basis::fourier, m, rng);
            return mhat && *mhat == (m != rb.z) && residual_of(a) == ra;
        }
        case LemmaOp::measure_standard:
        case LemmaOp::measure_fourier: {
            Basis basis = op == LemmaOp::measure_standard ? Basis::standard : Basis::fourier;
            bool m = rng() >> 63;
            auto mhat = decoded_outcome(a, basis, m, rng);
            bool visible = basis == Basis::standard ? ra.x : ra.z;
            return mhat && *mhat == (m != visible);
        }
    }
    return false;
}

LemmaPattern random_pattern(const CssCode &code, size_t support_size, std::mt19937_64 &rng) {
    size_t n = code.n();
    LemmaPattern p;
    std::vector<size_t> nodes(n);
    for (size_t k = 0; k < n; k++) {
        nodes[k] = k;
    }
    for (size_t k = 0; k < support_size && k < n; k++) {
        std::swap(nodes[k], nodes[k + rng() % (n - k)]);
        p.support.insert(nodes[k]);
    }
    p.primary = PauliError(n * n);
    p.secondary = PauliError(n * n);
    for (PauliError *e : {&p.primary, &p.secondary}) {
        for (size_t j = 0; j < n; j++) {
            for (size_t l = 0; l < n; l++) {
                if ((p.support.count(j) || p.support.count(l)) && (rng() & 1)) {
                    e->apply(j * n + l, static_cast<PauliType>(1 + rng() % 3));
                }
            }
        }
    }
    return p;
}

LemmaPattern random_bounded_pattern(const CssCode &code, size_t bound, std::mt19937_64 &rng) {
    size_t size = bound == 0 ? 0 : 1 + rng() % bound;
    return random_pattern(code, size, rng);
}

std::optional<LemmaPattern> find_counterexample(const CodeRef &code, LemmaOp op, size_t support_size, uint64_t seed,
                                                size_t tries) {
    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < tries; k++) {
        auto p = random_pattern(*code, support_size, rng);
        if (!lemma_check(code, op, p, rng())) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace mpqc
