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

#include "mpqc/gate.h"

#include <array>
#include <stdexcept>
#include <utility>

namespace mpqc {

namespace {

constexpr std::array<std::pair<GateId, std::string_view>, 10> kNames{{
    {GateId::H, "H"},
    {GateId::P, "P"},
    {GateId::T, "T"},
    {GateId::CX, "CX"},
    {GateId::X, "X"},
    {GateId::Y, "Y"},
    {GateId::Z, "Z"},
    {GateId::Pdag, "Pdag"},
    {GateId::CPdag, "CPdag"},
    {GateId::CXPdag, "CXPdag"},
}};

}  // namespace

std::string_view gate_name(GateId g) {
    for (const auto &[id, name] : kNames) {
        if (id == g) {
            return name;
        }
    }
    throw std::invalid_argument("unknown gate id");
}

std::optional<GateId> parse_gate(std::string_view name) {
    for (const auto &[id, n] : kNames) {
        if (n == name) {
            return id;
        }
    }
    return std::nullopt;
}

size_t gate_arity(GateId g) {
    switch (g) {
        case GateId::CX:
        case GateId::CPdag:
        case GateId::CXPdag:
            return 2;
        default:
            return 1;
    }
}

}  // namespace mpqc
