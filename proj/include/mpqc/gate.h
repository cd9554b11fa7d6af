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

#ifndef MPQC_GATE_H
#define MPQC_GATE_H

#include <optional>
#include <string_view>

namespace mpqc {

enum class GateId { H, P, T, CX, X, Y, Z, Pdag, CPdag, CXPdag };

std::string_view gate_name(GateId g);
/// Accepts the names produced by gate_name (case sensitive).
std::optional<GateId> parse_gate(std::string_view name);
/// Number of qubits the gate acts on (1 or 2).
size_t gate_arity(GateId g);

}  // namespace mpqc

#endif
