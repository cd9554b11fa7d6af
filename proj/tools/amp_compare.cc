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

// Compares two amplitude dumps ("index real imag" per line) within a tolerance.
// Exit 0 when equal, 1 when they differ, 2 on unreadable input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mpqc/state_vector.h"

int main(int argc, char **argv) {
    CLI::App app{"Tolerance-aware amplitude dump comparator"};
    std::string a_path;
    std::string b_path;
    double tolerance = mpqc::kAccumulatedTolerance;
    bool phase_invariant = false;
    app.add_option("expected", a_path, "Reference dump")->required();
    app.add_option("actual", b_path, "Dump to check")->required();
    app.add_option("--tol", tolerance, "Largest allowed amplitude deviation");
    app.add_flag("--phase-invariant", phase_invariant, "Ignore a global phase");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream a_in(a_path);
        std::ifstream b_in(b_path);
        if (!a_in || !b_in) {
            std::cerr << "cannot open input\n";
            return 2;
        }
        auto a = mpqc::read_amplitudes(a_in);
        auto b = mpqc::read_amplitudes(b_in);
        auto cmp = mpqc::compare_amplitudes(a, b, tolerance, phase_invariant);
        std::cout << (cmp.equal ? "equal" : "differ") << " max_deviation=" << cmp.max_deviation
                  << " worst_index=" << cmp.worst_index << "\n";
        return cmp.equal ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
