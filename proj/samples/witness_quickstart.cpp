// Copyright 2026 The qwitness Authors
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

// Runs the two-stage witness with a coherent CNOT and with a classical
// (fully dephased) copy, and prints the resulting verdicts.

#include <iostream>

#include "qwitness/qwitness.hpp"

int main() {
    using namespace qwit;
    for (double lambda : {0.0, 0.5, 1.0}) {
        CopyChannel ch = make_dephased_cnot(CopyDirection::QtoC, lambda);
        WitnessRun run = run_witness(ch, Shots::count(100000), /*seed=*/42);
        std::cout << "lambda=" << lambda << "  <ZZ>+=" << run.rho_plus.at(PauliString::parse("ZZ")).value
                  << "  XZ separation=" << run.report.separations.at(PauliString::parse("XZ"))
                  << "  verdict=" << verdict_name(run.report.verdict) << "\n";
    }
    return 0;
}
