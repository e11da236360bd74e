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

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qwitness/channels.hpp"
#include "qwitness/uniqueness.hpp"
#include "qwitness/witness.hpp"

namespace qwit {

/// max over A in {X, Y, Z} of |<A (x) Z>_plus - <A (x) Z>_minus|.
inline double max_stage2_separation(const DensityState &plus, const DensityState &minus) {
    double sep = 0.0;
    for (const auto &a : stage2_observables()) {
        sep = std::max(sep, std::abs(expectation(plus, a) - expectation(minus, a)));
    }
    return sep;
}

struct NoGoChannelRow {
    std::uint64_t channel_seed = 0;
    /// Second copy applied to the forced classical pair rho_+ = rho_-.
    double forced_separation = 0.0;
    /// Both stages run from |+/->|0>.
    double protocol_separation = 0.0;
    bool c1_to_c3_hold = false;
    bool covariant = false;
};

struct NoGoReport {
    std::size_t n_channels = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    ClassicalBlochState forced_state;
    double max_forced_separation = 0.0;
    double max_protocol_separation = 0.0;
    /// Channels where C1-C3 hold exactly and yet C4 also holds.
    std::size_t theorem_violations = 0;
    /// Protocol separation of the coherent CNOT, for contrast.
    double control_separation = 0.0;
    std::vector<NoGoChannelRow> rows;

    bool passed() const {
        return max_forced_separation <= tolerance && theorem_violations == 0;
    }
};

/// For n random dephasing-covariant copy channels (seeds seed, seed+1, ...),
/// push the unique classical state pair, and the real protocol states,
/// through the second copy and record how far apart the outputs end up.
inline NoGoReport no_go_demonstration(std::size_t n_channels, std::uint64_t seed, double tol) {
    if (n_channels == 0) {
        throw PreconditionError("no_go_demonstration needs at least one channel");
    }
    auto solved = classical_uniqueness_solve(copy_witness_constraints());
    if (!solved.unique()) {
        throw PreconditionError("classical constraints did not pin a unique state");
    }
    NoGoReport rep;
    rep.n_channels = n_channels;
    rep.seed = seed;
    rep.tolerance = tol;
    rep.forced_state = solved.solution;
    DensityState forced = bloch_to_state(solved.solution);
    ProtocolStates forced_pair(forced, forced, ProtocolStage::AfterFirstCopy);
    WitnessThresholds th{tol, 5.0};

    rep.rows.reserve(n_channels);
    for (std::size_t i = 0; i < n_channels; ++i) {
        NoGoChannelRow row;
        row.channel_seed = seed + i;
        CopyChannel ch = random_covariant_copy_channel(row.channel_seed);
        row.covariant = ch.covariant();

        ProtocolStates tilde = run_stage2(ch, forced_pair);
        row.forced_separation = max_stage2_separation(tilde.rho_plus, tilde.rho_minus);

        WitnessRun run = run_witness(ch, Shots::exact(), 0, th);
        row.protocol_separation = max_stage2_separation(run.stage2.rho_plus, run.stage2.rho_minus);
        const auto &w = run.report;
        row.c1_to_c3_hold = w.c1_copy_correlation && w.c2_cross_terms_zero && w.c3_not_eigenstate;
        if (row.c1_to_c3_hold && w.c4_stage2_distinguishable) {
            ++rep.theorem_violations;
        }

        rep.max_forced_separation = std::max(rep.max_forced_separation, row.forced_separation);
        rep.max_protocol_separation = std::max(rep.max_protocol_separation, row.protocol_separation);
        rep.rows.push_back(row);
    }

    WitnessRun control = run_witness(make_unitary_cnot(CopyDirection::QtoC), Shots::exact(), 0, th);
    rep.control_separation = max_stage2_separation(control.stage2.rho_plus, control.stage2.rho_minus);
    return rep;
}

}  // namespace qwit
