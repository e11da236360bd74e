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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qwitness/channels.hpp"
#include "qwitness/sampling.hpp"
#include "qwitness/witness.hpp"

namespace qwit {

struct AlphaStates {
    /// (S_Q, S_C) after the C-to-Q copy acted on rho_+/-.
    DensityState joint_plus;
    DensityState joint_minus;
    /// Marginals on S_C.
    DensityState alpha_plus;
    DensityState alpha_minus;
};

/// Runs stage 1 with `qc`, then copies the classical value back onto the
/// probe with `cq`; alpha_+/- are what is left on S_C.
inline AlphaStates induce_alpha_states(const CopyChannel &qc, const CopyChannel &cq) {
    if (qc.direction() != CopyDirection::QtoC || cq.direction() != CopyDirection::CtoQ) {
        throw PreconditionError("induce_alpha_states needs a Q-to-C and a C-to-Q channel");
    }
    ProtocolStates s1 = run_stage1(qc);
    DensityState jp = cq.apply(s1.rho_plus);
    DensityState jm = cq.apply(s1.rho_minus);
    DensityState ap = partial_trace(jp, {classical_qubit});
    DensityState am = partial_trace(jm, {classical_qubit});
    return AlphaStates{std::move(jp), std::move(jm), std::move(ap), std::move(am)};
}

/// CNOT(C->Q'), CNOT(Q'->C), CNOT(C->Q') on a (S_Q, S_C, S_Q') register.
inline DensityState three_cnot_swap(const DensityState &joint) {
    if (joint.dim() != 8) {
        throw DimensionError("three_cnot_swap needs an 8x8 (S_Q, S_C, S_Q') state");
    }
    Operator a = cnot(3, classical_qubit, swap_qubit);
    Operator b = cnot(3, swap_qubit, classical_qubit);
    Operator swap = a * b * a;
    return DensityState(swap * joint.op() * swap.adjoint());
}

/// Appends a blank |0> qubit S_Q', swaps it with S_C and returns its state.
inline DensityState swap_out_classical_state(const DensityState &probe_and_classical) {
    DensityState joint = tensor(probe_and_classical, DensityState::basis(2, 0));
    return partial_trace(three_cnot_swap(joint), {swap_qubit});
}

struct TomographyResult {
    DensityState reconstructed;
    /// Bloch vector of `reconstructed` (after the PSD projection).
    Vec3 bloch{};
    /// Linear-inversion estimate before projection.
    Vec3 raw_bloch{};
    Vec3 std_errors{};
    Shots shots_per_basis;
    std::optional<double> fidelity_to_reference;
};

/// Clips negative eigenvalues of 1/2 (I + b . sigma) to zero and renormalizes.
inline DensityState project_to_state(const Vec3 &b) {
    Operator m = Operator::identity(2);
    m += b[0] * pauli_matrix(Pauli::X);
    m += b[1] * pauli_matrix(Pauli::Y);
    m += b[2] * pauli_matrix(Pauli::Z);
    m *= Complex(0.5);
    Operator clipped = apply_spectral_function(m, [](double x) { return std::max(x, 0.0); });
    clipped *= Complex(1.0 / clipped.trace().real());
    // Restore exact Hermiticity lost to rounding in the spectral rebuild.
    Operator sym = 0.5 * (clipped + clipped.adjoint());
    return DensityState(sym);
}

inline Vec3 bloch_vector(const DensityState &rho) {
    if (rho.dim() != 2) {
        throw DimensionError("bloch_vector needs a single-qubit state");
    }
    return {expectation(rho, pauli_matrix(Pauli::X)), expectation(rho, pauli_matrix(Pauli::Y)),
            expectation(rho, pauli_matrix(Pauli::Z))};
}

/// Estimates <X>, <Y>, <Z> (RNG streams 0, 1, 2 of `seed`), inverts
/// linearly and projects onto the state space. The fidelity is against the
/// state that was measured.
inline TomographyResult tomography_single_qubit(const DensityState &rho, const Shots &shots,
                                                std::uint64_t seed) {
    if (rho.dim() != 2) {
        throw DimensionError("tomography_single_qubit needs a single-qubit state");
    }
    Vec3 raw{};
    Vec3 se{};
    const std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t a = 0; a < 3; ++a) {
        auto rng = make_rng(seed, a);
        Estimate e = estimate_pauli(rho, pauli_matrix(axes[a]), shots, rng);
        raw[a] = e.value;
        se[a] = e.std_error;
    }
    DensityState rec = project_to_state(raw);
    Vec3 b = bloch_vector(rec);
    double f = fidelity(rec, rho);
    return TomographyResult{std::move(rec), b, raw, se, shots, f};
}

struct OverlapReport {
    double overlap = 0.0;
    bool orthogonal = false;
    /// 1: one complementary observable with alpha_+/- as eigenstates.
    /// 2: non-orthogonal states, one observable per state.
    int implied_observables = 2;
};

inline OverlapReport overlap_analysis(const TomographyResult &a, const TomographyResult &b, double tol) {
    OverlapReport rep;
    rep.overlap = fidelity(a.reconstructed, b.reconstructed);
    rep.orthogonal = rep.overlap <= tol;
    rep.implied_observables = rep.orthogonal ? 1 : 2;
    return rep;
}

/// The coherent swap onto S_Q' requires a quantum coupling with S_C that
/// the first experiment does not assume; reports carry this label.
inline constexpr const char *swap_coupling_label = "conjectural coupling";

struct SwapTomographyRun {
    AlphaStates alpha;
    DensityState swapped_plus;
    DensityState swapped_minus;
    TomographyResult tomography_plus;
    TomographyResult tomography_minus;
    OverlapReport overlap;
};

/// Induce alpha_+/-, swap each onto a fresh qubit, run tomography there
/// (RNG streams 0 and 1 of `seed`) and compare the reconstructions.
inline SwapTomographyRun run_swap_tomography(const CopyChannel &qc, const CopyChannel &cq,
                                             const Shots &shots, std::uint64_t seed, double tol) {
    AlphaStates alpha = induce_alpha_states(qc, cq);
    DensityState sp = swap_out_classical_state(alpha.joint_plus);
    DensityState sm = swap_out_classical_state(alpha.joint_minus);
    TomographyResult tp = tomography_single_qubit(sp, shots, derive_seed(seed, 0));
    TomographyResult tm = tomography_single_qubit(sm, shots, derive_seed(seed, 1));
    OverlapReport ov = overlap_analysis(tp, tm, tol);
    return SwapTomographyRun{std::move(alpha), std::move(sp), std::move(sm),
                             std::move(tp),    std::move(tm), ov};
}

}  // namespace qwit
