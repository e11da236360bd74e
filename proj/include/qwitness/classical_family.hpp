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
#include <cmath>

#include "qwitness/density.hpp"
#include "qwitness/pauli.hpp"

namespace qwit {

// Register layout shared by both protocols: (S_Q, S_C, S_Q').
inline constexpr std::size_t probe_qubit = 0;
inline constexpr std::size_t classical_qubit = 1;
inline constexpr std::size_t swap_qubit = 2;

enum class Sign { Plus, Minus };

inline const char *sign_name(Sign s) {
    return s == Sign::Plus ? "+" : "-";
}

using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3 &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

/// Probe-qubit / classical-bit state with no coherence on the classical side:
///   rho = 1/4 (I + r . (sigma (x) I) + s_z (I (x) Z) + t . (sigma (x) Z)).
struct ClassicalBlochState {
    Vec3 r{};
    double s_z = 0.0;
    Vec3 t{};

    bool operator==(const ClassicalBlochState &) const = default;
};

/// The family matrix for arbitrary parameters, without any positivity check.
inline Operator family_matrix(const ClassicalBlochState &b) {
    static const std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
    Operator m = Operator::identity(4);
    for (std::size_t a = 0; a < 3; ++a) {
        m += b.r[a] * PauliString{axes[a], Pauli::I}.to_operator();
        m += b.t[a] * PauliString{axes[a], Pauli::Z}.to_operator();
    }
    m += b.s_z * PauliString{Pauli::I, Pauli::Z}.to_operator();
    m *= Complex(0.25);
    return m;
}

/// Lowest eigenvalue of family_matrix(b) in closed form.
///
/// The matrix is block diagonal in the classical bit c; block c is
/// 1/4 ((1 +/- s_z) I + (r +/- t) . sigma), whose spectrum is
/// 1/4 (1 +/- s_z +/- |r +/- t|).
inline double family_min_eigenvalue(const ClassicalBlochState &b) {
    double lowest = INFINITY;
    for (double sign : {1.0, -1.0}) {
        Vec3 v{b.r[0] + sign * b.t[0], b.r[1] + sign * b.t[1], b.r[2] + sign * b.t[2]};
        lowest = std::min(lowest, 0.25 * (1.0 + sign * b.s_z - norm3(v)));
    }
    return lowest;
}

inline DensityState bloch_to_state(const ClassicalBlochState &b) {
    return DensityState(family_matrix(b));
}

struct BlochDecomposition {
    ClassicalBlochState bloch;
    /// Frobenius distance between rho and its projection onto the family.
    double residual = 0.0;
};

inline BlochDecomposition state_to_bloch(const DensityState &rho) {
    if (rho.dim() != 4) {
        throw DimensionError("state_to_bloch requires a 4x4 state");
    }
    static const std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
    BlochDecomposition out;
    for (std::size_t a = 0; a < 3; ++a) {
        out.bloch.r[a] = expectation(rho, PauliString{axes[a], Pauli::I});
        out.bloch.t[a] = expectation(rho, PauliString{axes[a], Pauli::Z});
    }
    out.bloch.s_z = expectation(rho, PauliString{Pauli::I, Pauli::Z});
    out.residual = (rho.op() - family_matrix(out.bloch)).frobenius_norm();
    return out;
}

/// True iff rho is unchanged, within trace distance `tol`, by full
/// z-dephasing of the classical system.
inline bool is_discord_free_cq(const DensityState &rho, double tol = tol::predicate) {
    if (rho.dim() != 4) {
        throw DimensionError("is_discord_free_cq requires a 4x4 state");
    }
    Operator diff = rho.op() - dephase_z(rho.op(), classical_qubit);
    return 0.5 * trace_norm_hermitian(diff) <= tol;
}

/// |+/-><+/-| (x) |0><0|: probe in an X eigenstate, classical bit with T sharp at +1.
inline DensityState prepare_initial(Sign sign) {
    double s = sign == Sign::Plus ? 1.0 : -1.0;
    const double h = 1.0 / std::sqrt(2.0);
    Ket probe{h, s * h};
    return tensor(DensityState::pure(probe), DensityState::basis(2, 0));
}

enum class ProtocolStage { AfterFirstCopy, AfterSecondCopy };

/// rho_+/- after the first copy, or the tilde states after the second.
struct ProtocolStates {
    DensityState rho_plus;
    DensityState rho_minus;
    ProtocolStage stage;

    ProtocolStates(DensityState plus, DensityState minus, ProtocolStage st)
        : rho_plus(std::move(plus)), rho_minus(std::move(minus)), stage(st) {
        if (rho_plus.dim() != 4 || rho_minus.dim() != 4) {
            throw DimensionError("protocol states must be 4x4");
        }
    }

    const DensityState &get(Sign s) const {
        return s == Sign::Plus ? rho_plus : rho_minus;
    }
};

}  // namespace qwit
