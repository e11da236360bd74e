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
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qwitness/classical_family.hpp"
#include "qwitness/density.hpp"
#include "qwitness/random.hpp"

namespace qwit {

/// Completely positive trace-preserving map in Kraus form.
class Channel {
   public:
    explicit Channel(std::vector<Operator> kraus) : kraus_(std::move(kraus)) {
        if (kraus_.empty()) {
            throw PreconditionError("channel needs at least one Kraus operator");
        }
        Operator sum(kraus_.front().dim());
        for (const auto &k : kraus_) {
            sum += k.adjoint() * k;
        }
        if (max_abs_diff(sum, Operator::identity(sum.dim())) > tol::completeness) {
            throw PreconditionError("Kraus operators are not trace preserving");
        }
    }

    const std::vector<Operator> &kraus() const {
        return kraus_;
    }
    std::size_t dim() const {
        return kraus_.front().dim();
    }

    Operator apply(const Operator &m) const {
        m.require_same_dim(kraus_.front());
        Operator out(m.dim());
        for (const auto &k : kraus_) {
            out += k * m * k.adjoint();
        }
        return out;
    }

    DensityState apply(const DensityState &rho) const {
        return DensityState(apply(rho.op()));
    }

   private:
    std::vector<Operator> kraus_;
};

/// Kraus set of `second` after `first`, with negligible products dropped.
inline Channel compose(const Channel &second, const Channel &first) {
    std::vector<Operator> out;
    for (const auto &a : second.kraus()) {
        for (const auto &b : first.kraus()) {
            Operator k = a * b;
            if (k.frobenius_norm() > tol::kraus_prune) {
                out.push_back(std::move(k));
            }
        }
    }
    return Channel(std::move(out));
}

/// Full z-dephasing of one qubit of an n-qubit register.
inline Channel dephasing_channel(std::size_t num_qubits, std::size_t qubit) {
    std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Operator> kraus;
    for (std::size_t value = 0; value < 2; ++value) {
        Operator p(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (qubit_bit(i, qubit, num_qubits) == value) {
                p(i, i) = 1.0;
            }
        }
        kraus.push_back(std::move(p));
    }
    return Channel(std::move(kraus));
}

/// Which copy truth table a channel realizes. QtoC: {00->00, 10->11};
/// CtoQ: {00->00, 01->11}. The first slot is S_Q, the second S_C.
enum class CopyDirection { QtoC, CtoQ };

inline const char *direction_name(CopyDirection d) {
    return d == CopyDirection::QtoC ? "Q-to-C" : "C-to-Q";
}

inline std::size_t control_qubit(CopyDirection d) {
    return d == CopyDirection::QtoC ? probe_qubit : classical_qubit;
}
inline std::size_t target_qubit(CopyDirection d) {
    return d == CopyDirection::QtoC ? classical_qubit : probe_qubit;
}

/// Largest trace distance between the channel's output and the truth table
/// on the two basis inputs the copy is specified on.
inline double truth_table_error(const Channel &ch, CopyDirection d) {
    if (ch.dim() != 4) {
        throw DimensionError("copy truth table is defined on 4x4 channels");
    }
    std::size_t copied_input = d == CopyDirection::QtoC ? 2 : 1;  // |10> or |01>
    double worst = 0.0;
    for (auto [in, out] : {std::pair<std::size_t, std::size_t>{0, 0}, {copied_input, 3}}) {
        Operator produced = ch.apply(Operator::matrix_unit(4, in, in));
        Operator diff = produced - Operator::matrix_unit(4, out, out);
        worst = std::max(worst, 0.5 * trace_norm_hermitian(diff));
    }
    return worst;
}

/// True iff D o E = E o D = D o E o D within `tol` on all 16 matrix units,
/// where D fully dephases the classical system.
inline bool is_dephasing_covariant(const Channel &ch, double tol = tol::predicate) {
    for (std::size_t i = 0; i < ch.dim(); ++i) {
        for (std::size_t j = 0; j < ch.dim(); ++j) {
            Operator x = Operator::matrix_unit(ch.dim(), i, j);
            Operator de = dephase_z(ch.apply(x), classical_qubit);
            Operator ed = ch.apply(dephase_z(x, classical_qubit));
            Operator ded = dephase_z(ed, classical_qubit);
            if (max_abs_diff(de, ed) > tol || max_abs_diff(de, ded) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// A channel honoring one of the two copy truth tables. What it does on
/// every other input is deliberately unconstrained.
class CopyChannel {
   public:
    /// Throws unless the channel honors the direction's truth table.
    CopyChannel(Channel channel, CopyDirection direction, std::string label)
        : CopyChannel(std::move(channel), direction, std::move(label), true) {
    }

    /// A channel that only approximates the copy (e.g. an under-rotated
    /// classical NOT). Its truth-table error is recorded, not enforced.
    static CopyChannel partial(Channel channel, CopyDirection direction, std::string label) {
        return CopyChannel(std::move(channel), direction, std::move(label), false);
    }

    const Channel &channel() const {
        return channel_;
    }
    const std::vector<Operator> &kraus() const {
        return channel_.kraus();
    }
    CopyDirection direction() const {
        return direction_;
    }
    const std::string &label() const {
        return label_;
    }
    /// Cached is_dephasing_covariant at the default tolerance.
    bool covariant() const {
        return covariant_;
    }

    DensityState apply(const DensityState &rho) const {
        return channel_.apply(rho);
    }

    double truth_table_error() const {
        return truth_table_error_;
    }
    bool satisfies_truth_table() const {
        return truth_table_error_ <= tol::truth_table;
    }

   private:
    CopyChannel(Channel channel, CopyDirection direction, std::string label, bool strict)
        : channel_(std::move(channel)), direction_(direction), label_(std::move(label)) {
        truth_table_error_ = qwit::truth_table_error(channel_, direction_);
        if (strict && !satisfies_truth_table()) {
            throw PreconditionError(
                "channel '" + label_ + "' violates the " + direction_name(direction_) +
                " copy truth table by " + std::to_string(truth_table_error_));
        }
        covariant_ = qwit::is_dephasing_covariant(channel_);
    }

    Channel channel_;
    CopyDirection direction_;
    std::string label_;
    double truth_table_error_ = 0.0;
    bool covariant_ = false;
};

inline DensityState apply(const CopyChannel &ch, const DensityState &rho) {
    return ch.apply(rho);
}

inline bool is_dephasing_covariant(const CopyChannel &ch, double tol = tol::predicate) {
    return is_dephasing_covariant(ch.channel(), tol);
}

inline Operator copy_cnot(CopyDirection d) {
    return cnot(2, control_qubit(d), target_qubit(d));
}

inline CopyChannel make_unitary_cnot(CopyDirection d) {
    return CopyChannel(Channel({copy_cnot(d)}), d, "unitary-cnot");
}

/// Dephase the control with probability `lambda`, then CNOT.
/// lambda = 0 is the coherent gate, lambda = 1 a classical controlled copy.
inline CopyChannel make_dephased_cnot(CopyDirection d, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw PreconditionError("lambda must lie in [0, 1], got " + std::to_string(lambda));
    }
    Operator u = copy_cnot(d);
    std::vector<Operator> kraus;
    if (lambda < 1.0) {
        kraus.push_back(std::sqrt(1.0 - lambda) * u);
    }
    if (lambda > 0.0) {
        Channel dephase = dephasing_channel(2, control_qubit(d));
        for (const auto &p : dephase.kraus()) {
            kraus.push_back(std::sqrt(lambda) * (u * p));
        }
    }
    return CopyChannel(Channel(std::move(kraus)), d, "dephased-cnot");
}

/// Column-stochastic map on the joint populations of (S_Q, S_C), indexed
/// like the computational basis; transition[out][in].
///
/// `dephasing` is the weight of the fully classical action. Below 1 the
/// remainder is applied as the coherent permutation, so it is only allowed
/// when the transition matrix is a permutation.
struct ClassicalStochasticChannel {
    std::array<std::array<double, 4>, 4> transition{};
    double dephasing = 1.0;

    bool is_permutation() const {
        for (std::size_t in = 0; in < 4; ++in) {
            int ones = 0;
            for (std::size_t out = 0; out < 4; ++out) {
                double v = transition[out][in];
                if (v == 1.0) {
                    ++ones;
                } else if (v != 0.0) {
                    return false;
                }
            }
            if (ones != 1) {
                return false;
            }
        }
        return true;
    }

    void validate() const {
        for (std::size_t in = 0; in < 4; ++in) {
            double sum = 0.0;
            for (std::size_t out = 0; out < 4; ++out) {
                if (transition[out][in] < 0.0) {
                    throw PreconditionError("stochastic map has a negative entry");
                }
                sum += transition[out][in];
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                throw PreconditionError("stochastic map column does not sum to 1");
            }
        }
        if (!(dephasing >= 0.0 && dephasing <= 1.0)) {
            throw PreconditionError("dephasing strength must lie in [0, 1]");
        }
        if (dephasing < 1.0 && !is_permutation()) {
            throw PreconditionError("partial dephasing requires a permutation transition matrix");
        }
    }

    /// Embeds the map as diagonal-basis Kraus operators sqrt(T[i][j]) |i><j|.
    Channel to_channel() const {
        validate();
        std::vector<Operator> kraus;
        if (dephasing < 1.0) {
            Operator u(4);
            for (std::size_t in = 0; in < 4; ++in) {
                for (std::size_t out = 0; out < 4; ++out) {
                    u(out, in) = transition[out][in];
                }
            }
            kraus.push_back(std::sqrt(1.0 - dephasing) * u);
        }
        if (dephasing > 0.0) {
            for (std::size_t in = 0; in < 4; ++in) {
                for (std::size_t out = 0; out < 4; ++out) {
                    double w = dephasing * transition[out][in];
                    if (w > 0.0) {
                        kraus.push_back(std::sqrt(w) * Operator::matrix_unit(4, out, in));
                    }
                }
            }
        }
        return Channel(std::move(kraus));
    }
};

/// Classical controlled-NOT where the NOT is the population map
/// |0><0| -> cos^2(t)|0><0| + sin^2(t)|1><1| (and symmetrically for |1>),
/// conditioned on the z value of the control. Both systems end up dephased.
inline CopyChannel make_classical_rotation_copy(double t, CopyDirection d = CopyDirection::QtoC) {
    const double stay = std::cos(t) * std::cos(t);
    const double flip = std::sin(t) * std::sin(t);
    ClassicalStochasticChannel sc;
    for (std::size_t in = 0; in < 4; ++in) {
        if (qubit_bit(in, control_qubit(d), 2) == 0) {
            sc.transition[in][in] = 1.0;
        } else {
            std::size_t flipped = in ^ (std::size_t{1} << (1 - target_qubit(d)));
            sc.transition[in][in] = stay;
            sc.transition[flipped][in] = flip;
        }
    }
    // Only t = pi/2 (mod pi) is a full copy.
    return CopyChannel::partial(sc.to_channel(), d, "classical-rotation");
}

/// D o E o D with D the z-dephasing of the classical system.
inline Channel dephasing_twirl(const Channel &ch) {
    Channel d = dephasing_channel(2, classical_qubit);
    return compose(d, compose(ch, d));
}

/// Twirling fixes the basis states the truth table is stated on, so the
/// contract (or the recorded partial-copy error) carries over.
inline CopyChannel dephasing_twirl(const CopyChannel &ch) {
    Channel twirled = dephasing_twirl(ch.channel());
    std::string label = "twirled(" + ch.label() + ")";
    if (ch.satisfies_truth_table()) {
        return CopyChannel(std::move(twirled), ch.direction(), std::move(label));
    }
    return CopyChannel::partial(std::move(twirled), ch.direction(), std::move(label));
}

namespace detail {

inline Ket random_complex_vector(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Ket v(n);
    for (auto &z : v) {
        double re = normal(rng);
        double im = normal(rng);
        z = Complex(re, im);
    }
    return v;
}

inline void normalize(Ket &v) {
    double n2 = 0.0;
    for (const auto &z : v) {
        n2 += std::norm(z);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto &z : v) {
        z *= inv;
    }
}

}  // namespace detail

/// Number of Kraus operators (ancilla dimension) of a sampled channel.
inline constexpr std::size_t random_channel_rank = 4;

/// Random dephasing-covariant channel satisfying the copy truth table.
///
/// Samples a Haar-like isometry V : C^4 -> C^4 (x) C^rank (the Stinespring
/// dilation, whose blocks are the Kraus operators), projects the two
/// truth-table columns onto the subspaces the contract allows, restores
/// orthonormality with Gram-Schmidt, then twirls. Behavior on every input
/// outside the truth table stays random.
inline CopyChannel random_covariant_copy_channel(
    std::uint64_t seed, CopyDirection d = CopyDirection::QtoC) {
    constexpr std::size_t rank = random_channel_rank;
    constexpr std::size_t rows = 4 * rank;
    auto rng = make_rng(seed, d == CopyDirection::QtoC ? 0 : 1);
    std::size_t copied_input = d == CopyDirection::QtoC ? 2 : 1;

    // Column `in` of the isometry; row k*4 + out holds K_k(out, in).
    std::array<Ket, 4> cols;
    auto pinned_column = [&](std::size_t out) {
        Ket weights = detail::random_complex_vector(rng, rank);
        detail::normalize(weights);
        Ket col(rows);
        for (std::size_t k = 0; k < rank; ++k) {
            col[k * 4 + out] = weights[k];
        }
        return col;
    };
    cols[0] = pinned_column(0);
    cols[copied_input] = pinned_column(3);
    for (std::size_t in = 0; in < 4; ++in) {
        if (in == 0 || in == copied_input) {
            continue;
        }
        Ket v = detail::random_complex_vector(rng, rows);
        for (std::size_t prev = 0; prev < 4; ++prev) {
            if (cols[prev].empty()) {
                continue;
            }
            Complex overlap = 0.0;
            for (std::size_t r = 0; r < rows; ++r) {
                overlap += std::conj(cols[prev][r]) * v[r];
            }
            for (std::size_t r = 0; r < rows; ++r) {
                v[r] -= overlap * cols[prev][r];
            }
        }
        detail::normalize(v);
        cols[in] = std::move(v);
    }

    std::vector<Operator> kraus;
    for (std::size_t k = 0; k < rank; ++k) {
        Operator m(4);
        for (std::size_t out = 0; out < 4; ++out) {
            for (std::size_t in = 0; in < 4; ++in) {
                m(out, in) = cols[in][k * 4 + out];
            }
        }
        kraus.push_back(std::move(m));
    }
    Channel twirled = dephasing_twirl(Channel(std::move(kraus)));
    return CopyChannel(std::move(twirled), d, "twirled-random(" + std::to_string(seed) + ")");
}

}  // namespace qwit
