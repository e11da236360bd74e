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
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "qwitness/errors.hpp"
#include "qwitness/witness.hpp"

namespace qwit::toy {

// Spekkens toy bits. One toy bit has four ontic states, labelled 1..4 and
// stored as index 2x + p of a point (x, p) in the phase space Z_2^2; the
// three toy observables are the dichotomies
//   Z-analog (T):  {1,2} vs {3,4}  (x)
//   X-analog:      {1,3} vs {2,4}  (p)
//   Y-analog:      {1,4} vs {2,3}  (x + p)
// Two toy bits (probe first) have 16 ontic states with index 4a + b, i.e.
// the bit pattern (x1 p1 x2 p2).

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &q) {
    if (q.denominator() == 1) {
        return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace detail {

/// Symplectic form on Z_2^(2n) with coordinates (x1 p1 x2 p2 ...), MSB first.
inline unsigned symplectic(unsigned u, unsigned v, int bits) {
    unsigned acc = 0;
    for (int k = 0; k < bits; ++k) {
        int shift = 2 * (bits - 1 - k);
        unsigned xu = (u >> (shift + 1)) & 1U;
        unsigned pu = (u >> shift) & 1U;
        unsigned xv = (v >> (shift + 1)) & 1U;
        unsigned pv = (v >> shift) & 1U;
        acc ^= (xu & pv) ^ (pu & xv);
    }
    return acc;
}

}  // namespace detail

/// Uniform distribution over a set of ontic states of one or two toy bits.
struct ToyEpistemicState {
    int bits = 1;
    /// Bit k set iff ontic index k is in the support.
    std::uint16_t support = 0;

    /// One toy bit from 1-based labels, e.g. {1, 2}.
    static ToyEpistemicState from_labels(std::initializer_list<int> labels) {
        ToyEpistemicState s{1, 0};
        for (int l : labels) {
            if (l < 1 || l > 4) {
                throw PreconditionError("toy bit labels run from 1 to 4");
            }
            s.support |= static_cast<std::uint16_t>(1U << (l - 1));
        }
        return s;
    }

    int num_ontic() const {
        return 1 << (2 * bits);
    }
    int size() const {
        return std::popcount(support);
    }
    bool contains(unsigned ontic) const {
        return (support >> ontic) & 1U;
    }

    /// Knowledge balance: the support is a coset of a coisotropic subspace
    /// (the known variables commute and at most half are known), which for
    /// these sizes means |support| in {2, 4} for one bit, {4, 8, 16} for two.
    bool is_valid() const {
        const int n = num_ontic();
        const int sz = size();
        if (!std::has_single_bit(static_cast<unsigned>(sz)) || sz * sz < n) {
            return false;
        }
        unsigned origin = static_cast<unsigned>(std::countr_zero(support));
        std::vector<unsigned> w;
        for (unsigned o = 0; o < static_cast<unsigned>(n); ++o) {
            if (contains(o)) {
                w.push_back(o ^ origin);
            }
        }
        for (unsigned a : w) {
            for (unsigned b : w) {
                if (!contains((a ^ b) ^ origin)) {
                    return false;
                }
            }
        }
        for (unsigned v = 0; v < static_cast<unsigned>(n); ++v) {
            bool orthogonal = std::all_of(w.begin(), w.end(),
                                          [&](unsigned x) { return detail::symplectic(v, x, bits) == 0; });
            if (orthogonal && !contains(v ^ origin)) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const ToyEpistemicState &) const = default;
};

inline std::vector<ToyEpistemicState> all_valid_states(int bits) {
    std::vector<ToyEpistemicState> out;
    const unsigned limit = 1U << (1U << (2 * bits));
    for (unsigned mask = 1; mask < limit; ++mask) {
        ToyEpistemicState s{bits, static_cast<std::uint16_t>(mask)};
        if (s.is_valid()) {
            out.push_back(s);
        }
    }
    return out;
}

/// Outcome distribution of T on one toy bit: {P(+1), P(-1)}.
inline std::pair<Rational, Rational> toy_measure_T(const ToyEpistemicState &s) {
    if (s.bits != 1 || !s.is_valid()) {
        throw PreconditionError("toy_measure_T needs a valid one-bit epistemic state");
    }
    std::int64_t plus = (s.contains(0) ? 1 : 0) + (s.contains(1) ? 1 : 0);
    std::int64_t total = s.size();
    return {Rational(plus, total), Rational(total - plus, total)};
}

/// Linear phase-space functional; its toy observable is (-1)^(f . lambda).
using PhaseFunctional = unsigned;
inline constexpr PhaseFunctional z1 = 0b1000;
inline constexpr PhaseFunctional x1 = 0b0100;
inline constexpr PhaseFunctional y1 = 0b1100;
inline constexpr PhaseFunctional z2 = 0b0010;

/// Mean of (-1)^(f . lambda) over the support.
inline Rational toy_expectation(const ToyEpistemicState &s, PhaseFunctional f) {
    std::int64_t acc = 0;
    for (unsigned o = 0; o < static_cast<unsigned>(s.num_ontic()); ++o) {
        if (s.contains(o)) {
            acc += (std::popcount(o & f) % 2 == 0) ? 1 : -1;
        }
    }
    return Rational(acc, s.size());
}

using Permutation = std::array<std::uint8_t, 16>;

struct ToyDynamics {
    Permutation permutation{};
    std::string label;

    ToyEpistemicState apply(const ToyEpistemicState &s) const {
        if (s.bits != 2) {
            throw PreconditionError("toy dynamics act on two toy bits");
        }
        ToyEpistemicState out{2, 0};
        for (unsigned o = 0; o < 16; ++o) {
            if (s.contains(o)) {
                out.support |= static_cast<std::uint16_t>(1U << permutation[o]);
            }
        }
        return out;
    }
};

/// Ontic controlled-NOT, probe as control: x2 += x1, p1 += p2.
inline Permutation ontic_cnot() {
    Permutation p{};
    for (unsigned o = 0; o < 16; ++o) {
        unsigned x1v = (o >> 3) & 1U, p1v = (o >> 2) & 1U, x2v = (o >> 1) & 1U, p2v = o & 1U;
        p[o] = static_cast<std::uint8_t>((x1v << 3) | ((p1v ^ p2v) << 2) | ((x2v ^ x1v) << 1) | p2v);
    }
    return p;
}

/// A permutation of one toy bit's four ontic states lifted to two bits.
inline Permutation local_permutation(int which_bit, const std::array<std::uint8_t, 4> &perm) {
    Permutation p{};
    for (unsigned o = 0; o < 16; ++o) {
        unsigned a = o >> 2, b = o & 3U;
        if (which_bit == 0) {
            a = perm[a];
        } else {
            b = perm[b];
        }
        p[o] = static_cast<std::uint8_t>((a << 2) | b);
    }
    return p;
}

inline std::vector<ToyDynamics> generators() {
    const std::array<std::uint8_t, 4> transposition{1, 0, 2, 3};
    const std::array<std::uint8_t, 4> cycle{1, 2, 3, 0};
    return {
        {local_permutation(0, transposition), "P1(12)"},
        {local_permutation(0, cycle), "P1(1234)"},
        {local_permutation(1, transposition), "P2(12)"},
        {local_permutation(1, cycle), "P2(1234)"},
        {ontic_cnot(), "CNOT"},
    };
}

/// Closure of `generators()` under composition, breadth first, so each
/// element carries a shortest generator word (applied left to right).
inline std::vector<ToyDynamics> generated_group() {
    Permutation id{};
    for (unsigned o = 0; o < 16; ++o) {
        id[o] = static_cast<std::uint8_t>(o);
    }
    auto gens = generators();
    std::vector<ToyDynamics> out{{id, "id"}};
    std::map<Permutation, std::size_t> seen{{id, 0}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto &g : gens) {
            Permutation next{};
            for (unsigned o = 0; o < 16; ++o) {
                next[o] = g.permutation[out[head].permutation[o]];
            }
            if (seen.emplace(next, out.size()).second) {
                std::string label = out[head].label == "id" ? g.label : out[head].label + " " + g.label;
                out.push_back({next, std::move(label)});
            }
        }
    }
    return out;
}

/// T-sharp two-bit state: x1 = a, x2 = b (momenta unknown).
inline ToyEpistemicState t_sharp(unsigned a, unsigned b) {
    ToyEpistemicState s{2, 0};
    for (unsigned o = 0; o < 16; ++o) {
        if (((o >> 3) & 1U) == a && ((o >> 1) & 1U) == b) {
            s.support |= static_cast<std::uint16_t>(1U << o);
        }
    }
    return s;
}

inline bool preserves_validity(const ToyDynamics &d, const std::vector<ToyEpistemicState> &valid) {
    return std::all_of(valid.begin(), valid.end(), [&](const auto &s) { return d.apply(s).is_valid(); });
}

/// Group elements that map valid states to valid states and realise the
/// copy truth table {00 -> 00, 10 -> 11} on the T-sharp epistemic states.
inline std::vector<ToyDynamics> enumerate_copy_dynamics() {
    auto valid = all_valid_states(2);
    std::vector<ToyDynamics> out;
    for (auto &d : generated_group()) {
        if (d.apply(t_sharp(0, 0)) == t_sharp(0, 0) && d.apply(t_sharp(1, 0)) == t_sharp(1, 1) &&
            preserves_validity(d, valid)) {
            out.push_back(std::move(d));
        }
    }
    return out;
}

/// Probe in an X-analog eigenstate (p1 = 0 for +, 1 for -), S_C with x2 = 0.
inline ToyEpistemicState toy_initial(Sign sign) {
    unsigned p1 = sign == Sign::Plus ? 0U : 1U;
    ToyEpistemicState s{2, 0};
    for (unsigned o = 0; o < 16; ++o) {
        if (((o >> 2) & 1U) == p1 && ((o >> 1) & 1U) == 0U) {
            s.support |= static_cast<std::uint16_t>(1U << o);
        }
    }
    return s;
}

struct ToySweepRow {
    std::size_t index = 0;
    std::string label;
    Permutation permutation{};
    /// Stage-1 moments, both signs: ZZ, XZ, YZ, ZI, XI, YI.
    std::map<std::string, std::array<Rational, 2>> stage1;
    /// Stage-2 A-T correlators, both signs: XZ, YZ, ZZ.
    std::map<std::string, std::array<Rational, 2>> stage2;
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    bool c4 = false;
    std::optional<std::string> discriminating_observable;
    Verdict verdict = Verdict::Inconclusive;
};

struct ToySweepReport {
    std::size_t group_order = 0;
    std::size_t valid_two_bit_states = 0;
    std::vector<ToySweepRow> rows;
    std::map<std::string, std::size_t> verdict_counts;
};

inline ToySweepRow evaluate_toy_dynamics(const ToyDynamics &d, std::size_t index) {
    ToySweepRow row;
    row.index = index;
    row.label = d.label;
    row.permutation = d.permutation;
    const std::array<std::pair<const char *, PhaseFunctional>, 6> s1_obs{{
        {"ZZ", z1 ^ z2}, {"XZ", x1 ^ z2}, {"YZ", y1 ^ z2}, {"ZI", z1}, {"XI", x1}, {"YI", y1}}};
    const std::array<std::pair<const char *, PhaseFunctional>, 3> s2_obs{{
        {"XZ", x1 ^ z2}, {"YZ", y1 ^ z2}, {"ZZ", z1 ^ z2}}};

    std::array<ToyEpistemicState, 2> rho{d.apply(toy_initial(Sign::Plus)), d.apply(toy_initial(Sign::Minus))};
    std::array<ToyEpistemicState, 2> tilde{d.apply(rho[0]), d.apply(rho[1])};
    for (const auto &[name, f] : s1_obs) {
        row.stage1[name] = {toy_expectation(rho[0], f), toy_expectation(rho[1], f)};
    }
    for (const auto &[name, f] : s2_obs) {
        row.stage2[name] = {toy_expectation(tilde[0], f), toy_expectation(tilde[1], f)};
    }

    const Rational one(1), zero(0);
    auto both = [&](const char *k, const Rational &v) { return row.stage1[k][0] == v && row.stage1[k][1] == v; };
    row.c1 = both("ZZ", one);
    row.c2 = both("XZ", zero) && both("YZ", zero);
    row.c3 = both("ZI", zero) && both("XI", zero) && both("YI", zero);
    Rational best(-1);
    for (const auto &[name, f] : s2_obs) {
        Rational sep = boost::abs(row.stage2[name][0] - row.stage2[name][1]);
        if (sep > zero && sep > best) {
            best = sep;
            row.discriminating_observable = name;
        }
    }
    row.c4 = row.discriminating_observable.has_value();
    if (row.c1 && row.c2 && row.c3) {
        row.verdict = row.c4 ? Verdict::NonClassicalityWitnessed : Verdict::ConsistentWithClassical;
    }
    return row;
}

/// Runs the witness protocol on every copy dynamics of the toy theory.
/// The rows are observations about this finite model, in enumeration order.
inline ToySweepReport toy_witness_sweep() {
    ToySweepReport rep;
    rep.group_order = generated_group().size();
    rep.valid_two_bit_states = all_valid_states(2).size();
    auto dyn = enumerate_copy_dynamics();
    for (std::size_t i = 0; i < dyn.size(); ++i) {
        rep.rows.push_back(evaluate_toy_dynamics(dyn[i], i));
        ++rep.verdict_counts[verdict_name(rep.rows.back().verdict)];
    }
    return rep;
}

}  // namespace qwit::toy
