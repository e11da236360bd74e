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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwitness/channels.hpp"
#include "qwitness/classical_family.hpp"
#include "qwitness/random.hpp"
#include "qwitness/sampling.hpp"

namespace qwit {

/// Correlators measured on one of rho_+, rho_-, ~rho_+, ~rho_-.
struct CorrelatorRecord {
    std::string state_label;
    std::map<PauliString, Estimate> values;
    Shots shots;

    const Estimate &at(const PauliString &p) const {
        auto it = values.find(p);
        if (it == values.end()) {
            throw PreconditionError("record '" + state_label + "' lacks correlator " + p.str());
        }
        return it->second;
    }
};

/// Only T = Z may ever be measured on the classical system.
inline void require_classical_side_is_T(const PauliString &p, std::size_t classical_index = classical_qubit) {
    if (classical_index < p.size()) {
        Pauli c = p[classical_index];
        if (c != Pauli::I && c != Pauli::Z) {
            throw ProtocolViolation("observable " + p.str() +
                                    " measures the classical system with something other than T");
        }
    }
}

/// Estimates each observable on rho; observable k draws from RNG stream k of `seed`.
inline CorrelatorRecord measure_correlators(const DensityState &rho,
                                            const std::vector<PauliString> &observables,
                                            const Shots &shots, std::uint64_t seed,
                                            std::string label = "") {
    CorrelatorRecord rec{std::move(label), {}, shots};
    for (std::size_t k = 0; k < observables.size(); ++k) {
        const auto &obs = observables[k];
        require_classical_side_is_T(obs);
        if (obs.size() != rho.num_qubits()) {
            throw DimensionError("observable " + obs.str() + " does not match the state's register");
        }
        auto rng = make_rng(seed, k);
        rec.values[obs] = estimate_pauli(rho, obs.to_operator(), shots, rng);
    }
    return rec;
}

inline const std::vector<PauliString> &stage1_observables() {
    static const std::vector<PauliString> obs{
        PauliString::parse("ZZ"), PauliString::parse("XZ"), PauliString::parse("YZ"),
        PauliString::parse("ZI"), PauliString::parse("XI"), PauliString::parse("YI")};
    return obs;
}

/// Candidate discriminators A (x) T with A in {X, Y, Z}, in tie-break order.
inline const std::vector<PauliString> &stage2_observables() {
    static const std::vector<PauliString> obs{
        PauliString::parse("XZ"), PauliString::parse("YZ"), PauliString::parse("ZZ")};
    return obs;
}

inline ProtocolStates run_stage1(const CopyChannel &ch) {
    if (ch.direction() != CopyDirection::QtoC) {
        throw PreconditionError("stage 1 needs a Q-to-C copy channel");
    }
    return ProtocolStates(ch.apply(prepare_initial(Sign::Plus)), ch.apply(prepare_initial(Sign::Minus)),
                          ProtocolStage::AfterFirstCopy);
}

inline ProtocolStates run_stage2(const CopyChannel &ch, const ProtocolStates &s) {
    if (s.stage != ProtocolStage::AfterFirstCopy) {
        throw PreconditionError("stage 2 must start from the states after the first copy");
    }
    if (ch.direction() != CopyDirection::QtoC) {
        throw PreconditionError("stage 2 needs a Q-to-C copy channel");
    }
    return ProtocolStates(ch.apply(s.rho_plus), ch.apply(s.rho_minus), ProtocolStage::AfterSecondCopy);
}

enum class Verdict { NonClassicalityWitnessed, ConsistentWithClassical, Inconclusive };

inline const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NonClassicalityWitnessed:
            return "NonClassicalityWitnessed";
        case Verdict::ConsistentWithClassical:
            return "ConsistentWithClassical";
        case Verdict::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

struct WitnessReport {
    bool c1_copy_correlation = false;
    bool c2_cross_terms_zero = false;
    bool c3_not_eigenstate = false;
    bool c4_stage2_distinguishable = false;
    std::optional<PauliString> discriminating_observable;
    /// |<A T>~+ - <A T>~-| for every candidate A (x) T.
    std::map<PauliString, double> separations;
    Verdict verdict = Verdict::Inconclusive;
    double tolerance_used = 0.0;
    double significance_used = 0.0;
};

struct WitnessThresholds {
    double tolerance = 1e-9;
    /// z-score, in standard errors, used whenever a record is shot-based.
    double significance = 5.0;
};

namespace detail {

/// Estimate agrees with `target`: within tolerance, or within `significance`
/// standard errors for sampled estimates.
inline bool agrees(const Estimate &e, double target, const WitnessThresholds &th) {
    double dev = std::abs(e.value - target);
    return dev <= std::max(th.tolerance, th.significance * e.std_error);
}

}  // namespace detail

/// Condition flags and verdict from the four correlator records.
///
/// C1: <ZZ> = 1 on both rho_+/-. C2: <XZ> = <YZ> = 0. C3: all three probe
/// moments vanish, which excludes every Z(x)Z eigenstate. C4: some A (x) T
/// separates ~rho_+ from ~rho_- by more than 2 tol (and, for sampled
/// records, by more than `significance` combined standard errors).
inline WitnessReport evaluate_witness(const CorrelatorRecord &stage1_plus, const CorrelatorRecord &stage1_minus,
                                      const CorrelatorRecord &stage2_plus, const CorrelatorRecord &stage2_minus,
                                      const WitnessThresholds &th = {}) {
    WitnessReport rep;
    rep.tolerance_used = th.tolerance;
    rep.significance_used = th.significance;

    static const PauliString zz = PauliString::parse("ZZ");
    static const PauliString xz = PauliString::parse("XZ");
    static const PauliString yz = PauliString::parse("YZ");
    static const std::array<PauliString, 3> locals{PauliString::parse("ZI"), PauliString::parse("XI"),
                                                   PauliString::parse("YI")};

    rep.c1_copy_correlation = true;
    rep.c2_cross_terms_zero = true;
    rep.c3_not_eigenstate = true;
    for (const CorrelatorRecord *rec : {&stage1_plus, &stage1_minus}) {
        rep.c1_copy_correlation &= detail::agrees(rec->at(zz), 1.0, th);
        rep.c2_cross_terms_zero &= detail::agrees(rec->at(xz), 0.0, th) && detail::agrees(rec->at(yz), 0.0, th);
        for (const auto &p : locals) {
            rep.c3_not_eigenstate &= detail::agrees(rec->at(p), 0.0, th);
        }
    }

    double best = -1.0;
    for (const auto &a : stage2_observables()) {
        const Estimate &plus = stage2_plus.at(a);
        const Estimate &minus = stage2_minus.at(a);
        double sep = std::abs(plus.value - minus.value);
        rep.separations[a] = sep;
        double combined_se = std::sqrt(plus.std_error * plus.std_error + minus.std_error * minus.std_error);
        bool distinguishes = sep > std::max(2.0 * th.tolerance, th.significance * combined_se);
        // Ties keep the earlier candidate (X < Y < Z).
        if (distinguishes && sep > best + th.tolerance) {
            best = sep;
            rep.discriminating_observable = a;
        }
    }
    rep.c4_stage2_distinguishable = rep.discriminating_observable.has_value();

    if (rep.c1_copy_correlation && rep.c2_cross_terms_zero && rep.c3_not_eigenstate) {
        rep.verdict = rep.c4_stage2_distinguishable ? Verdict::NonClassicalityWitnessed
                                                    : Verdict::ConsistentWithClassical;
    } else {
        rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

/// Everything produced by one run of the two-stage protocol.
struct WitnessRun {
    ProtocolStates stage1;
    ProtocolStates stage2;
    CorrelatorRecord rho_plus;
    CorrelatorRecord rho_minus;
    CorrelatorRecord tilde_plus;
    CorrelatorRecord tilde_minus;
    WitnessReport report;
};

/// Both stages, all four records (RNG streams 0..3 of `seed`), and the verdict.
inline WitnessRun run_witness(const CopyChannel &ch, const Shots &shots, std::uint64_t seed,
                              const WitnessThresholds &th = {}) {
    ProtocolStates s1 = run_stage1(ch);
    ProtocolStates s2 = run_stage2(ch, s1);
    auto r1p = measure_correlators(s1.rho_plus, stage1_observables(), shots, derive_seed(seed, 0), "rho+");
    auto r1m = measure_correlators(s1.rho_minus, stage1_observables(), shots, derive_seed(seed, 1), "rho-");
    auto r2p = measure_correlators(s2.rho_plus, stage2_observables(), shots, derive_seed(seed, 2), "rho~+");
    auto r2m = measure_correlators(s2.rho_minus, stage2_observables(), shots, derive_seed(seed, 3), "rho~-");
    WitnessReport rep = evaluate_witness(r1p, r1m, r2p, r2m, th);
    return WitnessRun{std::move(s1), std::move(s2), std::move(r1p), std::move(r1m),
                      std::move(r2p), std::move(r2m), std::move(rep)};
}

}  // namespace qwit
