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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>

#include "golden_util.hpp"
#include "qwitness/qwitness.hpp"
#include "qwitness/report.hpp"
#include "test_util.hpp"

using namespace qwit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

const PauliString ZZ = PauliString::parse("ZZ");
const PauliString XZ = PauliString::parse("XZ");
const PauliString YZ = PauliString::parse("YZ");

Outcome quantum_witness() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto run = run_witness(make_unitary_cnot(CopyDirection::QtoC), Shots::exact(), 0);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto *rec : {&run.rho_plus, &run.rho_minus}) {
        o.require(std::abs(rec->at(ZZ).value - 1.0) <= 1e-10, "<ZZ> != 1");
        o.require(std::abs(rec->at(XZ).value) <= 1e-10, "<XZ> != 0");
        o.require(std::abs(rec->at(YZ).value) <= 1e-10, "<YZ> != 0");
        for (const char *m : {"ZI", "XI", "YI"}) {
            o.require(std::abs(rec->at(PauliString::parse(m)).value) <= 1e-10, std::string("<") + m + "> != 0");
        }
    }
    double sep = std::abs(run.tilde_plus.at(XZ).value - run.tilde_minus.at(XZ).value);
    o.require(std::abs(sep - 2.0) <= 1e-10, "XZ separation " + std::to_string(sep));
    o.require(run.report.verdict == Verdict::NonClassicalityWitnessed, "verdict");
    o.require(secs < 1.0, "runtime " + std::to_string(secs));
    return o;
}

Outcome classical_uniqueness() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto res = classical_uniqueness_solve(copy_witness_constraints());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(res.feasible, "infeasible");
    o.require(res.diameter <= 1e-6, "diameter " + std::to_string(res.diameter));
    Operator oracle = 0.25 * (Operator::identity(4) + PauliString::parse("ZZ").to_operator());
    double d = trace_distance(bloch_to_state(res.solution), DensityState(oracle));
    o.require(d <= 1e-9, "distance to 1/4(I+ZZ) " + std::to_string(d));
    o.require(secs < 60.0, "runtime " + std::to_string(secs));
    return o;
}

Outcome no_go() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = no_go_demonstration(1000, 0, 1e-9);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(rep.max_forced_separation <= 1e-9, "forced separation " + std::to_string(rep.max_forced_separation));
    o.require(rep.theorem_violations == 0, "theorem violations");
    o.require(std::all_of(rep.rows.begin(), rep.rows.end(), [](const auto &r) { return r.covariant; }),
              "non-covariant sample");
    o.require(secs < 300.0, "runtime " + std::to_string(secs));
    return o;
}

Outcome shot_statistics() {
    Outcome o;
    auto qc = make_unitary_cnot(CopyDirection::QtoC);
    int passes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto w = run_witness(qc, Shots::count(100000), seed, {1e-9, 5.0}).report;
        passes += w.c1_copy_correlation && w.c2_cross_terms_zero && w.c3_not_eigenstate &&
                  w.c4_stage2_distinguishable;
    }
    o.require(passes >= 99, "passes " + std::to_string(passes) + "/100");
    DensityState bell = DensityState::pure({1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
    std::vector<double> se;
    for (std::uint64_t n : {1000u, 10000u, 100000u}) {
        double acc = 0.0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            acc += measure_correlators(bell, {XZ}, Shots::count(n), seed).at(XZ).std_error;
        }
        se.push_back(acc / 100.0);
    }
    for (std::size_t k = 0; k + 1 < se.size(); ++k) {
        double ratio = se[k] / se[k + 1] / std::sqrt(10.0);
        o.require(ratio > 1.0 / 1.2 && ratio < 1.2, "std error ratio " + std::to_string(ratio));
    }
    return o;
}

Outcome swap_tomography() {
    Outcome o;
    auto qc = make_unitary_cnot(CopyDirection::QtoC);
    auto cq = make_unitary_cnot(CopyDirection::CtoQ);
    auto run = run_swap_tomography(qc, cq, Shots::exact(), 0, 1e-9);
    const Vec3 want_p{1.0, 0.0, 0.0};
    const Vec3 want_m{-1.0, 0.0, 0.0};
    for (std::size_t a = 0; a < 3; ++a) {
        o.require(std::abs(run.tomography_plus.bloch[a] - want_p[a]) <= 1e-9, "alpha+ Bloch");
        o.require(std::abs(run.tomography_minus.bloch[a] - want_m[a]) <= 1e-9, "alpha- Bloch");
    }
    o.require(run.overlap.overlap <= 1e-9, "overlap " + std::to_string(run.overlap.overlap));

    const double h = 1.0 / std::sqrt(2.0);
    std::array<DensityState, 2> ref{DensityState::pure({h, h}), DensityState::pure({h, -h})};
    for (int s = 0; s < 2; ++s) {
        std::vector<double> f;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto r = run_swap_tomography(qc, cq, Shots::count(10000), seed, 1e-9);
            const auto &t = s == 0 ? r.tomography_plus : r.tomography_minus;
            f.push_back(fidelity(t.reconstructed, ref[s]));
        }
        std::nth_element(f.begin(), f.begin() + 50, f.end());
        o.require(f[50] >= 0.99, "median fidelity " + std::to_string(f[50]));
    }

    std::mt19937_64 rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        auto q = testutil::random_state(2, rng);
        auto c = testutil::random_state(2, rng);
        auto f = testutil::random_state(2, rng);
        auto out = three_cnot_swap(tensor(tensor(q, c), f));
        worst = std::max(worst, max_abs_diff(out.op(), tensor(tensor(q, f), c).op()));
    }
    o.require(worst <= 1e-12, "swap error " + std::to_string(worst));
    return o;
}

Outcome channel_contracts() {
    Outcome o;
    std::vector<CopyChannel> backends;
    for (CopyDirection d : {CopyDirection::QtoC, CopyDirection::CtoQ}) {
        backends.push_back(make_unitary_cnot(d));
        for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            backends.push_back(make_dephased_cnot(d, lambda));
        }
        backends.push_back(make_classical_rotation_copy(std::numbers::pi / 2, d));
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            backends.push_back(random_covariant_copy_channel(seed, d));
        }
    }
    std::vector<CopyChannel> twirled;
    for (const auto &ch : backends) {
        o.require(ch.truth_table_error() <= 1e-9, "truth table " + ch.label());
        twirled.push_back(dephasing_twirl(ch));
    }
    for (const auto &ch : twirled) {
        o.require(ch.covariant(), "twirl not covariant " + ch.label());
    }
    std::mt19937_64 rng(4);
    double worst = 0.0;
    for (const auto &ch : twirled) {
        if (ch.direction() != CopyDirection::QtoC) {
            continue;
        }
        for (int i = 0; i < 100; ++i) {
            auto out = ch.apply(bloch_to_state(testutil::random_family_member(rng)));
            worst = std::max(worst, state_to_bloch(out).residual);
        }
    }
    o.require(worst <= 1e-9, "family residual " + std::to_string(worst));
    return o;
}

Outcome toy_sweep() {
    Outcome o;
    auto a = cli::toy_sweep_json(cli::RunConfig{}).dump();
    auto b = cli::toy_sweep_json(cli::RunConfig{}).dump();
    o.require(a == b, "sweep not byte-identical");
    auto dyn = toy::enumerate_copy_dynamics();
    o.require(!dyn.empty(), "no copy dynamics");
    std::set<toy::Permutation> seen;
    auto group = toy::generated_group();
    for (const auto &g : group) {
        seen.insert(g.permutation);
    }
    o.require(seen.size() == group.size(), "duplicates in group");
    for (const auto &g : toy::generators()) {
        for (const auto &e : group) {
            toy::Permutation p{};
            for (unsigned k = 0; k < 16; ++k) {
                p[k] = g.permutation[e.permutation[k]];
            }
            if (!seen.count(p)) {
                o.require(false, "not closed");
                break;
            }
        }
    }
    auto valid = toy::all_valid_states(2);
    for (const auto &d : dyn) {
        o.require(toy::preserves_validity(d, valid), "invalid dynamics " + d.label);
    }
    auto row = toy::evaluate_toy_dynamics({toy::ontic_cnot(), "CNOT"}, 0);
    o.require(row.c1 && row.stage1["ZZ"][0] == toy::Rational(1) && row.stage1["ZZ"][1] == toy::Rational(1),
              "CNOT row C1");
    return o;
}

Outcome cli_reproducibility() {
    Outcome o;
    for (const auto &g : testutil::golden_cases()) {
        o.require(testutil::render(g) == testutil::render(g), std::string("not byte-identical: ") + g.file);
        auto diffs = testutil::check_golden(g);
        o.require(diffs.empty(), std::string(g.file) + (diffs.empty() ? "" : " " + diffs.front()));
    }
    cli::RunConfig c;
    c.shots = Shots::count(5000);
    c.seed = 21;
    o.require(cli::witness_json(c).dump() == cli::witness_json(c).dump(), "shot-mode witness");
    c.channels = 10;
    o.require(cli::nogo_json(c).dump() == cli::nogo_json(c).dump(), "nogo");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"quantum-case witness", quantum_witness},
        {"classical uniqueness", classical_uniqueness},
        {"no-go over covariant channels", no_go},
        {"shot-mode statistics", shot_statistics},
        {"swap-tomography end-to-end", swap_tomography},
        {"channel contracts", channel_contracts},
        {"toy-model sweep", toy_sweep},
        {"CLI reproducibility", cli_reproducibility},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %zu. %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
