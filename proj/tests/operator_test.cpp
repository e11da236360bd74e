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

#include "qwitness/density.hpp"

#include <numbers>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qwit;

TEST(pauli, matrices) {
    Operator z = pauli_matrix(Pauli::Z);
    EXPECT_EQ(z(0, 0), Complex(1.0));
    EXPECT_EQ(z(1, 1), Complex(-1.0));
    EXPECT_EQ(z(0, 1), Complex(0.0));

    Operator x = pauli_matrix(Pauli::X);
    EXPECT_EQ(x * x, Operator::identity(2));
    EXPECT_EQ(pauli_matrix(Pauli::Y).trace(), Complex(0.0));
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        Operator m = pauli_matrix(p);
        EXPECT_TRUE(m.is_hermitian());
        EXPECT_TRUE(m.is_unitary());
        EXPECT_EQ(m.trace(), Complex(0.0));
    }
}

TEST(pauli, parse_and_print) {
    auto p = PauliString::parse("XIZ");
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.str(), "XIZ");
    EXPECT_EQ(p.to_operator().dim(), 8u);
    EXPECT_THROW(PauliString::parse("XQ"), PreconditionError);
    EXPECT_THROW(PauliString::parse(""), DimensionError);
    EXPECT_THROW(PauliString::parse("XXXX"), DimensionError);
}

TEST(pauli, basis_is_orthogonal) {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto all = all_pauli_strings(n);
        ASSERT_EQ(all.size(), std::size_t{1} << (2 * n));
        double dim = static_cast<double>(std::size_t{1} << n);
        for (const auto &p : all) {
            Operator pm = p.to_operator();
            EXPECT_TRUE(pm.is_hermitian());
            EXPECT_TRUE(pm.is_unitary());
            if (!p.is_identity()) {
                EXPECT_NEAR(std::abs(pm.trace()), 0.0, 1e-15);
            }
            for (const auto &q : all) {
                Complex tr = (pm * q.to_operator()).trace();
                EXPECT_NEAR(tr.real(), p == q ? dim : 0.0, 1e-12) << p.str() << " " << q.str();
                EXPECT_NEAR(tr.imag(), 0.0, 1e-12);
            }
        }
    }
}

TEST(kron, identities) {
    Operator i2 = Operator::identity(2);
    Operator x = pauli_matrix(Pauli::X);
    Operator z = pauli_matrix(Pauli::Z);
    EXPECT_EQ(kron(i2, i2), Operator::identity(4));
    Ket k00 = basis_ket(4, 0);
    Ket out = kron(z, z).apply(k00);
    EXPECT_EQ(out, k00);
    EXPECT_EQ(kron(x, i2) * kron(i2, x), kron(x, x));
    EXPECT_THROW(kron(Operator::identity(4), Operator::identity(4)), DimensionError);
}

TEST(operator_, rejects_bad_dims) {
    EXPECT_THROW(Operator(3), DimensionError);
    EXPECT_THROW(Operator(16), DimensionError);
    EXPECT_THROW(Operator::identity(2) * Operator::identity(4), DimensionError);
}

TEST(cnot, truth_table_and_ordering) {
    Operator u = cnot(2, 0, 1);
    EXPECT_EQ(u.apply(basis_ket(4, 2)), basis_ket(4, 3));  // |10> -> |11>
    EXPECT_EQ(u.apply(basis_ket(4, 0)), basis_ket(4, 0));
    Operator v = cnot(2, 1, 0);
    EXPECT_EQ(v.apply(basis_ket(4, 1)), basis_ket(4, 3));  // |01> -> |11>
    EXPECT_TRUE(cnot(3, 1, 2).is_unitary());
    EXPECT_THROW(cnot(2, 0, 0), DimensionError);
}

TEST(expectation, examples) {
    auto mixed = DensityState::maximally_mixed(4);
    auto zz = PauliString::parse("ZZ");
    EXPECT_NEAR(expectation(mixed, zz), 0.0, 1e-15);
    EXPECT_NEAR(expectation(DensityState::basis(4, 0), zz), 1.0, 1e-15);

    // Oracle: explicit 4x4 trace of Phi+ against X (x) Z.
    const double h = 0.5;
    const double phi[4][4] = {{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}};
    const double xz[4][4] = {{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    double oracle = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            oracle += phi[i][j] * xz[j][i];
        }
    }
    auto bell = DensityState::pure({1.0, 0.0, 0.0, 1.0});
    EXPECT_NEAR(expectation(bell, PauliString::parse("XZ")), oracle, 1e-15);
    EXPECT_NEAR(oracle, 0.0, 1e-15);
}

TEST(expectation, errors) {
    auto rho = DensityState::maximally_mixed(4);
    EXPECT_THROW(expectation(rho, pauli_matrix(Pauli::X)), DimensionError);
    Operator not_hermitian = Operator::matrix_unit(4, 0, 1);
    EXPECT_THROW(expectation(rho, not_hermitian), PreconditionError);
}

TEST(expectation, linear_in_state_and_observable) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto obs = all_pauli_strings(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = testutil::random_state(4, rng);
        auto b = testutil::random_state(4, rng);
        double w = u(rng);
        DensityState mix(w * a.op() + (1.0 - w) * b.op());
        const auto &p = obs[trial % obs.size()];
        const auto &q = obs[(trial * 7 + 3) % obs.size()];
        EXPECT_NEAR(expectation(mix, p), w * expectation(a, p) + (1.0 - w) * expectation(b, p), 1e-10);
        double c1 = u(rng) - 0.5;
        double c2 = u(rng) - 0.5;
        Operator combo = c1 * p.to_operator() + c2 * q.to_operator();
        EXPECT_NEAR(expectation(a, combo), c1 * expectation(a, p) + c2 * expectation(a, q), 1e-10);
    }
}

TEST(density_state, validation) {
    EXPECT_THROW(DensityState(Operator::identity(2)), InvalidStateError);            // trace 2
    EXPECT_THROW(DensityState(Operator::matrix_unit(2, 0, 1) + Operator::matrix_unit(2, 0, 0)),
                 InvalidStateError);                                                   // not Hermitian
    EXPECT_THROW(DensityState(Operator::diagonal(std::vector<double>{1.5, -0.5})), InvalidStateError);
    EXPECT_NO_THROW(DensityState(Operator::diagonal(std::vector<double>{1.0, 0.0})));
}

TEST(partial_trace, examples) {
    const double h = 1.0 / std::sqrt(2.0);
    auto plus = DensityState::pure({h, h});
    auto zero = DensityState::basis(2, 0);
    auto reduced = partial_trace(tensor(zero, plus), {0});
    EXPECT_LE(max_abs_diff(reduced.op(), zero.op()), 1e-15);
    auto other = partial_trace(tensor(zero, plus), {1});
    EXPECT_LE(max_abs_diff(other.op(), plus.op()), 1e-15);

    auto bell = DensityState::pure({1.0, 0.0, 0.0, 1.0});
    EXPECT_LE(max_abs_diff(partial_trace(bell, {0}).op(), DensityState::maximally_mixed(2).op()), 1e-15);

    EXPECT_THROW(partial_trace(bell, {}), PreconditionError);
    EXPECT_THROW(partial_trace(bell, {2}), PreconditionError);
    EXPECT_THROW(partial_trace(bell, {0, 0}), PreconditionError);
}

TEST(partial_trace, middle_factor_and_trace) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testutil::random_state(2, rng);
        auto b = testutil::random_state(2, rng);
        auto c = testutil::random_state(2, rng);
        auto abc = DensityState(kron(kron(a.op(), b.op()), c.op()));
        EXPECT_LE(max_abs_diff(partial_trace(abc, {1}).op(), b.op()), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(abc, {0, 2}).op(), kron(a.op(), c.op())), 1e-12);

        auto joint = testutil::random_state(8, rng);
        for (std::vector<std::size_t> keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}}) {
            EXPECT_NEAR(partial_trace(joint, keep).op().trace().real(), 1.0, 1e-12);
        }
        // Tracing out in two steps equals tracing out at once.
        auto two_step = partial_trace(partial_trace(joint, {0, 1}), {0});
        EXPECT_LE(max_abs_diff(two_step.op(), partial_trace(joint, {0}).op()), 1e-12);
    }
}

TEST(trace_distance, examples) {
    const double h = 1.0 / std::sqrt(2.0);
    auto zero = DensityState::basis(2, 0);
    auto one = DensityState::basis(2, 1);
    auto plus = DensityState::pure({h, h});
    EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-15);
    double oracle = testutil::eigen_trace_distance(zero.op(), plus.op());
    EXPECT_NEAR(oracle, 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(trace_distance(zero, plus), oracle, 1e-14);
    EXPECT_THROW(trace_distance(zero, DensityState::maximally_mixed(4)), DimensionError);
}

TEST(trace_distance, metric_properties) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = std::size_t{2} << (trial % 3);
        auto a = testutil::random_state(dim, rng);
        auto b = testutil::random_state(dim, rng);
        auto c = testutil::random_state(dim, rng);
        double ab = trace_distance(a, b);
        EXPECT_GE(ab, 0.0);
        EXPECT_LE(ab, 1.0 + 1e-12);
        EXPECT_LE(ab, trace_distance(a, c) + trace_distance(c, b) + 1e-9);
        EXPECT_NEAR(ab, testutil::eigen_trace_distance(a.op(), b.op()), 1e-9);
        Operator u = testutil::random_unitary(dim, rng);
        DensityState ua(u * a.op() * u.adjoint());
        DensityState ub(u * b.op() * u.adjoint());
        EXPECT_NEAR(trace_distance(ua, ub), ab, 1e-9);
    }
}

TEST(eigendecompose, examples) {
    auto z = eigendecompose_hermitian(pauli_matrix(Pauli::Z));
    EXPECT_NEAR(z.eigenvalues[0], -1.0, 1e-15);
    EXPECT_NEAR(z.eigenvalues[1], 1.0, 1e-15);

    auto id = eigendecompose_hermitian(Operator::identity(4));
    for (double ev : id.eigenvalues) {
        EXPECT_NEAR(ev, 1.0, 1e-15);
    }

    Operator cq = 0.25 * (Operator::identity(4) + PauliString::parse("ZZ").to_operator());
    auto e = eigendecompose_hermitian(cq);
    std::vector<double> expected{0.0, 0.0, 0.5, 0.5};  // diagonal (1/2, 0, 0, 1/2) sorted
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.eigenvalues[k], expected[k], 1e-15);
    }
    EXPECT_THROW(eigendecompose_hermitian(Operator::matrix_unit(2, 0, 1)), PreconditionError);
}

TEST(eigendecompose, reconstruction_matches_eigen) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t dim = std::size_t{2} << (trial % 3);
        Operator g = testutil::ginibre(dim, rng);
        Operator h = g + g.adjoint();
        auto dec = eigendecompose_hermitian(h);
        Operator lambda = Operator::diagonal(dec.eigenvalues);
        Operator rebuilt = dec.eigenvectors * lambda * dec.eigenvectors.adjoint();
        EXPECT_LE((h - rebuilt).frobenius_norm(), 1e-9);
        EXPECT_TRUE(dec.eigenvectors.is_unitary(1e-10));
        EXPECT_TRUE(std::is_sorted(dec.eigenvalues.begin(), dec.eigenvalues.end()));

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(testutil::to_eigen(h));
        for (std::size_t k = 0; k < dim; ++k) {
            EXPECT_NEAR(dec.eigenvalues[k], oracle.eigenvalues()(static_cast<Eigen::Index>(k)), 1e-10);
        }
    }
}

TEST(eigendecompose, degenerate_spectrum) {
    // Rank-one projector rotated by a random unitary: threefold degenerate zero.
    std::mt19937_64 rng(8);
    Operator u = testutil::random_unitary(4, rng);
    Operator p = u * Operator::matrix_unit(4, 2, 2) * u.adjoint();
    auto dec = eigendecompose_hermitian(p);
    EXPECT_NEAR(dec.eigenvalues[0], 0.0, 1e-12);
    EXPECT_NEAR(dec.eigenvalues[2], 0.0, 1e-12);
    EXPECT_NEAR(dec.eigenvalues[3], 1.0, 1e-12);
}

TEST(fidelity, pure_and_mixed) {
    const double h = 1.0 / std::sqrt(2.0);
    auto plus = DensityState::pure({h, h});
    auto zero = DensityState::basis(2, 0);
    EXPECT_NEAR(fidelity(plus, zero), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(plus, plus), 1.0, 1e-15);

    // The closed form at dim 2 and the general Uhlmann route agree (via a dim-4 embedding).
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = testutil::random_state(2, rng);
        auto b = testutil::random_state(2, rng);
        auto anc = DensityState::basis(2, 0);
        EXPECT_NEAR(fidelity(a, b), fidelity(tensor(a, anc), tensor(b, anc)), 1e-8);
    }
}

TEST(dephase_z, drops_coherences_on_one_qubit) {
    auto bell = DensityState::pure({1.0, 0.0, 0.0, 1.0});
    Operator d = dephase_z(bell.op(), 1);
    EXPECT_NEAR(d(0, 3).real(), 0.0, 1e-15);
    EXPECT_NEAR(d(0, 0).real(), 0.5, 1e-15);
    EXPECT_THROW(dephase_z(bell.op(), 2), PreconditionError);
}
