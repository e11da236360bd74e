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

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "qwitness/operator.hpp"

namespace qwit {

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the unit eigenvector of eigenvalues[k].
    Operator eigenvectors;
};

namespace detail {

inline double off_diagonal_norm2(const Operator &a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return acc;
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each pivot (p, q) first rotates the phase of a_pq away with a diagonal
/// unitary, then annihilates the now real entry with a Givens rotation.
inline EigenDecomposition eigendecompose_hermitian(const Operator &m) {
    if (!m.is_hermitian(tol::eigen_hermitian)) {
        throw PreconditionError("eigendecompose_hermitian requires a Hermitian matrix");
    }
    const std::size_t n = m.dim();
    Operator a = m;
    // Symmetrize away the sub-tolerance anti-Hermitian part.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Operator v = Operator::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double target = 1e-30 * scale * scale;

    for (int sweep = 0; sweep < 100 && detail::off_diagonal_norm2(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    continue;
                }
                Complex phase = a(p, q) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                Operator u = Operator::identity(n);
                u(p, p) = c;
                u(p, q) = s;
                u(q, p) = -s * std::conj(phase);
                u(q, q) = c * std::conj(phase);
                a = u.adjoint() * a * u;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                v = v * u;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    EigenDecomposition out{std::vector<double>(n), Operator(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

/// V f(Lambda) V^dag for a Hermitian matrix.
inline Operator apply_spectral_function(const Operator &m, const std::function<double(double)> &f) {
    auto eig = eigendecompose_hermitian(m);
    Operator out(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        double fk = f(eig.eigenvalues[k]);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            for (std::size_t j = 0; j < m.dim(); ++j) {
                out(i, j) += fk * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
            }
        }
    }
    return out;
}

/// Principal square root of a positive semidefinite matrix; tiny negative eigenvalues clip to 0.
inline Operator psd_sqrt(const Operator &m) {
    return apply_spectral_function(m, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

}  // namespace qwit
