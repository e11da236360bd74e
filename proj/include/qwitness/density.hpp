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
#include <cmath>
#include <string>
#include <vector>

#include "qwitness/linalg.hpp"
#include "qwitness/operator.hpp"
#include "qwitness/pauli.hpp"

namespace qwit {

/// A validated density matrix: unit trace, Hermitian, positive semidefinite.
class DensityState {
   public:
    explicit DensityState(Operator op) : op_(std::move(op)) {
        double tr_err = std::abs(op_.trace() - Complex(1.0));
        if (tr_err > tol::trace) {
            throw InvalidStateError("density matrix trace deviates from 1 by " + std::to_string(tr_err));
        }
        if (!op_.is_hermitian(tol::state_hermitian)) {
            throw InvalidStateError("density matrix is not Hermitian");
        }
        double lowest = eigendecompose_hermitian(op_).eigenvalues.front();
        if (lowest < tol::psd_floor) {
            throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(lowest));
        }
    }

    static DensityState pure(const Ket &psi) {
        double norm2 = 0.0;
        for (const auto &z : psi) {
            norm2 += std::norm(z);
        }
        Operator p = Operator::projector(psi);
        p *= Complex(1.0 / norm2);
        return DensityState(std::move(p));
    }

    static DensityState basis(std::size_t dim, std::size_t index) {
        return DensityState(Operator::matrix_unit(dim, index, index));
    }

    static DensityState maximally_mixed(std::size_t dim) {
        Operator m = Operator::identity(dim);
        m *= Complex(1.0 / static_cast<double>(dim));
        return DensityState(std::move(m));
    }

    const Operator &op() const {
        return op_;
    }
    std::size_t dim() const {
        return op_.dim();
    }
    std::size_t num_qubits() const {
        return op_.num_qubits();
    }

   private:
    Operator op_;
};

inline DensityState tensor(const DensityState &a, const DensityState &b) {
    return DensityState(kron(a.op(), b.op()));
}

/// Re Tr(rho obs) for a Hermitian observable.
inline double expectation(const DensityState &rho, const Operator &obs) {
    rho.op().require_same_dim(obs);
    if (!obs.is_hermitian(tol::predicate)) {
        throw PreconditionError("expectation requires a Hermitian observable");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            acc += rho.op()(i, j) * obs(j, i);
        }
    }
    if (std::abs(acc.imag()) > tol::expectation_imag) {
        throw PreconditionError("expectation value has a non-negligible imaginary part");
    }
    return acc.real();
}

inline double expectation(const DensityState &rho, const PauliString &p) {
    return expectation(rho, p.to_operator());
}

/// Reduced operator on the qubits listed in `keep` (kept in ascending order).
inline Operator partial_trace_op(const Operator &m, std::vector<std::size_t> keep) {
    const std::size_t n = m.num_qubits();
    std::sort(keep.begin(), keep.end());
    if (keep.empty() || std::adjacent_find(keep.begin(), keep.end()) != keep.end() || keep.back() >= n) {
        throw PreconditionError("partial_trace: invalid subsystem index set");
    }
    std::size_t keep_mask = 0;
    for (std::size_t q : keep) {
        keep_mask |= std::size_t{1} << (n - 1 - q);
    }
    auto reduce = [&](std::size_t index) {
        std::size_t out = 0;
        for (std::size_t q : keep) {
            out = (out << 1) | qubit_bit(index, q, n);
        }
        return out;
    };
    Operator out(std::size_t{1} << keep.size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if ((i & ~keep_mask) == (j & ~keep_mask)) {
                out(reduce(i), reduce(j)) += m(i, j);
            }
        }
    }
    return out;
}

inline DensityState partial_trace(const DensityState &rho, std::vector<std::size_t> keep) {
    return DensityState(partial_trace_op(rho.op(), std::move(keep)));
}

/// Trace norm ||m||_1 of a Hermitian matrix.
inline double trace_norm_hermitian(const Operator &m) {
    double acc = 0.0;
    for (double ev : eigendecompose_hermitian(m).eigenvalues) {
        acc += std::abs(ev);
    }
    return acc;
}

inline double trace_distance(const DensityState &a, const DensityState &b) {
    a.op().require_same_dim(b.op());
    return 0.5 * trace_norm_hermitian(a.op() - b.op());
}

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2; equals |<psi|phi>|^2 on pure states.
///
/// Single-qubit states use the closed form Tr(ab) + 2 sqrt(det a det b),
/// which avoids square roots of eigenvalues that are zero up to rounding.
inline double fidelity(const DensityState &a, const DensityState &b) {
    a.op().require_same_dim(b.op());
    if (a.dim() == 2) {
        auto det = [](const Operator &m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); };
        double overlap = (a.op() * b.op()).trace().real();
        double f = overlap + 2.0 * std::sqrt(std::max(0.0, det(a.op()) * det(b.op())));
        return std::clamp(f, 0.0, 1.0);
    }
    Operator root = psd_sqrt(a.op());
    Operator inner = root * b.op() * root;
    double tr = 0.0;
    for (double ev : eigendecompose_hermitian(inner).eigenvalues) {
        tr += std::sqrt(std::max(ev, 0.0));
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

/// Full dephasing in the computational basis of one qubit: drops every
/// matrix element whose row and column disagree on that qubit.
inline Operator dephase_z(const Operator &m, std::size_t qubit) {
    const std::size_t n = m.num_qubits();
    if (qubit >= n) {
        throw PreconditionError("dephase_z: qubit index out of range");
    }
    Operator out = m;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (qubit_bit(i, qubit, n) != qubit_bit(j, qubit, n)) {
                out(i, j) = 0.0;
            }
        }
    }
    return out;
}

}  // namespace qwit
