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
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qwitness/errors.hpp"
#include "qwitness/tolerances.hpp"

namespace qwit {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

inline constexpr std::size_t max_dim = 8;

inline bool is_supported_dim(std::size_t dim) {
    return dim == 2 || dim == 4 || dim == 8;
}

/// Dense complex square matrix over 1 to 3 qubit-sized factors.
///
/// Qubit 0 is the leftmost tensor factor and the most significant bit of a
/// computational-basis index, so |q0 q1 q2> has index 4*q0 + 2*q1 + q2.
class Operator {
   public:
    explicit Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (!is_supported_dim(dim)) {
            throw DimensionError("operator dimension must be 2, 4 or 8, got " + std::to_string(dim));
        }
    }

    Operator(std::size_t dim, std::initializer_list<Complex> row_major) : Operator(dim) {
        if (row_major.size() != dim * dim) {
            throw DimensionError("operator initializer has wrong number of entries");
        }
        std::copy(row_major.begin(), row_major.end(), entries_.begin());
    }

    static Operator identity(std::size_t dim) {
        Operator m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Operator diagonal(std::span<const double> diag) {
        Operator m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    /// |i><j| in dimension dim.
    static Operator matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
        Operator m(dim);
        m(i, j) = 1.0;
        return m;
    }

    /// |psi><psi| (not normalized).
    static Operator projector(std::span<const Complex> psi) {
        Operator m(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) {
            for (std::size_t j = 0; j < psi.size(); ++j) {
                m(i, j) = psi[i] * std::conj(psi[j]);
            }
        }
        return m;
    }

    std::size_t dim() const {
        return dim_;
    }
    std::size_t num_qubits() const {
        return static_cast<std::size_t>(std::countr_zero(dim_));
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Operator adjoint() const {
        Operator out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) = std::conj((*this)(j, i));
            }
        }
        return out;
    }

    Complex trace() const {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            acc += (*this)(i, i);
        }
        return acc;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const auto &z : entries_) {
            acc += std::norm(z);
        }
        return std::sqrt(acc);
    }

    double max_abs() const {
        double acc = 0.0;
        for (const auto &z : entries_) {
            acc = std::max(acc, std::abs(z));
        }
        return acc;
    }

    Ket apply(std::span<const Complex> psi) const {
        if (psi.size() != dim_) {
            throw DimensionError("ket dimension does not match operator");
        }
        Ket out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out[i] += (*this)(i, j) * psi[j];
            }
        }
        return out;
    }

    bool is_hermitian(double tol = tol::predicate) const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_unitary(double tol = tol::predicate) const;

    Operator &operator+=(const Operator &other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] += other.entries_[k];
        }
        return *this;
    }
    Operator &operator-=(const Operator &other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] -= other.entries_[k];
        }
        return *this;
    }
    Operator &operator*=(Complex s) {
        for (auto &z : entries_) {
            z *= s;
        }
        return *this;
    }

    friend Operator operator+(Operator a, const Operator &b) {
        return a += b;
    }
    friend Operator operator-(Operator a, const Operator &b) {
        return a -= b;
    }
    friend Operator operator*(Operator a, Complex s) {
        return a *= s;
    }
    friend Operator operator*(Complex s, Operator a) {
        return a *= s;
    }
    friend Operator operator*(double s, Operator a) {
        return a *= Complex(s);
    }

    friend Operator operator*(const Operator &a, const Operator &b) {
        a.require_same_dim(b);
        Operator out(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t k = 0; k < a.dim_; ++k) {
                Complex aik = a(i, k);
                if (aik == Complex(0.0)) {
                    continue;
                }
                for (std::size_t j = 0; j < a.dim_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    bool operator==(const Operator &other) const = default;

    void require_same_dim(const Operator &other) const {
        if (dim_ != other.dim_) {
            throw DimensionError(
                "dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
        }
    }

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

inline bool Operator::is_unitary(double tol) const {
    Operator prod = adjoint() * (*this);
    prod -= identity(dim_);
    return prod.max_abs() <= tol;
}

/// Kronecker product a (x) b; a is the more significant factor.
inline Operator kron(const Operator &a, const Operator &b) {
    std::size_t dim = a.dim() * b.dim();
    if (dim > max_dim) {
        throw DimensionError("kron result of dimension " + std::to_string(dim) + " exceeds 8");
    }
    Operator out(dim);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Largest entrywise deviation between two operators of equal dimension.
inline double max_abs_diff(const Operator &a, const Operator &b) {
    return (a - b).max_abs();
}

inline Ket basis_ket(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    Ket k(dim);
    k[index] = 1.0;
    return k;
}

/// Bit of qubit `q` (0 = most significant) in basis index `index` of an n-qubit register.
inline std::size_t qubit_bit(std::size_t index, std::size_t q, std::size_t num_qubits) {
    return (index >> (num_qubits - 1 - q)) & 1U;
}

/// Permutation unitary of a CNOT inside an n-qubit register.
inline Operator cnot(std::size_t num_qubits, std::size_t control, std::size_t target) {
    if (num_qubits < 2 || num_qubits > 3 || control >= num_qubits || target >= num_qubits ||
        control == target) {
        throw DimensionError("invalid CNOT placement");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t flip = std::size_t{1} << (num_qubits - 1 - target);
    Operator u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = qubit_bit(col, control, num_qubits) ? (col ^ flip) : col;
        u(row, col) = 1.0;
    }
    return u;
}

}  // namespace qwit
