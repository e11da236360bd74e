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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qwitness/operator.hpp"

namespace qwit {

enum class Pauli : unsigned char { I, X, Y, Z };

inline char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

inline Operator pauli_matrix(Pauli p) {
    using namespace std::complex_literals;
    switch (p) {
        case Pauli::I:
            return Operator(2, {1.0, 0.0, 0.0, 1.0});
        case Pauli::X:
            return Operator(2, {0.0, 1.0, 1.0, 0.0});
        case Pauli::Y:
            return Operator(2, {0.0, -1i, 1i, 0.0});
        case Pauli::Z:
            return Operator(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw PreconditionError("unknown Pauli label");
}

/// Tensor product of 1 to 3 single-qubit Pauli factors, leftmost factor first.
class PauliString {
   public:
    PauliString(std::initializer_list<Pauli> factors) : factors_(factors) {
        validate();
    }
    explicit PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {
        validate();
    }

    /// Parses text such as "XZ" or "IIZ".
    static PauliString parse(std::string_view text) {
        std::vector<Pauli> factors;
        for (char c : text) {
            switch (c) {
                case 'I':
                    factors.push_back(Pauli::I);
                    break;
                case 'X':
                    factors.push_back(Pauli::X);
                    break;
                case 'Y':
                    factors.push_back(Pauli::Y);
                    break;
                case 'Z':
                    factors.push_back(Pauli::Z);
                    break;
                default:
                    throw PreconditionError("invalid Pauli character '" + std::string(1, c) + "'");
            }
        }
        return PauliString(std::move(factors));
    }

    std::size_t size() const {
        return factors_.size();
    }
    Pauli operator[](std::size_t k) const {
        return factors_[k];
    }
    const std::vector<Pauli> &factors() const {
        return factors_;
    }

    bool is_identity() const {
        for (Pauli p : factors_) {
            if (p != Pauli::I) {
                return false;
            }
        }
        return true;
    }

    std::string str() const {
        std::string out;
        for (Pauli p : factors_) {
            out.push_back(pauli_char(p));
        }
        return out;
    }

    Operator to_operator() const {
        Operator acc = pauli_matrix(factors_[0]);
        for (std::size_t k = 1; k < factors_.size(); ++k) {
            acc = kron(acc, pauli_matrix(factors_[k]));
        }
        return acc;
    }

    auto operator<=>(const PauliString &) const = default;

   private:
    void validate() const {
        if (factors_.empty() || factors_.size() > 3) {
            throw DimensionError("Pauli string must have 1 to 3 factors");
        }
    }

    std::vector<Pauli> factors_;
};

/// All 4^n Pauli strings on n factors in lexicographic I < X < Y < Z order.
inline std::vector<PauliString> all_pauli_strings(std::size_t n) {
    std::vector<PauliString> out;
    std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<Pauli> f(n);
        for (std::size_t k = 0; k < n; ++k) {
            f[k] = static_cast<Pauli>((code >> (2 * (n - 1 - k))) & 3U);
        }
        out.emplace_back(std::move(f));
    }
    return out;
}

}  // namespace qwit
