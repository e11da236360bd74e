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
#include <cstdint>
#include <optional>
#include <random>

#include "qwitness/density.hpp"

namespace qwit {

/// Either exact expectation values or a finite number of shots per observable.
class Shots {
   public:
    static Shots exact() {
        return Shots();
    }
    static Shots count(std::uint64_t n) {
        if (n == 0) {
            throw PreconditionError("shot count must be at least 1");
        }
        Shots s;
        s.n_ = n;
        return s;
    }

    bool is_exact() const {
        return !n_.has_value();
    }
    std::uint64_t value() const {
        return n_.value();
    }

    bool operator==(const Shots &) const = default;

   private:
    std::optional<std::uint64_t> n_;
};

struct Estimate {
    double value = 0.0;
    /// Zero only for exact evaluation.
    double std_error = 0.0;
};

/// Sample mean of a +/-1-valued observable over `shots` independent runs.
///
/// The standard error is sqrt((1 - m^2) / N) at the sample mean m, floored at
/// 1/N so that a run where every outcome agreed is not reported as exact.
inline Estimate sample_dichotomic(double exact_mean, std::uint64_t shots, std::mt19937_64 &rng) {
    double p_plus = std::clamp(0.5 * (1.0 + exact_mean), 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(shots, p_plus);
    std::uint64_t plus = draw(rng);
    double n = static_cast<double>(shots);
    double mean = (2.0 * static_cast<double>(plus) - n) / n;
    double se = std::sqrt(std::max(0.0, 1.0 - mean * mean) / n);
    return {mean, std::max(se, 1.0 / n)};
}

inline Estimate estimate_pauli(const DensityState &rho, const Operator &pauli, const Shots &shots,
                               std::mt19937_64 &rng) {
    double exact = expectation(rho, pauli);
    if (shots.is_exact()) {
        return {exact, 0.0};
    }
    return sample_dichotomic(exact, shots.value(), rng);
}

}  // namespace qwit
