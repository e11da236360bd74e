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

namespace qwit::tol {

// Every numeric tolerance used by the library lives here.

/// Hermiticity / unitarity / commutation predicates.
inline constexpr double predicate = 1e-10;
/// |Tr(rho) - 1| accepted by DensityState.
inline constexpr double trace = 1e-12;
/// Hermiticity accepted by DensityState.
inline constexpr double state_hermitian = 1e-12;
/// Lowest eigenvalue accepted as positive semidefinite.
inline constexpr double psd_floor = -1e-10;
/// Largest imaginary part of an expectation value that is silently dropped.
inline constexpr double expectation_imag = 1e-10;
/// Hermiticity required by the eigensolver.
inline constexpr double eigen_hermitian = 1e-10;
/// Completeness sum_k K^dag K = I.
inline constexpr double completeness = 1e-10;
/// Trace distance allowed between a channel's output and its copy truth table.
inline constexpr double truth_table = 1e-9;
/// Kraus operators with Frobenius norm below this are dropped.
inline constexpr double kraus_prune = 1e-14;

}  // namespace qwit::tol
