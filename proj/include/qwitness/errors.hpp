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

#include <stdexcept>
#include <string>

namespace qwit {

/// Raised when operands have incompatible or unsupported dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails a DensityState invariant (trace, hermiticity, positivity).
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a measurement would touch the classical system with anything but T.
struct ProtocolViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qwit
