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

#include "qwitness/channels.hpp"
#include "qwitness/classical_family.hpp"
#include "qwitness/density.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/linalg.hpp"
#include "qwitness/nogo.hpp"
#include "qwitness/operator.hpp"
#include "qwitness/pauli.hpp"
#include "qwitness/random.hpp"
#include "qwitness/sampling.hpp"
#include "qwitness/swap_tomography.hpp"
#include "qwitness/tolerances.hpp"
#include "qwitness/toy_model.hpp"
#include "qwitness/uniqueness.hpp"
#include "qwitness/witness.hpp"
