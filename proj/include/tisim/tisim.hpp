// Copyright 2026 The tisim developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TISIM_TISIM_HPP
#define TISIM_TISIM_HPP

#include "tisim/basis.hpp"
#include "tisim/config.hpp"
#include "tisim/format.hpp"
#include "tisim/measurement.hpp"
#include "tisim/report.hpp"
#include "tisim/rng.hpp"
#include "tisim/scenarios.hpp"
#include "tisim/statevector.hpp"
#include "tisim/stats.hpp"
#include "tisim/transaction.hpp"
#include "tisim/wavegraph.hpp"

#endif // TISIM_TISIM_HPP
