// SPDX-License-Identifier: Apache-2.0
//
// trsec - secrecy simulator for frequency-domain time-reversal OFDM
// Copyright (C) 2026 The trsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>

#include "trsec/channel.hpp"
#include "trsec/common.hpp"
#include "trsec/txchain.hpp"

namespace trsec
{

struct WaterfillProblem
{
    DiagonalChannel h_bob;
    SpreadingMatrix s;
    CVector w;         // AN vector before the sqrt(1 - alpha) weight
    double alpha_init; // uniform starting split, strictly inside (0, 1)
    double epsilon = 1e-6;
    int max_iters = 2500;
    double step_tol = 1e-6;
};

struct WaterfillSolution
{
    RVector alpha_w;
    double objective_init = 0.0;
    double objective = 0.0;
    double objective_gain = 0.0; // relative: (f - f0) / f0
    // [0] AN leakage energy at Bob above its initial value
    // [1] |change of the expected total transmit energy|
    // [2] |change of the transmitted AN energy|
    std::array<double, 3> constraint_residuals{};
    int iterations = 0;
    bool converged = false;
};

// Sum over symbols of Bob's squared despread data gain, |(1/U) sum_i sqrt(alpha_q) |h_q|^2|^2.
double waterfill_objective(const RVector &alpha, const DiagonalChannel &h_bob, const SpreadingMatrix &s);

// Residuals of alpha against the uniform split alpha_init, same layout as WaterfillSolution.
std::array<double, 3> waterfill_residuals(const RVector &alpha, const WaterfillProblem &p);

// Per-subcarrier power split that raises Bob's data gain while keeping the AN in
// Bob's null space and both the total and the AN transmit energy fixed.
// Projected-gradient ascent in b = sqrt(1 - alpha), where the leakage
// constraints are linear and the two energy constraints are restored by Newton steps.
WaterfillSolution waterfill(const WaterfillProblem &p);

} // namespace trsec
