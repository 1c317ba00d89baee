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

#include "trsec/common.hpp"
#include "trsec/random.hpp"

namespace trsec
{

// Diagonal frequency-domain channel: one complex gain per subcarrier.
struct DiagonalChannel
{
    CVector gains;

    Eigen::Index size() const { return gains.size(); }
    RVector power() const { return gains.cwiseAbs2(); }
};

// Q i.i.d. CN(0, 1) gains (Rayleigh modulus, white across subcarriers).
DiagonalChannel sample_channel(int n_subcarriers, Rng &rng);

DiagonalChannel conjugate(const DiagonalChannel &ch);

} // namespace trsec
