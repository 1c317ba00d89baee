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

namespace trsec
{

struct AlphaOpt
{
    double alpha = 0.0;     // maximizer clamped to [0, 1]
    double unclamped = 0.0; // stationary point of the analytic secrecy rate
    bool clamped = false;
};

// Power split maximizing the analytic secrecy rate of the given decoder.
// SDS and OC have linear closed forms; MF is the positive root of a quadratic.
AlphaOpt alpha_opt(Decoder decoder, int bor, double noise_bob, double noise_eve);

// Linear Bob SNR at which the analytic secrecy rate equals delta bits for a
// given alpha and Eve noise level. Requires 0 < alpha < 1 and delta >= 0.
double required_snr_bob(Decoder decoder, double delta, double alpha, int bor, double noise_eve);

// Required Bob SNR against a noiseless Eve at a given alpha (convex in alpha).
double required_snr_infinite_eve_at(Decoder decoder, double delta, int bor, double alpha);

// Minimizer of required_snr_infinite_eve_at over alpha. Identical for SDS and OC.
double alpha_infinity(Decoder decoder, double delta, int bor);

// Minimum Bob SNR guaranteeing delta bits when Eve's SNR is infinite; 0 for delta = 0.
double required_snr_infinite_eve(Decoder decoder, double delta, int bor);

} // namespace trsec
