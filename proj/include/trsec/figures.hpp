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

#include <cstdint>
#include <optional>
#include <vector>

#include "trsec/common.hpp"
#include "trsec/scenario.hpp"
#include "trsec/table.hpp"

namespace trsec
{

struct FigureOptions
{
    int n_trials = 1000;
    std::uint64_t seed = 1;
    int n_symbols = 64;
    std::vector<int> bors;          // empty: the figure's default
    std::optional<Snr> snr_bob;     // empty: the figure's default
    std::optional<Snr> snr_eve;
    std::vector<Decoder> decoders{Decoder::SDS, Decoder::MF, Decoder::OC};
    int waterfill_trials = 100;
    int threads = 0;
};

// 2: secrecy rate against 1 - alpha (U = 4, 10 dB on both links).
// 3: analytic and empirical optimal alpha per back-off rate (15 dB).
// 4: analytic alpha and Bob SNR guaranteeing a target rate against a noiseless Eve.
// 5: waterfilling gain per back-off rate at the optimal alpha (15 dB).
Table reproduce_figure(int id, const FigureOptions &opt);

struct OptimizeRequest
{
    std::vector<double> deltas{0.75, 2.2};
    std::vector<int> bors{8};
    std::vector<Decoder> decoders{Decoder::SDS, Decoder::MF, Decoder::OC};
    Snr snr_bob = Snr::from_db(15.0);
    Snr snr_eve = Snr::infinite();
};

// Per (decoder, U, delta): alpha_opt and its analytic rate at the given SNRs,
// Bob's SNR needed for delta at that alpha, alpha_inf and the matching SNR for a noiseless Eve.
Table optimize_table(const OptimizeRequest &req);

// The alpha grid of the power-split figures, 1 - alpha in steps of 0.05.
std::vector<double> figure2_alphas();

} // namespace trsec
