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

#include "trsec/common.hpp"

namespace trsec
{

double db_to_linear(double x_db);   // +inf maps to +inf
double linear_to_db(double linear); // +inf maps to +inf

// Per-subcarrier noise variance for a per-symbol SNR with spreading factor U:
// sigma^2 = 1 / (U * snr). An infinite SNR gives exactly 0.
double noise_variance_from_snr(double snr_linear, int bor);

// SNR with an explicit infinite state, so that the infinite-SNR limit maps to a
// noise variance of exactly zero instead of a tiny float.
class Snr
{
public:
    static Snr from_db(double db);
    static Snr from_linear(double linear);
    static Snr infinite() { return Snr{}; }

    // Accepts a number in dB or "inf"/"infinite"
    static Snr parse_db(std::string_view text);

    bool is_infinite() const { return !linear_.has_value(); }
    double linear() const;
    double db() const;
    double noise_variance(int bor) const;

    bool operator==(const Snr &) const = default;

private:
    Snr() = default;
    explicit Snr(double linear) : linear_(linear) {}

    std::optional<double> linear_;
};

struct ScenarioParams
{
    int n_symbols = 64;                // N
    int bor = 4;                       // U, back-off rate
    std::optional<int> n_subcarriers;  // Q, must equal N*U when given
    double alpha = 0.5;                // fraction of power on data
    Snr snr_bob = Snr::from_db(10.0);
    Snr snr_eve = Snr::from_db(10.0);
    Decoder decoder = Decoder::SDS;
    int n_trials = 1000;
    std::uint64_t rng_seed = 1;
    int modulation_order = 4;          // square QAM, unit average energy
};

// Validated, immutable experiment configuration.
class ScenarioConfig
{
public:
    ScenarioConfig() : ScenarioConfig(ScenarioParams{}) {}
    explicit ScenarioConfig(const ScenarioParams &p);

    const ScenarioParams &params() const { return p_; }

    int n_symbols() const { return p_.n_symbols; }
    int bor() const { return p_.bor; }
    int n_subcarriers() const { return p_.n_symbols * p_.bor; }
    double alpha() const { return p_.alpha; }
    const Snr &snr_bob() const { return p_.snr_bob; }
    const Snr &snr_eve() const { return p_.snr_eve; }
    Decoder decoder() const { return p_.decoder; }
    int n_trials() const { return p_.n_trials; }
    std::uint64_t rng_seed() const { return p_.rng_seed; }
    int modulation_order() const { return p_.modulation_order; }

    double noise_bob() const { return p_.snr_bob.noise_variance(p_.bor); }
    double noise_eve() const { return p_.snr_eve.noise_variance(p_.bor); }

private:
    ScenarioParams p_;
};

} // namespace trsec
