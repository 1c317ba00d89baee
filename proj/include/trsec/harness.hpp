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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trsec/channel.hpp"
#include "trsec/common.hpp"
#include "trsec/rxchain.hpp"
#include "trsec/scenario.hpp"
#include "trsec/txchain.hpp"
#include "trsec/waterfill.hpp"

namespace trsec
{

// Everything random in one trial, drawn in a fixed order that does not depend
// on alpha or the SNRs, so sweeps over those reuse the same realizations.
struct TrialDraw
{
    DiagonalChannel h_bob;
    DiagonalChannel h_eve;
    CVector symbols;
    CVector w;       // zero when U = 1
    CVector v_bob;   // unit-variance receiver noise
    CVector v_eve;
};

// Throws DegenerateTrialError when Bob's channel leaves no usable AN null space.
TrialDraw draw_trial(const ScenarioConfig &cfg, const SpreadingMatrix &s, std::uint64_t trial_index);

SpreadingMatrix trial_spreading(const ScenarioConfig &cfg);

// Block-averaged powers of one receiver's unit-scale components:
// data at alpha = 1, AN at alpha = 0, noise at variance 1, plus the
// noise/AN cross term. Any (alpha, noise variance) follows in closed form.
struct ReceiverStats
{
    double data = 0.0;
    double an = 0.0;
    double noise = 0.0;
    double cross = 0.0; // mean Re(noise * conj(an))

    double data_power(double alpha) const { return alpha * data; }
    double interference_power(double alpha, double noise_var) const;
    double sinr(double alpha, double noise_var) const;
};

struct TrialStats
{
    ReceiverStats bob;
    std::array<ReceiverStats, 3> eve; // indexed by index_of(Decoder)
};

TrialStats trial_stats(const TrialDraw &draw, const SpreadingMatrix &s);

// Block means of |component|^2 at the trial's actual alpha and noise levels.
struct ComponentPowers
{
    double b1 = 0.0, b2 = 0.0, bob_an = 0.0;
    std::array<double, 3> e1{}, e2{}, e3{};
};

struct WaterfillTrial
{
    WaterfillSolution solution;
    double sinr_bob_before = 0.0, sinr_bob_after = 0.0;
    std::array<double, 3> sinr_eve_before{}, sinr_eve_after{};
};

struct TrialRecord
{
    std::uint64_t trial_index = 0;
    bool degenerate = false;
    double sinr_bob = 0.0;
    std::array<double, 3> sinr_eve{};
    ComponentPowers powers;
    double bob_max_error = 0.0; // max |x_hat - x| after ZF; NaN when alpha = 0
    double eve_max_error = 0.0; // for cfg.decoder, same convention
    std::optional<WaterfillTrial> waterfill;
};

// One full transmit -> channel -> receive pass through the signal chain.
TrialRecord run_trial(const ScenarioConfig &cfg, std::uint64_t trial_index, bool with_waterfill = false);

// Waterfill at a uniform start alpha, then both splits through the chain with
// the same channel, AN and noise realizations.
WaterfillTrial waterfill_trial(const TrialDraw &draw, const SpreadingMatrix &s, double alpha, double noise_bob,
                               double noise_eve, int max_iters = 2500);

// Per-trial secrecy rate in bits; unclamped, +inf when only Bob is noiseless.
double trial_secrecy_rate(double sinr_bob, double sinr_eve);

enum class SweepVariable
{
    Alpha,
    Bor,
    SnrBobDb,
    SnrEveDb,
};

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

struct SweepSpec
{
    ScenarioParams base;
    SweepVariable variable = SweepVariable::Alpha;
    std::vector<double> values;
    std::vector<Decoder> decoders{Decoder::SDS, Decoder::MF, Decoder::OC};
    bool waterfill = false;
    int waterfill_trials = 100;
    int waterfill_max_iters = 2500;
    int threads = 0; // 0: hardware concurrency
};

struct ResultRow
{
    std::string variable;
    double value = 0.0;
    Decoder decoder = Decoder::SDS;
    int bor = 0;
    double alpha = 0.0;
    double snr_bob_db = 0.0;
    double snr_eve_db = 0.0;
    int n_trials = 0;
    int degenerate_count = 0;
    double sinr_bob_emp = 0.0;
    double sinr_bob_analytic = 0.0;
    double sinr_eve_emp = 0.0;
    double sinr_eve_analytic = 0.0;
    double sr_empirical = 0.0;           // mean of per-trial rates clamped at 0
    double sr_empirical_unclamped = 0.0;
    double sr_ergodic = 0.0;             // mean per-trial rate, clamped after averaging
    double sr_plugin = 0.0;              // rate of the mean SINRs, clamped at 0
    double sr_analytic = 0.0;
    double tightness_gap = 0.0;          // |sr_ergodic - sr_plugin|
    std::optional<double> waterfill_gain; // mean paired rate gain over the waterfill subsample
    double sr_waterfill_before = 0.0;
    double sr_waterfill_after = 0.0;
    int waterfill_trials = 0;
    double waterfill_objective_gain = 0.0;
    double waterfill_max_residual = 0.0;
    double waterfill_converged = 0.0; // fraction
};

std::vector<ResultRow> run_sweep(const SweepSpec &spec);

// Statistics for n_trials trials of one configuration; degenerate trials are
// left as std::nullopt.
std::vector<std::optional<TrialStats>> collect_trial_stats(const ScenarioConfig &cfg, int threads);

// Aggregate one row from precomputed trial statistics.
ResultRow aggregate_row(const ScenarioConfig &cfg, Decoder decoder,
                        const std::vector<std::optional<TrialStats>> &stats);

// Waterfill solves on the first waterfill_trials non-degenerate trials at
// cfg.alpha; empty when 0 < alpha < 1 does not hold or U = 1.
std::vector<WaterfillTrial> waterfill_batch(const ScenarioConfig &cfg,
                                            const std::vector<std::optional<TrialStats>> &stats,
                                            int waterfill_trials, int threads, int max_iters = 2500);

// Fills the waterfill columns of a row from a batch.
void attach_waterfill(ResultRow &row, Decoder decoder, const std::vector<WaterfillTrial> &batch);

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &fn);

} // namespace trsec
