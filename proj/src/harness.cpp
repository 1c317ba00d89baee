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

#include "trsec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "trsec/analytics.hpp"

namespace trsec
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double mean_power(const CVector &v) { return v.squaredNorm() / static_cast<double>(v.size()); }

double ratio(double num, double den)
{
    if (den > 0.0)
        return num / den;
    return num > 0.0 ? inf : 0.0;
}

double block_sinr(const DecodeComponents &c) { return ratio(mean_power(c.data), mean_power(c.noise + c.an)); }

void check_trial_config(const ScenarioConfig &cfg)
{
    if (cfg.bor() < 2 && cfg.alpha() < 1.0)
        throw ParameterError("U = 1 leaves no room for AN; alpha must be 1");
}

ReceiverStats receiver_stats(const DecodeComponents &unit_data, const DecodeComponents &unit_an)
{
    ReceiverStats r;
    const double n = static_cast<double>(unit_data.data.size());
    r.data = mean_power(unit_data.data);
    r.noise = mean_power(unit_data.noise);
    r.an = mean_power(unit_an.an);
    r.cross = unit_an.an.dot(unit_data.noise).real() / n;
    return r;
}

struct ChainOutput
{
    DecodeComponents bob;
    std::array<DecodeComponents, 3> eve;
};

ChainOutput run_chain(const TrialDraw &d, const SpreadingMatrix &s, const TransmitFrame &frame, double noise_bob,
                      double noise_eve)
{
    const ReceivedBlock rx_b = apply_channel(frame.x_tr, d.h_bob, CVector(std::sqrt(noise_bob) * d.v_bob));
    const ReceivedBlock rx_e = apply_channel(frame.x_tr, d.h_eve, CVector(std::sqrt(noise_eve) * d.v_eve));
    ChainOutput out;
    out.bob = bob_components(frame, rx_b, s, d.h_bob);
    for (Decoder dec : all_decoders)
        out.eve[index_of(dec)] = eve_components(dec, frame, rx_e, s, d.h_bob, d.h_eve);
    return out;
}

CVector precode(const TrialDraw &d, const SpreadingMatrix &s) { return tr_precode(spread(d.symbols, s), d.h_bob); }

} // namespace

double ReceiverStats::interference_power(double alpha, double noise_var) const
{
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha));
    return noise_var * noise + beta * beta * an + 2.0 * std::sqrt(noise_var) * beta * cross;
}

double ReceiverStats::sinr(double alpha, double noise_var) const
{
    return ratio(data_power(alpha), interference_power(alpha, noise_var));
}

SpreadingMatrix trial_spreading(const ScenarioConfig &cfg)
{
    return build_spreading_matrix(cfg.n_symbols(), cfg.bor(), derive_seed(cfg.rng_seed(), SeedStream::Spreading));
}

TrialDraw draw_trial(const ScenarioConfig &cfg, const SpreadingMatrix &s, std::uint64_t trial_index)
{
    if (s.n_symbols() != cfg.n_symbols() || s.bor() != cfg.bor())
        throw ParameterError("draw_trial: spreading matrix does not match the configuration");
    Rng rng = make_rng(derive_seed(cfg.rng_seed(), SeedStream::Trial, trial_index));
    const int q = cfg.n_subcarriers();

    TrialDraw d;
    d.h_bob = sample_channel(q, rng);
    d.h_eve = sample_channel(q, rng);
    d.symbols = draw_symbols(cfg.n_symbols(), cfg.modulation_order(), rng);
    d.w = cfg.bor() >= 2 ? generate_an(d.h_bob, s, rng) : CVector::Zero(q);
    d.v_bob = complex_normal_vector(q, rng);
    d.v_eve = complex_normal_vector(q, rng);
    return d;
}

TrialStats trial_stats(const TrialDraw &d, const SpreadingMatrix &s)
{
    const CVector precoded = precode(d, s);
    const TransmitFrame data_only = assemble_transmit(d.symbols, precoded, d.w, 1.0);
    const TransmitFrame an_only = assemble_transmit(d.symbols, precoded, d.w, 0.0);
    // Unit noise variance: the noise components come out at unit scale.
    const ChainOutput a = run_chain(d, s, data_only, 1.0, 1.0);
    const ChainOutput b = run_chain(d, s, an_only, 1.0, 1.0);

    TrialStats st;
    st.bob = receiver_stats(a.bob, b.bob);
    for (Decoder dec : all_decoders)
        st.eve[index_of(dec)] = receiver_stats(a.eve[index_of(dec)], b.eve[index_of(dec)]);
    return st;
}

double trial_secrecy_rate(double sinr_bob, double sinr_eve)
{
    if (std::isinf(sinr_eve))
        return 0.0;
    if (std::isinf(sinr_bob))
        return inf;
    return (std::log1p(sinr_bob) - std::log1p(sinr_eve)) / std::log(2.0);
}

WaterfillTrial waterfill_trial(const TrialDraw &d, const SpreadingMatrix &s, double alpha, double noise_bob,
                               double noise_eve, int max_iters)
{
    WaterfillProblem p{d.h_bob, s, d.w, alpha};
    p.max_iters = max_iters;
    WaterfillTrial out;
    out.solution = waterfill(p);

    const CVector precoded = precode(d, s);
    const ChainOutput before = run_chain(d, s, assemble_transmit(d.symbols, precoded, d.w, alpha), noise_bob, noise_eve);
    const ChainOutput after =
        run_chain(d, s, assemble_transmit(d.symbols, precoded, d.w, out.solution.alpha_w), noise_bob, noise_eve);
    out.sinr_bob_before = block_sinr(before.bob);
    out.sinr_bob_after = block_sinr(after.bob);
    for (Decoder dec : all_decoders)
    {
        out.sinr_eve_before[index_of(dec)] = block_sinr(before.eve[index_of(dec)]);
        out.sinr_eve_after[index_of(dec)] = block_sinr(after.eve[index_of(dec)]);
    }
    return out;
}

TrialRecord run_trial(const ScenarioConfig &cfg, std::uint64_t trial_index, bool with_waterfill)
{
    check_trial_config(cfg);
    const SpreadingMatrix s = trial_spreading(cfg);

    TrialRecord rec;
    rec.trial_index = trial_index;
    try
    {
        const TrialDraw d = draw_trial(cfg, s, trial_index);
        const double alpha = cfg.alpha();
        const double nb = cfg.noise_bob();
        const double ne = cfg.noise_eve();

        const CVector precoded = precode(d, s);
        const TransmitFrame frame = assemble_transmit(d.symbols, precoded, d.w, alpha);
        const ReceivedBlock rx_b = apply_channel(frame.x_tr, d.h_bob, CVector(std::sqrt(nb) * d.v_bob));
        const ReceivedBlock rx_e = apply_channel(frame.x_tr, d.h_eve, CVector(std::sqrt(ne) * d.v_eve));

        const DecodeComponents bob = bob_components(frame, rx_b, s, d.h_bob);
        rec.sinr_bob = block_sinr(bob);
        rec.powers.b1 = mean_power(bob.data);
        rec.powers.b2 = mean_power(bob.noise);
        rec.powers.bob_an = mean_power(bob.an);
        for (Decoder dec : all_decoders)
        {
            const auto i = index_of(dec);
            const DecodeComponents eve = eve_components(dec, frame, rx_e, s, d.h_bob, d.h_eve);
            rec.sinr_eve[i] = block_sinr(eve);
            rec.powers.e1[i] = mean_power(eve.data);
            rec.powers.e2[i] = mean_power(eve.noise);
            rec.powers.e3[i] = mean_power(eve.an);
        }

        if (alpha > 0.0)
        {
            const DecodeResult bd = bob_decode(frame, rx_b, s, d.h_bob);
            rec.bob_max_error = (bd.symbols - d.symbols).cwiseAbs().maxCoeff();
            // Eve's ZF does not know alpha, so her estimate is centered on sqrt(alpha) x.
            const DecodeResult ed = eve_decode(cfg.decoder(), frame, rx_e, s, d.h_bob, d.h_eve);
            rec.eve_max_error = (ed.symbols - std::sqrt(alpha) * d.symbols).cwiseAbs().maxCoeff();
        }
        else
        {
            rec.bob_max_error = nan;
            rec.eve_max_error = nan;
        }

        if (with_waterfill && alpha > 0.0 && alpha < 1.0)
            rec.waterfill = waterfill_trial(d, s, alpha, nb, ne);
    }
    catch (const DegenerateTrialError &)
    {
        rec = TrialRecord{};
        rec.trial_index = trial_index;
        rec.degenerate = true;
    }
    return rec;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::Alpha:
        return "alpha";
    case SweepVariable::Bor:
        return "bor";
    case SweepVariable::SnrBobDb:
        return "snr_bob_db";
    case SweepVariable::SnrEveDb:
        return "snr_eve_db";
    }
    return "?";
}

SweepVariable parse_sweep_variable(std::string_view name)
{
    for (SweepVariable v : {SweepVariable::Alpha, SweepVariable::Bor, SweepVariable::SnrBobDb, SweepVariable::SnrEveDb})
        if (name == to_string(v))
            return v;
    if (name == "snr_bob")
        return SweepVariable::SnrBobDb;
    if (name == "snr_eve")
        return SweepVariable::SnrEveDb;
    throw ParameterError("unknown sweep variable '" + std::string(name) + "'");
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &fn)
{
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
    if (workers == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
    {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = n;
                }
            }
        });
    }
    for (auto &th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<std::optional<TrialStats>> collect_trial_stats(const ScenarioConfig &cfg, int threads)
{
    check_trial_config(cfg);
    const SpreadingMatrix s = trial_spreading(cfg);
    std::vector<std::optional<TrialStats>> out(static_cast<std::size_t>(cfg.n_trials()));
    parallel_for(out.size(), threads, [&](std::size_t i) {
        try
        {
            out[i] = trial_stats(draw_trial(cfg, s, i), s);
        }
        catch (const DegenerateTrialError &)
        {
            out[i].reset();
        }
    });
    return out;
}

ResultRow aggregate_row(const ScenarioConfig &cfg, Decoder decoder,
                        const std::vector<std::optional<TrialStats>> &stats)
{
    if (cfg.snr_bob().is_infinite())
        throw ParameterError("empirical secrecy rates need a finite Bob SNR");

    const double alpha = cfg.alpha();
    const double nb = cfg.noise_bob();
    const double ne = cfg.noise_eve();

    ResultRow row;
    row.decoder = decoder;
    row.bor = cfg.bor();
    row.alpha = alpha;
    row.snr_bob_db = cfg.snr_bob().db();
    row.snr_eve_db = cfg.snr_eve().db();

    double data_b = 0.0, int_b = 0.0, data_e = 0.0, int_e = 0.0;
    double sum_gb = 0.0, sum_ge = 0.0, sum_sr = 0.0, sum_sr_clamped = 0.0;
    int used = 0;
    for (const auto &st : stats)
    {
        if (!st)
        {
            ++row.degenerate_count;
            continue;
        }
        const ReceiverStats &b = st->bob;
        const ReceiverStats &e = st->eve[index_of(decoder)];
        data_b += b.data_power(alpha);
        int_b += b.interference_power(alpha, nb);
        data_e += e.data_power(alpha);
        int_e += e.interference_power(alpha, ne);
        const double gb = b.sinr(alpha, nb);
        const double ge = e.sinr(alpha, ne);
        sum_gb += gb;
        sum_ge += ge;
        const double sr = trial_secrecy_rate(gb, ge);
        sum_sr += sr;
        sum_sr_clamped += std::max(0.0, sr);
        ++used;
    }
    row.n_trials = used;

    if (used == 0)
    {
        row.sinr_bob_emp = row.sinr_eve_emp = row.sr_empirical = row.sr_empirical_unclamped = row.sr_ergodic = nan;
        row.sr_plugin = row.tightness_gap = nan;
    }
    else
    {
        row.sinr_bob_emp = ratio(data_b, int_b);
        row.sinr_eve_emp = ratio(data_e, int_e);
        row.sr_empirical = sum_sr_clamped / used;
        row.sr_empirical_unclamped = sum_sr / used;
        row.sr_ergodic = std::max(0.0, row.sr_empirical_unclamped);
        row.sr_plugin = std::max(0.0, trial_secrecy_rate(sum_gb / used, sum_ge / used));
        row.tightness_gap = std::abs(row.sr_ergodic - row.sr_plugin);
    }

    const SinrModelInputs in{alpha, cfg.bor(), nb, ne};
    row.sinr_bob_analytic = sinr_bob(in);
    row.sinr_eve_analytic = sinr_eve(decoder, in);
    row.sr_analytic = analytic_sr(decoder, in);
    return row;
}

std::vector<WaterfillTrial> waterfill_batch(const ScenarioConfig &cfg,
                                            const std::vector<std::optional<TrialStats>> &stats,
                                            int waterfill_trials, int threads, int max_iters)
{
    const double alpha = cfg.alpha();
    if (!(alpha > 0.0 && alpha < 1.0) || cfg.bor() < 2 || waterfill_trials < 1)
        return {};

    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < stats.size() && picks.size() < static_cast<std::size_t>(waterfill_trials); ++i)
        if (stats[i])
            picks.push_back(i);

    const SpreadingMatrix s = trial_spreading(cfg);
    std::vector<WaterfillTrial> results(picks.size());
    parallel_for(picks.size(), threads, [&](std::size_t k) {
        results[k] = waterfill_trial(draw_trial(cfg, s, picks[k]), s, alpha, cfg.noise_bob(), cfg.noise_eve(),
                                     max_iters);
    });
    return results;
}

void attach_waterfill(ResultRow &row, Decoder decoder, const std::vector<WaterfillTrial> &batch)
{
    if (batch.empty())
        return;
    const auto i = index_of(decoder);
    double before = 0.0, after = 0.0, obj = 0.0, residual = 0.0, converged = 0.0;
    for (const auto &r : batch)
    {
        before += std::max(0.0, trial_secrecy_rate(r.sinr_bob_before, r.sinr_eve_before[i]));
        after += std::max(0.0, trial_secrecy_rate(r.sinr_bob_after, r.sinr_eve_after[i]));
        obj += r.solution.objective_gain;
        for (double v : r.solution.constraint_residuals)
            residual = std::max(residual, v);
        converged += r.solution.converged ? 1.0 : 0.0;
    }
    const double n = static_cast<double>(batch.size());
    row.waterfill_trials = static_cast<int>(batch.size());
    row.sr_waterfill_before = before / n;
    row.sr_waterfill_after = after / n;
    row.waterfill_gain = (after - before) / n;
    row.waterfill_objective_gain = obj / n;
    row.waterfill_max_residual = residual;
    row.waterfill_converged = converged / n;
}

std::vector<ResultRow> run_sweep(const SweepSpec &spec)
{
    if (spec.values.empty())
        throw ParameterError("sweep needs at least one value");
    if (spec.decoders.empty())
        throw ParameterError("sweep needs at least one decoder");

    std::vector<ResultRow> rows;
    std::vector<std::optional<TrialStats>> stats;
    std::optional<int> stats_bor;
    for (double v : spec.values)
    {
        ScenarioParams p = spec.base;
        switch (spec.variable)
        {
        case SweepVariable::Alpha:
            p.alpha = v;
            break;
        case SweepVariable::Bor:
            if (v != std::floor(v) || v < 1.0)
                throw ParameterError("bor sweep values must be positive integers");
            p.bor = static_cast<int>(v);
            p.n_subcarriers.reset();
            break;
        case SweepVariable::SnrBobDb:
            p.snr_bob = Snr::from_db(v);
            break;
        case SweepVariable::SnrEveDb:
            p.snr_eve = Snr::from_db(v);
            break;
        }
        const ScenarioConfig cfg(p);
        // Realizations depend only on the geometry, so they are shared across
        // alpha and SNR values.
        if (!stats_bor || *stats_bor != cfg.bor())
        {
            stats = collect_trial_stats(cfg, spec.threads);
            stats_bor = cfg.bor();
        }
        std::vector<WaterfillTrial> batch;
        if (spec.waterfill)
            batch = waterfill_batch(cfg, stats, spec.waterfill_trials, spec.threads, spec.waterfill_max_iters);
        for (Decoder dec : spec.decoders)
        {
            ResultRow row = aggregate_row(cfg, dec, stats);
            row.variable = std::string(to_string(spec.variable));
            row.value = v;
            attach_waterfill(row, dec, batch);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace trsec
