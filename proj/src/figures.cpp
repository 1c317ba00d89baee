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

#include "trsec/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trsec/analytics.hpp"
#include "trsec/harness.hpp"
#include "trsec/secrecy_opt.hpp"

namespace trsec
{

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

long long as_int(int v) { return static_cast<long long>(v); }
Cell dec_cell(Decoder d) { return std::string(to_string(d)); }

ScenarioParams base_params(const FigureOptions &opt, int bor, const Snr &snr_bob, const Snr &snr_eve)
{
    ScenarioParams p;
    p.n_symbols = opt.n_symbols;
    p.bor = bor;
    p.snr_bob = snr_bob;
    p.snr_eve = snr_eve;
    p.n_trials = opt.n_trials;
    p.rng_seed = opt.seed;
    return p;
}

std::vector<int> bors_or(const FigureOptions &opt, std::vector<int> fallback)
{
    return opt.bors.empty() ? fallback : opt.bors;
}

Table figure2(const FigureOptions &opt)
{
    SweepSpec spec;
    spec.base = base_params(opt, opt.bors.empty() ? 4 : opt.bors.front(), opt.snr_bob.value_or(Snr::from_db(10.0)),
                            opt.snr_eve.value_or(Snr::from_db(10.0)));
    spec.variable = SweepVariable::Alpha;
    spec.values = figure2_alphas();
    spec.decoders = opt.decoders;
    spec.threads = opt.threads;
    const auto rows = run_sweep(spec);

    Table t = result_table(rows);
    t.columns.insert(t.columns.begin() + 2, "one_minus_alpha");
    for (std::size_t i = 0; i < rows.size(); ++i)
        t.rows[i].insert(t.rows[i].begin() + 2, 1.0 - rows[i].alpha);
    return t;
}

Table figure3(const FigureOptions &opt)
{
    const Snr sb = opt.snr_bob.value_or(Snr::from_db(15.0));
    const Snr se = opt.snr_eve.value_or(Snr::from_db(15.0));

    Table t;
    t.columns = {"bor",
                 "decoder",
                 "snr_bob_db",
                 "snr_eve_db",
                 "n_trials",
                 "alpha_opt_analytic",
                 "alpha_opt_clamped",
                 "alpha_opt_empirical",
                 "sr_analytic_at_alpha_opt",
                 "sr_empirical_at_alpha_opt",
                 "sr_empirical_max",
                 "sr_ratio"};

    std::vector<double> grid;
    for (int k = 0; k <= 100; ++k)
        grid.push_back(k / 100.0);

    for (int u : bors_or(opt, {2, 4, 8, 16}))
    {
        const ScenarioConfig geometry(base_params(opt, u, sb, se));
        const auto stats = collect_trial_stats(geometry, opt.threads);
        for (Decoder dec : opt.decoders)
        {
            const AlphaOpt a = alpha_opt(dec, u, geometry.noise_bob(), geometry.noise_eve());

            double best_alpha = 0.0;
            double best_sr = -1.0;
            for (double alpha : grid)
            {
                ScenarioParams p = geometry.params();
                p.alpha = alpha;
                const double sr = aggregate_row(ScenarioConfig(p), dec, stats).sr_empirical;
                if (sr > best_sr)
                {
                    best_sr = sr;
                    best_alpha = alpha;
                }
            }

            ScenarioParams p = geometry.params();
            p.alpha = a.alpha;
            const ResultRow at_opt = aggregate_row(ScenarioConfig(p), dec, stats);
            t.add_row({as_int(u), dec_cell(dec), sb.db(), se.db(), as_int(at_opt.n_trials), a.alpha,
                       as_int(a.clamped ? 1 : 0), best_alpha, at_opt.sr_analytic, at_opt.sr_empirical, best_sr,
                       best_sr > 0.0 ? at_opt.sr_empirical / best_sr : nan});
        }
    }
    return t;
}

Table figure4(const FigureOptions &opt)
{
    Table t;
    t.columns = {"bor", "decoder", "delta", "alpha_inf", "one_minus_alpha_inf", "required_snr_bob", "required_snr_bob_db"};
    for (int u : bors_or(opt, {2, 4, 8, 16}))
        for (Decoder dec : opt.decoders)
            for (int k = 1; k <= 60; ++k)
            {
                const double delta = k / 20.0;
                const double a = alpha_infinity(dec, delta, u);
                const double snr = required_snr_infinite_eve(dec, delta, u);
                t.add_row({as_int(u), dec_cell(dec), delta, a, 1.0 - a, snr, linear_to_db(snr)});
            }
    return t;
}

Table figure5(const FigureOptions &opt)
{
    const Snr sb = opt.snr_bob.value_or(Snr::from_db(15.0));
    const Snr se = opt.snr_eve.value_or(Snr::from_db(15.0));

    Table t;
    t.columns = {"bor",
                 "decoder",
                 "alpha_opt",
                 "n_trials",
                 "sr_empirical",
                 "waterfill_trials",
                 "sr_before",
                 "sr_after",
                 "waterfill_gain",
                 "waterfill_objective_gain",
                 "waterfill_max_residual",
                 "waterfill_converged"};

    for (int u : bors_or(opt, {2, 4, 8, 16}))
    {
        const ScenarioConfig geometry(base_params(opt, u, sb, se));
        const auto stats = collect_trial_stats(geometry, opt.threads);
        for (Decoder dec : opt.decoders)
        {
            ScenarioParams p = geometry.params();
            p.alpha = alpha_opt(dec, u, geometry.noise_bob(), geometry.noise_eve()).alpha;
            const ScenarioConfig cfg(p);
            ResultRow row = aggregate_row(cfg, dec, stats);
            attach_waterfill(row, dec, waterfill_batch(cfg, stats, opt.waterfill_trials, opt.threads));
            const bool wf = row.waterfill_gain.has_value();
            t.add_row({as_int(u), dec_cell(dec), p.alpha, as_int(row.n_trials), row.sr_empirical,
                       as_int(row.waterfill_trials), wf ? row.sr_waterfill_before : nan,
                       wf ? row.sr_waterfill_after : nan, wf ? *row.waterfill_gain : nan,
                       wf ? row.waterfill_objective_gain : nan, wf ? row.waterfill_max_residual : nan,
                       wf ? row.waterfill_converged : nan});
        }
    }
    return t;
}

} // namespace

std::vector<double> figure2_alphas()
{
    std::vector<double> out;
    for (int k = 0; k <= 20; ++k)
        out.push_back((20 - k) / 20.0);
    return out;
}

Table reproduce_figure(int id, const FigureOptions &opt)
{
    switch (id)
    {
    case 2:
        return figure2(opt);
    case 3:
        return figure3(opt);
    case 4:
        return figure4(opt);
    case 5:
        return figure5(opt);
    default:
        throw ParameterError("unknown figure " + std::to_string(id) + " (expected 2, 3, 4 or 5)");
    }
}

Table optimize_table(const OptimizeRequest &req)
{
    Table t;
    t.columns = {"decoder",
                 "bor",
                 "delta",
                 "snr_bob_db",
                 "snr_eve_db",
                 "alpha_opt",
                 "alpha_opt_clamped",
                 "sr_analytic_at_alpha_opt",
                 "required_snr_bob_db_at_alpha_opt",
                 "alpha_inf",
                 "one_minus_alpha_inf",
                 "required_snr_bob_inf_eve",
                 "required_snr_bob_inf_eve_db"};
    for (Decoder dec : req.decoders)
        for (int u : req.bors)
        {
            const double nb = req.snr_bob.noise_variance(u);
            const double ne = req.snr_eve.noise_variance(u);
            const AlphaOpt a = alpha_opt(dec, u, nb, ne);
            const double sr = req.snr_bob.is_infinite() ? nan : analytic_sr(dec, SinrModelInputs{a.alpha, u, nb, ne});
            for (double delta : req.deltas)
            {
                const double at_opt = (a.alpha > 0.0 && a.alpha < 1.0)
                                          ? linear_to_db(required_snr_bob(dec, delta, a.alpha, u, ne))
                                          : nan;
                const double ainf = alpha_infinity(dec, delta, u);
                const double snr = required_snr_infinite_eve(dec, delta, u);
                t.add_row({dec_cell(dec), as_int(u), delta, req.snr_bob.db(), req.snr_eve.db(), a.alpha,
                           as_int(a.clamped ? 1 : 0), sr, at_opt, ainf, 1.0 - ainf, snr, linear_to_db(snr)});
            }
        }
    return t;
}

} // namespace trsec
