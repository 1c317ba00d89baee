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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "trsec/analytics.hpp"
#include "trsec/figures.hpp"
#include "trsec/harness.hpp"
#include "trsec/rxchain.hpp"
#include "trsec/scenario.hpp"
#include "trsec/secrecy_opt.hpp"
#include "trsec/txchain.hpp"

using namespace trsec;

namespace
{

struct Outcome
{
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok)
        {
            passed = false;
            detail << " [violated: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// 1. Bob SNR guaranteeing 0.75 and 2.2 bits against a noiseless MF Eve at U = 8.
void guaranteed_rate(Outcome &o)
{
    const auto t0 = std::chrono::steady_clock::now();
    OptimizeRequest req;
    req.deltas = {0.75, 2.2};
    req.bors = {8};
    req.decoders = {Decoder::MF};
    req.snr_eve = Snr::infinite();
    const Table t = optimize_table(req);
    const double elapsed = seconds_since(t0);
    const double low = t.number(0, "required_snr_bob_inf_eve_db");
    const double high = t.number(1, "required_snr_bob_inf_eve_db");
    o.detail << "0.75 bit -> " << fmt(low) << " dB, 2.2 bit -> " << fmt(high) << " dB, " << fmt(elapsed, 2) << " s";
    o.require(std::abs(low - 5.1) <= 0.3, "0.75 bit needs 5.1 +- 0.3 dB");
    o.require(std::abs(high - 9.9) <= 0.3, "2.2 bit needs 9.9 +- 0.3 dB");
    o.require(elapsed < 1.0, "runtime < 1 s");
}

ScenarioParams fig2_params(int trials)
{
    ScenarioParams p;
    p.bor = 4;
    p.snr_bob = Snr::from_db(10.0);
    p.snr_eve = Snr::from_db(10.0);
    p.n_trials = trials;
    p.rng_seed = 2024;
    return p;
}

// 2. Empirical SINRs against the closed forms.
void sinr_agreement(Outcome &o)
{
    const ScenarioConfig geometry(fig2_params(10000));
    const auto stats = collect_trial_stats(geometry, 0);
    double worst_bob = 0.0, worst_eve = 0.0;
    for (int k = 1; k <= 9; ++k)
    {
        ScenarioParams p = geometry.params();
        p.alpha = k / 10.0;
        const ScenarioConfig cfg(p);
        for (Decoder d : all_decoders)
        {
            const ResultRow r = aggregate_row(cfg, d, stats);
            worst_bob = std::max(worst_bob, std::abs(r.sinr_bob_emp / r.sinr_bob_analytic - 1.0));
            worst_eve = std::max(worst_eve, std::abs(r.sinr_eve_emp / r.sinr_eve_analytic - 1.0));
        }
    }
    o.detail << "worst relative error Bob " << fmt(worst_bob) << ", Eve " << fmt(worst_eve);
    o.require(worst_bob <= 0.05, "Bob within 5%");
    o.require(worst_eve <= 0.10, "Eve within 10%");
}

// 3. Eleven component powers against their closed-form expectations.
void component_powers(Outcome &o)
{
    ScenarioParams p = fig2_params(10000);
    p.alpha = 0.5;
    const ScenarioConfig cfg(p);
    std::map<std::string, double> sums;
    int used = 0;
    for (int i = 0; i < cfg.n_trials(); ++i)
    {
        const TrialRecord r = run_trial(cfg, i);
        if (r.degenerate)
            continue;
        ++used;
        sums["B1"] += r.powers.b1;
        sums["B2"] += r.powers.b2;
        for (Decoder d : all_decoders)
        {
            const std::string suffix = "-" + std::string(to_string(d));
            sums["E1" + suffix] += r.powers.e1[index_of(d)];
            sums["E2" + suffix] += r.powers.e2[index_of(d)];
            sums["E3" + suffix] += r.powers.e3[index_of(d)];
        }
    }
    const SinrModelInputs in{cfg.alpha(), cfg.bor(), cfg.noise_bob(), cfg.noise_eve()};
    double worst = 0.0;
    std::string worst_name;
    for (const auto &[name, sum] : sums)
    {
        const double expected = appendix_expectation(parse_component_term(name), in);
        const double err = std::abs(sum / used / expected - 1.0);
        if (err > worst)
        {
            worst = err;
            worst_name = name;
        }
    }
    const double e3_mf = sums["E3-MF"] / used;
    o.detail << sums.size() << " terms, worst " << worst_name << " at " << fmt(worst) << ", E3-MF " << fmt(e3_mf, 5)
             << " vs " << fmt((1.0 - cfg.alpha()) / (cfg.bor() + 1), 5);
    o.require(sums.size() == 11, "eleven terms");
    o.require(worst <= 0.05, "all within 5%");
}

// 4. Structural identities of the spreading and AN design.
void algebraic_invariants(Outcome &o)
{
    ScenarioParams p = fig2_params(10000);
    const ScenarioConfig cfg(p);
    const SpreadingMatrix s = trial_spreading(cfg);
    const Eigen::MatrixXd sd = s.dense();
    const double orth = (sd.transpose() * sd - Eigen::MatrixXd::Identity(s.n_symbols(), s.n_symbols())).cwiseAbs().maxCoeff();

    double off_diag = 0.0, leak = 0.0, roundtrip = 0.0;
    int degenerate = 0;
    for (int i = 0; i < cfg.n_trials(); ++i)
    {
        TrialDraw d;
        try
        {
            d = draw_trial(cfg, s, i);
        }
        catch (const DegenerateTrialError &)
        {
            ++degenerate;
            continue;
        }
        leak = std::max(leak, despread(d.h_bob.gains.cwiseProduct(d.w), s).cwiseAbs().maxCoeff());
        roundtrip = std::max(roundtrip, (despread(spread(d.symbols, s), s) - d.symbols).cwiseAbs().maxCoeff());
        if (i < 50)
        {
            Eigen::MatrixXcd g = sd.transpose().cast<cdouble>() * d.h_eve.gains.asDiagonal() * sd.cast<cdouble>();
            g.diagonal().setZero();
            off_diag = std::max(off_diag, g.cwiseAbs().maxCoeff());
        }
    }
    o.detail << "|S^H S - I| " << fmt(orth, 2) << ", off-diagonal " << fmt(off_diag, 2) << ", AN leakage "
             << fmt(leak, 2) << ", roundtrip " << fmt(roundtrip, 2) << " over " << cfg.n_trials() - degenerate
             << " realizations";
    o.require(orth <= 1e-12, "S^H S = I");
    o.require(off_diag <= 1e-12, "S^H D S diagonal");
    o.require(leak < 1e-10, "AN leakage < 1e-10");
    o.require(roundtrip <= 1e-12, "despread(spread(x)) = x");
    o.require(degenerate == 0, "no degenerate realizations");
}

// 5. Closed-form optimizers against brute force and inverses.
void optimality_oracles(Outcome &o)
{
    Rng rng = make_rng(derive_seed(5, SeedStream::Selftest));
    std::uniform_real_distribution<double> db_bob(5.0, 25.0), db_eve(-5.0, 25.0), unit(0.0, 1.0);
    const int bors[] = {2, 4, 8, 16};
    double grid_err = 0.0, inverse_err = 0.0;
    bool inf_equal = true;
    for (Decoder d : all_decoders)
    {
        int accepted = 0;
        while (accepted < 100)
        {
            const int u = bors[accepted % 4];
            const double nb = noise_variance_from_snr(db_to_linear(db_bob(rng)), u);
            const double ne = noise_variance_from_snr(db_to_linear(db_eve(rng)), u);
            double best = -1.0, arg = 0.0;
            for (int k = 0; k <= 10000; ++k)
            {
                const double sr = analytic_sr(d, {k / 1e4, u, nb, ne});
                if (sr > best)
                {
                    best = sr;
                    arg = k / 1e4;
                }
            }
            if (best <= 0.0)
                continue; // no secrecy anywhere: every alpha is a maximizer
            ++accepted;
            grid_err = std::max(grid_err, std::abs(alpha_opt(d, u, nb, ne).alpha - arg));

            const double delta = 3.0 * unit(rng);
            const double alpha = 0.02 + 0.96 * unit(rng);
            const double snr = required_snr_bob(d, delta, alpha, u, ne);
            inverse_err = std::max(inverse_err, std::abs(analytic_sr(d, {alpha, u, 1.0 / (u * snr), ne}) - delta));
        }
    }
    for (int u : bors)
        for (int k = 0; k <= 200; ++k)
            inf_equal = inf_equal && alpha_infinity(Decoder::SDS, k / 50.0, u) == alpha_infinity(Decoder::OC, k / 50.0, u);
    o.detail << "alpha_opt vs grid " << fmt(grid_err, 2) << ", SNR round trip " << fmt(inverse_err, 2)
             << ", alpha_inf SDS == OC " << (inf_equal ? "yes" : "no");
    o.require(grid_err <= 1e-3, "alpha_opt within 1e-3 of the grid argmax");
    o.require(inverse_err <= 1e-9, "round trip within 1e-9");
    o.require(inf_equal, "alpha_inf identical");
}

// 6. Shapes of the rate figures.
void figure_shapes(Outcome &o, const Table &fig2)
{
    // Fig. 2: rows come in (alpha, SDS/MF/OC) triples
    bool ordered = true, vanishes = true;
    for (std::size_t i = 0; i + 2 < fig2.rows.size(); i += 3)
    {
        const double alpha = fig2.number(i, "alpha");
        const double sds = fig2.number(i, "sr_empirical");
        const double mf = fig2.number(i + 1, "sr_empirical");
        const double oc = fig2.number(i + 2, "sr_empirical");
        if (alpha > 0.05 + 1e-12 && alpha < 0.95 - 1e-12)
            ordered = ordered && mf < sds && mf < oc;
        if (alpha == 0.0)
            vanishes = sds == 0.0 && mf == 0.0 && oc == 0.0;
    }
    o.require(ordered, "MF strictly below SDS and OC");
    o.require(vanishes, "all rates 0 at 1 - alpha = 1");

    // Fig. 4: monotone in the target rate and in the back-off rate
    FigureOptions fo;
    const Table fig4 = reproduce_figure(4, fo);
    std::map<std::pair<std::string, int>, std::map<double, double>> curves;
    for (std::size_t i = 0; i < fig4.rows.size(); ++i)
        curves[{fig4.text(i, "decoder"), static_cast<int>(fig4.number(i, "bor"))}][fig4.number(i, "delta")] =
            fig4.number(i, "required_snr_bob");
    bool up_in_delta = true, down_in_bor = true;
    for (const auto &[key, curve] : curves)
    {
        double prev = 0.0;
        for (const auto &[delta, snr] : curve)
        {
            up_in_delta = up_in_delta && snr > prev;
            prev = snr;
            const auto next = curves.find({key.first, key.second * 2});
            if (next != curves.end())
                down_in_bor = down_in_bor && next->second.at(delta) < snr;
        }
    }
    o.require(up_in_delta, "required SNR increasing in the target rate");
    o.require(down_in_bor, "required SNR decreasing in U");

    // Fig. 5: waterfilling helps on average and stays feasible
    fo.n_trials = 1000;
    fo.bors = {2, 4, 8};
    fo.waterfill_trials = 100;
    const Table fig5 = reproduce_figure(5, fo);
    double min_gain = 1e300, max_res = 0.0, min_conv = 1.0;
    for (std::size_t i = 0; i < fig5.rows.size(); ++i)
    {
        min_gain = std::min(min_gain, fig5.number(i, "waterfill_gain"));
        max_res = std::max(max_res, fig5.number(i, "waterfill_max_residual"));
        min_conv = std::min(min_conv, fig5.number(i, "waterfill_converged"));
    }
    o.require(fig5.rows.size() == 9, "nine (U, decoder) rows");
    o.require(min_gain > 0.0, "mean waterfill gain > 0");
    o.require(max_res <= 1e-6, "residuals <= 1e-6");

    o.detail << "Fig. 2 ordering " << (ordered ? "ok" : "broken") << ", Fig. 4 monotone "
             << (up_in_delta && down_in_bor ? "ok" : "broken") << ", Fig. 5 min gain " << fmt(min_gain)
             << " bit, max residual " << fmt(max_res, 2) << ", min converged fraction " << fmt(min_conv, 3);
}

// 7. The rate of the mean SINRs tracks the mean rate.
void tightness(Outcome &o, const Table &fig2)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < fig2.rows.size(); ++i)
        worst = std::max(worst, fig2.number(i, "tightness_gap"));
    o.detail << "worst gap " << fmt(worst) << " bit over " << fig2.rows.size() << " operating points";
    o.require(worst < 0.1, "gap < 0.1 bit");
}

} // namespace

int main()
{
    int failures = 0;
    auto run = [&](int id, const char *name, const std::function<void(Outcome &)> &fn) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            fn(o);
        }
        catch (const std::exception &e)
        {
            o.passed = false;
            o.detail << " exception: " << e.what();
        }
        std::printf("%s [%d] %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.str().c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    };

    FigureOptions fig2_opts;
    fig2_opts.n_trials = 1000;
    fig2_opts.seed = 2024;
    Table fig2;

    run(1, "guaranteed secrecy rate SNR", guaranteed_rate);
    run(2, "analytic vs Monte Carlo SINR", sinr_agreement);
    run(3, "component power oracles", component_powers);
    run(4, "algebraic invariants", algebraic_invariants);
    run(5, "optimality oracles", optimality_oracles);
    run(6, "figure shapes", [&](Outcome &o) {
        fig2 = reproduce_figure(2, fig2_opts);
        figure_shapes(o, fig2);
    });
    run(7, "ergodic rate tightness", [&](Outcome &o) {
        if (fig2.rows.empty())
            fig2 = reproduce_figure(2, fig2_opts);
        tightness(o, fig2);
    });

    std::printf("%s: %d of 7 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
