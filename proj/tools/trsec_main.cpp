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

// Command-line front end: simulate, sweep, optimize, reproduce-figure, selftest.

#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trsec/figures.hpp"
#include "trsec/harness.hpp"
#include "trsec/scenario.hpp"
#include "trsec/selftest.hpp"
#include "trsec/table.hpp"

namespace
{

using namespace trsec;

struct Options
{
    int n_symbols = 64;
    int bor = 4;
    double alpha = 0.5;
    std::string snr_bob = "10";
    std::string snr_eve = "10";
    std::string decoder = "sds";
    int trials = 1000;
    std::uint64_t seed = 1;
    bool waterfill = false;
    int waterfill_trials = 100;
    int waterfill_max_iters = 2500;
    std::string out;
    std::string format = "csv";
    int threads = 0;
    bool strict = false;

    // sweep
    std::string variable = "alpha";
    std::string grid;
    std::string decoders = "sds,mf,oc";

    // optimize
    std::vector<double> deltas{0.75, 2.2};
    std::vector<int> bors;

    // reproduce-figure
    int figure = 0;

    // selftest
    int realizations = 200;
};

void add_scenario_options(CLI::App *app, Options &o)
{
    app->add_option("--n-symbols", o.n_symbols, "data symbols per OFDM block (N)")->capture_default_str();
    app->add_option("--bor", o.bor, "back-off rate U, subcarriers per symbol")->capture_default_str();
    app->add_option("--alpha", o.alpha, "fraction of transmit energy on data")->capture_default_str();
    app->add_option("--snr-bob-db", o.snr_bob, "Bob SNR in dB")->capture_default_str();
    app->add_option("--snr-eve-db", o.snr_eve, "Eve SNR in dB, or inf")->capture_default_str();
    app->add_option("--decoder", o.decoder, "Eve decoder: sds, mf or oc")->capture_default_str();
}

void add_run_options(CLI::App *app, Options &o)
{
    app->add_option("--trials", o.trials, "Monte Carlo trials")->capture_default_str();
    app->add_option("--seed", o.seed, "master seed")->capture_default_str();
    app->add_option("--threads", o.threads, "worker threads, 0 for all cores")->capture_default_str();
}

void add_output_options(CLI::App *app, Options &o)
{
    app->add_option("--out", o.out, "output file (default: stdout)");
    app->add_option("--format", o.format, "csv or json")->capture_default_str();
}

void add_waterfill_options(CLI::App *app, Options &o)
{
    app->add_flag("--waterfill", o.waterfill, "run per-realization waterfilling");
    app->add_option("--waterfill-trials", o.waterfill_trials, "trials that get a waterfill solve")
        ->capture_default_str();
    app->add_option("--waterfill-max-iters", o.waterfill_max_iters, "iteration cap per waterfill solve")
        ->capture_default_str();
    app->add_flag("--strict", o.strict, "exit with status 2 when a waterfill solve does not converge");
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

double parse_number(const std::string &s)
{
    if (s == "inf" || s == "+inf")
        return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(s, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw ParameterError("cannot parse number '" + s + "'");
    return v;
}

// "a,b,c" or "start:stop:step"
std::vector<double> parse_grid(const std::string &text)
{
    if (text.find(':') != std::string::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw ParameterError("range grid must be start:stop:step");
        const double a = parse_number(parts[0]), b = parse_number(parts[1]), step = parse_number(parts[2]);
        if (!(step > 0.0) || b < a)
            throw ParameterError("range grid needs step > 0 and stop >= start");
        std::vector<double> out;
        const long count = std::lround(std::floor((b - a) / step + 1e-9));
        for (long k = 0; k <= count; ++k)
            out.push_back(a + k * step);
        return out;
    }
    std::vector<double> out;
    for (const auto &p : split(text, ','))
        out.push_back(parse_number(p));
    if (out.empty())
        throw ParameterError("empty grid");
    return out;
}

std::vector<Decoder> parse_decoders(const std::string &text)
{
    std::vector<Decoder> out;
    for (const auto &p : split(text, ','))
        out.push_back(parse_decoder(p));
    if (out.empty())
        throw ParameterError("no decoders given");
    return out;
}

ScenarioParams scenario_from(const Options &o)
{
    ScenarioParams p;
    p.n_symbols = o.n_symbols;
    p.bor = o.bor;
    p.alpha = o.alpha;
    p.snr_bob = Snr::parse_db(o.snr_bob);
    p.snr_eve = Snr::parse_db(o.snr_eve);
    p.decoder = parse_decoder(o.decoder);
    p.n_trials = o.trials;
    p.rng_seed = o.seed;
    return p;
}

void emit(const Table &t, const Options &o)
{
    const OutputFormat format = parse_output_format(o.format);
    if (o.out.empty())
    {
        write_table(std::cout, t, format);
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw ParameterError("cannot open '" + o.out + "' for writing");
    write_table(f, t, format);
}

void enforce_strict(const std::vector<ResultRow> &rows, const Options &o)
{
    if (!o.strict)
        return;
    for (const auto &r : rows)
        if (r.waterfill_gain && r.waterfill_converged < 1.0)
            throw NumericalError("waterfill did not converge on every trial (strict mode)");
}

// CLI11 ignores config files registered on subcommands, so apply them here.
// Values given on the command line take precedence.
void apply_config(CLI::App *sub, const std::string &path)
{
    if (path.empty())
        return;
    std::ifstream in(path);
    if (!in)
        throw CLI::FileError::Missing(path);
    CLI::ConfigTOML reader;
    for (const auto &item : reader.from_config(in))
    {
        if (item.name == "++" || item.name == "--")
            continue; // section open and close markers
        const bool scoped = item.parents.empty() || (item.parents.size() == 1 && item.parents[0] == sub->get_name());
        CLI::Option *opt = scoped ? sub->get_option_no_throw("--" + item.name) : nullptr;
        if (!opt || item.name == "config")
            throw CLI::ConfigError::Extras(item.fullname());
        if (opt->count() > 0)
            continue;
        opt->add_result(item.inputs);
        opt->run_callback();
    }
}

int run_simulate(const Options &o)
{
    SweepSpec spec;
    spec.base = scenario_from(o);
    ScenarioConfig check(spec.base);
    spec.variable = SweepVariable::Alpha;
    spec.values = {o.alpha};
    spec.decoders = {check.decoder()};
    spec.waterfill = o.waterfill;
    spec.waterfill_trials = o.waterfill_trials;
    spec.waterfill_max_iters = o.waterfill_max_iters;
    spec.threads = o.threads;
    const auto rows = run_sweep(spec);
    enforce_strict(rows, o);
    emit(result_table(rows), o);
    return 0;
}

int run_sweep_cmd(const Options &o)
{
    SweepSpec spec;
    spec.base = scenario_from(o);
    spec.variable = parse_sweep_variable(o.variable);
    if (o.grid.empty())
        throw ParameterError("sweep needs --grid");
    spec.values = parse_grid(o.grid);
    spec.decoders = parse_decoders(o.decoders);
    spec.waterfill = o.waterfill;
    spec.waterfill_trials = o.waterfill_trials;
    spec.waterfill_max_iters = o.waterfill_max_iters;
    spec.threads = o.threads;
    const auto rows = run_sweep(spec);
    enforce_strict(rows, o);
    emit(result_table(rows), o);
    return 0;
}

int run_optimize(const Options &o)
{
    OptimizeRequest req;
    req.deltas = o.deltas;
    req.bors = o.bors.empty() ? std::vector<int>{o.bor} : o.bors;
    req.decoders = parse_decoders(o.decoders);
    req.snr_bob = Snr::parse_db(o.snr_bob);
    req.snr_eve = Snr::parse_db(o.snr_eve);
    emit(optimize_table(req), o);
    return 0;
}

int run_figure(const Options &o, const CLI::App *sub)
{
    FigureOptions f;
    f.n_trials = o.trials;
    f.seed = o.seed;
    f.n_symbols = o.n_symbols;
    f.bors = o.bors;
    f.decoders = parse_decoders(o.decoders);
    f.waterfill_trials = o.waterfill_trials;
    f.threads = o.threads;
    if (sub->count("--snr-bob-db"))
        f.snr_bob = Snr::parse_db(o.snr_bob);
    if (sub->count("--snr-eve-db"))
        f.snr_eve = Snr::parse_db(o.snr_eve);
    const Table t = reproduce_figure(o.figure, f);
    if (o.strict && o.figure == 5)
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (t.number(i, "waterfill_converged") < 1.0)
                throw NumericalError("waterfill did not converge on every trial (strict mode)");
    emit(t, o);
    return 0;
}

int run_selftest_cmd(const Options &o)
{
    const auto checks = run_selftest(o.seed, o.realizations);
    int failed = 0;
    for (const auto &c : checks)
    {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        failed += c.passed ? 0 : 1;
    }
    std::cout << (failed ? "selftest failed" : "selftest passed") << '\n';
    return failed ? 2 : 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"trsec: secrecy simulator for frequency-domain time-reversal OFDM with artificial noise"};
    app.require_subcommand(1);
    Options o;

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo run of a single configuration");
    add_scenario_options(simulate, o);
    add_run_options(simulate, o);
    add_output_options(simulate, o);
    add_waterfill_options(simulate, o);
    std::string simulate_config;
    simulate->add_option("--config", simulate_config, "TOML/INI file with option values");

    auto *sweep = app.add_subcommand("sweep", "Monte Carlo sweep over one parameter");
    add_scenario_options(sweep, o);
    add_run_options(sweep, o);
    add_output_options(sweep, o);
    add_waterfill_options(sweep, o);
    sweep->add_option("--variable", o.variable, "alpha, bor, snr_bob_db or snr_eve_db")->capture_default_str();
    sweep->add_option("--grid", o.grid, "values as a,b,c or start:stop:step");
    sweep->add_option("--decoders", o.decoders, "comma-separated Eve decoders")->capture_default_str();
    std::string sweep_config;
    sweep->add_option("--config", sweep_config, "TOML/INI file with option values");

    auto *optimize = app.add_subcommand("optimize", "closed-form power split and required SNR tables");
    optimize->add_option("--delta", o.deltas, "target secrecy rates in bits")->delimiter(',')->capture_default_str();
    optimize->add_option("--bors", o.bors, "back-off rates (default: --bor)")->delimiter(',');
    optimize->add_option("--bor", o.bor, "back-off rate")->capture_default_str();
    optimize->add_option("--snr-bob-db", o.snr_bob, "Bob SNR in dB for alpha_opt")->capture_default_str();
    optimize->add_option("--snr-eve-db", o.snr_eve, "Eve SNR in dB, or inf")->capture_default_str();
    optimize->add_option("--decoders", o.decoders, "comma-separated Eve decoders")->capture_default_str();
    add_output_options(optimize, o);

    auto *figure = app.add_subcommand("reproduce-figure", "regenerate the data of a results figure");
    figure->add_option("id", o.figure, "figure number: 2, 3, 4 or 5")->required();
    add_run_options(figure, o);
    add_output_options(figure, o);
    figure->add_option("--n-symbols", o.n_symbols, "data symbols per OFDM block")->capture_default_str();
    figure->add_option("--bors", o.bors, "back-off rates (figure default when omitted)")->delimiter(',');
    figure->add_option("--snr-bob-db", o.snr_bob, "override Bob SNR in dB");
    figure->add_option("--snr-eve-db", o.snr_eve, "override Eve SNR in dB, or inf");
    figure->add_option("--decoders", o.decoders, "comma-separated Eve decoders")->capture_default_str();
    figure->add_option("--waterfill-trials", o.waterfill_trials, "trials that get a waterfill solve")
        ->capture_default_str();
    figure->add_flag("--strict", o.strict, "exit with status 2 when a waterfill solve does not converge");

    auto *selftest = app.add_subcommand("selftest", "run the invariant checks");
    selftest->add_option("--seed", o.seed, "master seed")->capture_default_str();
    selftest->add_option("--realizations", o.realizations, "random instances per check")->capture_default_str();

    try
    {
        app.parse(argc, argv);
        if (*simulate)
            apply_config(simulate, simulate_config);
        if (*sweep)
            apply_config(sweep, sweep_config);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (*simulate)
            return run_simulate(o);
        if (*sweep)
            return run_sweep_cmd(o);
        if (*optimize)
            return run_optimize(o);
        if (*figure)
            return run_figure(o, figure);
        if (*selftest)
            return run_selftest_cmd(o);
    }
    catch (const ParameterError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
