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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "trsec/analytics.hpp"
#include "trsec/random.hpp"
#include "trsec/scenario.hpp"
#include "trsec/secrecy_opt.hpp"

using namespace trsec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

double grid_argmax(Decoder d, int u, double nb, double ne, double *best_sr = nullptr)
{
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
    if (best_sr)
        *best_sr = best;
    return arg;
}

// MF stationary point written as (sqrt(T1^2 T3^2 + T1 T2 T3 T4 - T1 T3 T4^2) - T1 T3) / (T1 T4)
double mf_alpha_t_form(int u, double sb, double se)
{
    const double t1 = u + 1.0;
    const double t2 = t1 * t1 * se + t1 - u * sb;
    const double t3 = u * sb * (t1 * se + 1.0);
    const double t4 = sb * (t1 * (u + 3.0) - u);
    return (std::sqrt(t1 * t1 * t3 * t3 + t1 * t2 * t3 * t4 - t1 * t3 * t4 * t4) - t1 * t3) / (t1 * t4);
}

// Bob SNR for rate delta against a noiseless Eve, by bisection on the analytic rate.
double required_snr_by_bisection(Decoder d, double delta, int u, double alpha)
{
    double lo = 1e-6, hi = 1e9;
    for (int it = 0; it < 300; ++it)
    {
        const double mid = std::sqrt(lo * hi);
        const double sr = analytic_sr(d, {alpha, u, noise_variance_from_snr(mid, u), 0.0});
        (sr < delta ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

} // namespace

TEST_CASE("alpha_opt closed forms", "[secrecy_opt]")
{
    for (int u : {1, 2, 4, 8, 16})
        CHECK_THAT(alpha_opt(Decoder::SDS, u, 0.0, 0.0).alpha, WithinAbs(0.5, 1e-15));
    const double s15 = 1.0 / (4.0 * 31.6227766016838);
    CHECK_THAT(alpha_opt(Decoder::SDS, 4, s15, s15).alpha, WithinAbs(0.5126491106, 1e-9));
    CHECK_FALSE(alpha_opt(Decoder::SDS, 4, s15, s15).clamped);
}

TEST_CASE("MF alpha_opt agrees with the T-form root", "[secrecy_opt]")
{
    Rng rng = make_rng(3);
    std::uniform_real_distribution<double> db(0.0, 25.0);
    for (int r = 0; r < 200; ++r)
    {
        const int u = 1 << (r % 5);
        const double sb = noise_variance_from_snr(db_to_linear(db(rng)), u);
        const double se = noise_variance_from_snr(db_to_linear(db(rng)), u);
        const AlphaOpt a = alpha_opt(Decoder::MF, u, sb, se);
        const double ref = mf_alpha_t_form(u, sb, se);
        if (std::isnan(ref))
            CHECK(a.alpha == 0.0); // no real root: the rate falls over [0, 1]
        else
            CHECK_THAT(a.unclamped, WithinAbs(ref, 1e-9));
    }
}

TEST_CASE("alpha_opt is the grid argmax of the analytic rate", "[secrecy_opt]")
{
    Rng rng = make_rng(4);
    std::uniform_real_distribution<double> db_b(5.0, 25.0), db_e(-5.0, 25.0);
    for (Decoder d : all_decoders)
        for (int r = 0; r < 40; ++r)
        {
            const int u = 1 << (1 + r % 4);
            const double sb = noise_variance_from_snr(db_to_linear(db_b(rng)), u);
            const double se = noise_variance_from_snr(db_to_linear(db_e(rng)), u);
            double best = 0.0;
            const double arg = grid_argmax(d, u, sb, se, &best);
            if (best <= 0.0)
                continue;
            CHECK_THAT(alpha_opt(d, u, sb, se).alpha, WithinAbs(arg, 1e-3));
        }
}

TEST_CASE("alpha_opt clamps in extreme noise regimes", "[secrecy_opt]")
{
    // Very noisy Eve: no AN needed, the stationary point is beyond 1.
    const AlphaOpt sds = alpha_opt(Decoder::SDS, 4, 0.01, 10.0);
    CHECK(sds.clamped);
    CHECK(sds.alpha == 1.0);
    CHECK(sds.unclamped > 1.0);
    const AlphaOpt mf = alpha_opt(Decoder::MF, 4, 0.01, 10.0);
    CHECK(mf.alpha == 1.0);
    CHECK(grid_argmax(Decoder::MF, 4, 0.01, 10.0) == 1.0);
    // Very noisy Bob: the SDS stationary point falls below 0.
    CHECK(alpha_opt(Decoder::SDS, 4, 10.0, 0.0).alpha == 0.0);
    CHECK(alpha_opt(Decoder::MF, 4, 10.0, 0.0).alpha == 0.0);
}

TEST_CASE("required Bob SNR inverts the analytic rate", "[secrecy_opt]")
{
    Rng rng = make_rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Decoder d : all_decoders)
        for (int r = 0; r < 100; ++r)
        {
            const int u = 1 << (r % 5);
            const double delta = 3.0 * unit(rng);
            const double alpha = 0.02 + 0.96 * unit(rng);
            const double se = noise_variance_from_snr(db_to_linear(-5.0 + 30.0 * unit(rng)), u);
            const double snr = required_snr_bob(d, delta, alpha, u, se);
            REQUIRE(snr > 0.0);
            const double back = analytic_sr(d, {alpha, u, 1.0 / (u * snr), se});
            CHECK_THAT(back, WithinAbs(delta, 1e-9));
        }
    CHECK_THROWS_AS(required_snr_bob(Decoder::SDS, 1.0, 0.0, 4, 0.1), ParameterError);
    CHECK_THROWS_AS(required_snr_bob(Decoder::SDS, 1.0, 1.0, 4, 0.1), ParameterError);
    CHECK_THROWS_AS(required_snr_bob(Decoder::SDS, -1.0, 0.5, 4, 0.1), ParameterError);
}

TEST_CASE("SDS and OC need the same SNR against a noiseless Eve", "[secrecy_opt]")
{
    for (double alpha : {0.1, 0.4, 0.8})
        for (double delta : {0.25, 1.0, 3.0})
            CHECK_THAT(required_snr_bob(Decoder::SDS, delta, alpha, 4, 0.0),
                       WithinRel(required_snr_bob(Decoder::OC, delta, alpha, 4, 0.0), 1e-14));
}

TEST_CASE("alpha_inf closed forms", "[secrecy_opt]")
{
    CHECK_THAT(alpha_infinity(Decoder::SDS, 1.0, 4), WithinAbs(std::sqrt(2.0) - 1.0, 1e-15));
    for (Decoder d : all_decoders)
        CHECK(alpha_infinity(d, 0.0, 8) == 0.0);
    CHECK_THAT(alpha_infinity(Decoder::MF, 0.75, 8), WithinAbs(0.153256599, 1e-9));
    CHECK_THAT(alpha_infinity(Decoder::MF, 2.2, 8), WithinAbs(0.200919431, 1e-9));
    for (double delta : {0.01, 0.5, 1.7, 4.0})
        for (int u : {2, 8})
            CHECK(alpha_infinity(Decoder::SDS, delta, u) == alpha_infinity(Decoder::OC, delta, u));
    CHECK_THROWS_AS(alpha_infinity(Decoder::SDS, -0.5, 4), ParameterError);
}

TEST_CASE("required SNR against a noiseless Eve", "[secrecy_opt]")
{
    CHECK_THAT(required_snr_infinite_eve(Decoder::MF, 0.75, 8), WithinRel(3.22531067, 1e-8));
    CHECK_THAT(linear_to_db(required_snr_infinite_eve(Decoder::MF, 0.75, 8)), WithinAbs(5.0857, 1e-3));
    CHECK_THAT(linear_to_db(required_snr_infinite_eve(Decoder::MF, 2.2, 8)), WithinAbs(9.9539, 1e-3));
    CHECK(required_snr_infinite_eve(Decoder::SDS, 0.0, 4) == 0.0);

    for (Decoder d : all_decoders)
        for (double delta : {0.3, 1.2, 2.5})
            for (int u : {2, 8})
            {
                const double a = alpha_infinity(d, delta, u);
                const double snr = required_snr_infinite_eve(d, delta, u);
                CHECK_THAT(snr, WithinRel(required_snr_by_bisection(d, delta, u, a), 1e-8));
                CHECK_THAT(required_snr_infinite_eve_at(d, delta, u, a), WithinRel(snr, 1e-14));
                CHECK(required_snr_infinite_eve_at(d, delta, u, a + 0.01) >= snr);
                CHECK(required_snr_infinite_eve_at(d, delta, u, a - 0.01) >= snr);
            }
}

TEST_CASE("required SNR grows with the target and shrinks with the back-off rate", "[secrecy_opt]")
{
    for (Decoder d : all_decoders)
    {
        double prev_alpha = 0.0;
        for (int k = 1; k <= 60; ++k)
        {
            const double delta = k / 20.0;
            const double a = alpha_infinity(d, delta, 8);
            CHECK(a > prev_alpha);
            prev_alpha = a;
            CHECK(required_snr_infinite_eve(d, delta, 8) > required_snr_infinite_eve(d, delta - 0.05, 8));
            CHECK(required_snr_infinite_eve(d, delta, 16) < required_snr_infinite_eve(d, delta, 8));
            CHECK(required_snr_infinite_eve(d, delta, 4) < required_snr_infinite_eve(d, delta, 2));
        }
    }
}
