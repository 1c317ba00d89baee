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

#include "trsec/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "trsec/analytics.hpp"
#include "trsec/channel.hpp"
#include "trsec/random.hpp"
#include "trsec/scenario.hpp"
#include "trsec/secrecy_opt.hpp"
#include "trsec/txchain.hpp"
#include "trsec/waterfill.hpp"

namespace trsec
{

namespace
{

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SelftestCheck check(std::string name, double worst, double tol)
{
    return {std::move(name), worst <= tol, "worst " + sci(worst) + " (tol " + sci(tol) + ")"};
}

} // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, int realizations)
{
    std::vector<SelftestCheck> out;
    Rng rng = make_rng(derive_seed(seed, SeedStream::Selftest));
    const int n = 16;

    double orth = 0.0, diag = 0.0, roundtrip = 0.0, leak = 0.0;
    for (int r = 0; r < realizations; ++r)
    {
        const int u = 2 + r % 7;
        const SpreadingMatrix s = build_spreading_matrix(n, u, rng());
        const Eigen::MatrixXd sd = s.dense();
        orth = std::max(orth, (sd.transpose() * sd - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());

        const DiagonalChannel h = sample_channel(n * u, rng);
        Eigen::MatrixXcd shds = sd.transpose().cast<cdouble>() * h.gains.asDiagonal() * sd.cast<cdouble>();
        shds.diagonal().setZero();
        diag = std::max(diag, shds.cwiseAbs().maxCoeff());

        const CVector x = complex_normal_vector(n, rng);
        roundtrip = std::max(roundtrip, (despread(spread(x, s), s) - x).cwiseAbs().maxCoeff());

        const CVector w = generate_an(h, s, rng);
        leak = std::max(leak, despread(h.gains.cwiseProduct(w), s).cwiseAbs().maxCoeff());
    }
    out.push_back(check("spreading columns orthonormal", orth, 1e-12));
    out.push_back(check("despread diagonal channel is diagonal", diag, 1e-12));
    out.push_back(check("despread inverts spread", roundtrip, 1e-12));
    out.push_back(check("AN leakage at Bob", leak, 1e-10));

    std::uniform_real_distribution<double> db(5.0, 25.0);
    std::uniform_int_distribution<int> bor_pick(1, 5);
    double grid_err = 0.0, inverse_err = 0.0, inf_diff = 0.0;
    for (int r = 0; r < realizations / 4 + 1; ++r)
    {
        const int u = 1 << bor_pick(rng);
        const double nb = noise_variance_from_snr(db_to_linear(db(rng)), u);
        const double ne = noise_variance_from_snr(db_to_linear(db(rng) - 10.0), u);
        for (Decoder dec : all_decoders)
        {
            const double a = alpha_opt(dec, u, nb, ne).alpha;
            double best = -1.0, best_alpha = 0.0;
            for (int k = 0; k <= 10000; ++k)
            {
                const double sr = analytic_sr(dec, SinrModelInputs{k / 1e4, u, nb, ne});
                if (sr > best)
                {
                    best = sr;
                    best_alpha = k / 1e4;
                }
            }
            if (best > 0.0)
                grid_err = std::max(grid_err, std::abs(best_alpha - a));

            const double delta = 0.5 + r % 3;
            const double alpha = 0.2 + 0.6 * (r % 5) / 4.0;
            const double snr = required_snr_bob(dec, delta, alpha, u, ne);
            const double back = analytic_sr(dec, SinrModelInputs{alpha, u, 1.0 / (u * snr), ne});
            inverse_err = std::max(inverse_err, std::abs(back - delta));
        }
        inf_diff = std::max(inf_diff, std::abs(alpha_infinity(Decoder::SDS, 0.1 + r * 0.05, u) -
                                               alpha_infinity(Decoder::OC, 0.1 + r * 0.05, u)));
    }
    out.push_back(check("alpha_opt matches grid argmax", grid_err, 1e-3));
    out.push_back(check("required Bob SNR inverts the secrecy rate", inverse_err, 1e-9));
    out.push_back(check("alpha_inf identical for SDS and OC", inf_diff, 0.0));

    {
        const int u = 4;
        const SpreadingMatrix s = build_spreading_matrix(n, u, rng());
        const DiagonalChannel h = sample_channel(n * u, rng);
        const CVector w = generate_an(h, s, rng);
        const WaterfillSolution sol = waterfill(WaterfillProblem{h, s, w, 0.5});
        const double residual = *std::max_element(sol.constraint_residuals.begin(), sol.constraint_residuals.end());
        out.push_back(check("waterfill constraint residuals", residual, 1e-6));
        out.push_back(check("waterfill objective does not decrease", std::max(0.0, -sol.objective_gain), 1e-9));
    }
    return out;
}

} // namespace trsec
