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

#include <algorithm>
#include <cmath>

#include "trsec/waterfill.hpp"

using namespace trsec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

WaterfillProblem random_problem(int n, int u, double alpha, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    SpreadingMatrix s = build_spreading_matrix(n, u, rng());
    DiagonalChannel h = sample_channel(n * u, rng);
    CVector w = generate_an(h, s, rng);
    return WaterfillProblem{h, s, w, alpha};
}

// Dense evaluation: sum_n |(S^T diag(sqrt(alpha)|h|^2) S)_nn|^2
double dense_objective(const RVector &alpha, const WaterfillProblem &p)
{
    const Eigen::MatrixXd sd = p.s.dense();
    const Eigen::MatrixXd g = sd.transpose() * alpha.cwiseSqrt().cwiseProduct(p.h_bob.power()).asDiagonal() * sd;
    return g.diagonal().squaredNorm();
}

double max_residual(const WaterfillSolution &s)
{
    return *std::max_element(s.constraint_residuals.begin(), s.constraint_residuals.end());
}

} // namespace

TEST_CASE("waterfill objective matches a dense evaluation", "[waterfill]")
{
    const WaterfillProblem p = random_problem(6, 4, 0.4, 1);
    Rng rng = make_rng(2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RVector alpha(24);
    for (Eigen::Index q = 0; q < 24; ++q)
        alpha[q] = unit(rng);
    CHECK_THAT(waterfill_objective(alpha, p.h_bob, p.s), WithinRel(dense_objective(alpha, p), 1e-13));
}

TEST_CASE("uniform split has zero residuals", "[waterfill]")
{
    const WaterfillProblem p = random_problem(8, 4, 0.3, 3);
    const auto r = waterfill_residuals(RVector::Constant(32, 0.3), p);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
    CHECK(r[2] == 0.0);
    // moving all power to data changes both energies
    const auto moved = waterfill_residuals(RVector::Constant(32, 0.4), p);
    CHECK(moved[2] > 0.0);
}

TEST_CASE("flat channel leaves nothing to gain", "[waterfill]")
{
    Rng rng = make_rng(4);
    const int n = 16, u = 4;
    SpreadingMatrix s = build_spreading_matrix(n, u, 5);
    DiagonalChannel h{CVector::Ones(n * u)};
    CVector w = generate_an(h, s, rng);
    const WaterfillSolution sol = waterfill(WaterfillProblem{h, s, w, 0.5});
    CHECK(std::abs(sol.objective_gain) < 1e-3);
    CHECK(max_residual(sol) <= 1e-6);
}

TEST_CASE("waterfill is feasible and monotone on Rayleigh channels", "[waterfill]")
{
    for (int u : {2, 4, 8})
        for (double alpha : {0.2, 0.5, 0.8})
            for (std::uint64_t seed = 10; seed < 13; ++seed)
            {
                const WaterfillProblem p = random_problem(32, u, alpha, seed * 31 + u);
                const WaterfillSolution sol = waterfill(p);
                CAPTURE(u, alpha, seed, sol.iterations);
                CHECK(sol.objective_gain >= -1e-9);
                CHECK(max_residual(sol) <= p.epsilon);
                CHECK(sol.alpha_w.minCoeff() >= 0.0);
                CHECK(sol.alpha_w.maxCoeff() <= 1.0);
                CHECK(sol.iterations <= p.max_iters);
                CHECK_THAT(sol.objective, WithinRel(waterfill_objective(sol.alpha_w, p.h_bob, p.s), 1e-12));
                CHECK_THAT(sol.objective_gain,
                           WithinAbs((sol.objective - sol.objective_init) / sol.objective_init, 1e-15));
            }
}

TEST_CASE("waterfill keeps AN out of Bob's despread signal", "[waterfill]")
{
    const WaterfillProblem p = random_problem(32, 4, 0.5, 77);
    const WaterfillSolution sol = waterfill(p);
    const CVector an = (1.0 - sol.alpha_w.array()).sqrt().matrix().cast<cdouble>().cwiseProduct(p.w);
    CHECK(despread(p.h_bob.gains.cwiseProduct(an), p.s).cwiseAbs().maxCoeff() < 1e-9);

    // Both energies, computed directly from the definitions
    const RVector hp = p.h_bob.power();
    const RVector wp = p.w.cwiseAbs2();
    const double an0 = 0.5 * wp.sum();
    const double an1 = (1.0 - sol.alpha_w.array()).matrix().dot(wp);
    const double total0 = 0.5 * hp.sum() / 4.0 + an0;
    const double total1 = sol.alpha_w.dot(hp) / 4.0 + an1;
    CHECK(std::abs(an1 - an0) <= 1e-6);
    CHECK(std::abs(total1 - total0) <= 1e-6);
    CHECK(sol.objective_gain > 0.0);
}

TEST_CASE("iteration cap returns a feasible iterate", "[waterfill]")
{
    WaterfillProblem p = random_problem(32, 8, 0.5, 5);
    p.max_iters = 3;
    const WaterfillSolution sol = waterfill(p);
    CHECK(sol.iterations == 3);
    CHECK_FALSE(sol.converged);
    CHECK(max_residual(sol) <= p.epsilon);
    CHECK(sol.objective_gain >= 0.0);
}

TEST_CASE("waterfill rejects infeasible inputs", "[waterfill]")
{
    WaterfillProblem p = random_problem(4, 2, 0.5, 6);
    p.alpha_init = 0.0;
    CHECK_THROWS_AS(waterfill(p), ParameterError);
    p.alpha_init = 1.0;
    CHECK_THROWS_AS(waterfill(p), ParameterError);
    p.alpha_init = 0.5;
    p.epsilon = 0.0;
    CHECK_THROWS_AS(waterfill(p), ParameterError);
    p.epsilon = 1e-6;
    p.w = CVector::Zero(3);
    CHECK_THROWS_AS(waterfill(p), ParameterError);
}
