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

#include "trsec/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace trsec
{

namespace
{

// alpha_q is kept at or above this floor so the gradient in b stays finite.
constexpr double alpha_floor = 1e-12;
constexpr double rank_tol = 1e-10;

struct Geometry
{
    int n_symbols;
    int bor;
    RVector hp;   // |h_q|^2
    RVector wp;   // |w_q|^2
    RVector c_re; // leakage coefficient s_q h_q w_q, real part
    RVector c_im;
    double b_max;
};

// Orthonormal basis of the span of `rows`, dropping directions below rank_tol.
template <typename Vec>
std::vector<Vec> orthonormalize(std::vector<Vec> rows)
{
    double scale = 0.0;
    for (const auto &r : rows)
        scale = std::max(scale, r.norm());
    std::vector<Vec> out;
    if (scale == 0.0)
        return out;
    for (auto &r : rows)
    {
        for (const auto &e : out)
            r -= e.dot(r) * e;
        for (const auto &e : out) // second pass for stability
            r -= e.dot(r) * e;
        const double nrm = r.norm();
        if (nrm > rank_tol * scale)
            out.push_back(r / nrm);
    }
    return out;
}

class TangentSpace
{
public:
    TangentSpace(const Geometry &g, const RVector &b, const std::vector<bool> &fixed) : g_(g), fixed_(fixed)
    {
        const int n = g.n_symbols;
        const int u = g.bor;
        blocks_.resize(n);
        for (int k = 0; k < n; ++k)
        {
            Eigen::VectorXd re(u), im(u);
            for (int i = 0; i < u; ++i)
            {
                const Eigen::Index q = k + static_cast<Eigen::Index>(i) * n;
                re[i] = fixed[q] ? 0.0 : g.c_re[q];
                im[i] = fixed[q] ? 0.0 : g.c_im[q];
            }
            blocks_[k] = orthonormalize<Eigen::VectorXd>({re, im});
        }

        RVector e_data = mask(RVector(2.0 * b.cwiseProduct(g.hp)));
        RVector e_an = mask(RVector(2.0 * b.cwiseProduct(g.wp)));
        project_linear(e_data);
        project_linear(e_an);
        energy_ = orthonormalize<RVector>({e_data, e_an});
    }

    const std::vector<RVector> &energy_directions() const { return energy_; }

    RVector project(const RVector &v) const
    {
        RVector d = mask(v);
        project_linear(d);
        for (const auto &e : energy_)
            d -= e.dot(d) * e;
        return d;
    }

private:
    RVector mask(RVector v) const
    {
        for (Eigen::Index q = 0; q < v.size(); ++q)
            if (fixed_[q])
                v[q] = 0.0;
        return v;
    }

    void project_linear(RVector &v) const
    {
        const int n = g_.n_symbols;
        const int u = g_.bor;
        Eigen::VectorXd vb(u);
        for (int k = 0; k < n; ++k)
        {
            if (blocks_[k].empty())
                continue;
            for (int i = 0; i < u; ++i)
                vb[i] = v[k + static_cast<Eigen::Index>(i) * n];
            for (const auto &e : blocks_[k])
                vb -= e.dot(vb) * e;
            for (int i = 0; i < u; ++i)
                v[k + static_cast<Eigen::Index>(i) * n] = vb[i];
        }
    }

    const Geometry &g_;
    const std::vector<bool> &fixed_;
    std::vector<std::vector<Eigen::VectorXd>> blocks_;
    std::vector<RVector> energy_;
};

RVector alpha_of(const RVector &b) { return (1.0 - b.array().square()).max(0.0).matrix(); }

double objective_b(const RVector &b, const Geometry &g)
{
    const RVector root = alpha_of(b).cwiseSqrt().cwiseProduct(g.hp);
    double f = 0.0;
    for (int k = 0; k < g.n_symbols; ++k)
    {
        double gain = 0.0;
        for (int i = 0; i < g.bor; ++i)
            gain += root[k + static_cast<Eigen::Index>(i) * g.n_symbols];
        gain /= g.bor;
        f += gain * gain;
    }
    return f;
}

RVector gradient_b(const RVector &b, const Geometry &g)
{
    const RVector root = alpha_of(b).cwiseSqrt();
    RVector grad(b.size());
    for (int k = 0; k < g.n_symbols; ++k)
    {
        double gain = 0.0;
        for (int i = 0; i < g.bor; ++i)
        {
            const Eigen::Index q = k + static_cast<Eigen::Index>(i) * g.n_symbols;
            gain += root[q] * g.hp[q];
        }
        gain /= g.bor;
        for (int i = 0; i < g.bor; ++i)
        {
            const Eigen::Index q = k + static_cast<Eigen::Index>(i) * g.n_symbols;
            grad[q] = -2.0 * gain * g.hp[q] / g.bor * b[q] / root[q];
        }
    }
    return grad;
}

// Newton correction of the two energy sums inside the tangent directions.
bool restore_energy(RVector &b, const Geometry &g, const std::vector<RVector> &dirs, double target_data,
                    double target_an)
{
    const double tol_data = 1e-12 * std::max(1.0, target_data);
    const double tol_an = 1e-12 * std::max(1.0, target_an);
    for (int it = 0; it < 30; ++it)
    {
        const RVector b2 = b.array().square().matrix();
        const Eigen::Vector2d r(b2.dot(g.hp) - target_data, b2.dot(g.wp) - target_an);
        if (std::abs(r[0]) <= tol_data && std::abs(r[1]) <= tol_an)
            return true;
        if (dirs.empty())
            return false;
        Eigen::MatrixXd jac(2, static_cast<Eigen::Index>(dirs.size()));
        for (std::size_t j = 0; j < dirs.size(); ++j)
        {
            jac(0, j) = 2.0 * b.cwiseProduct(g.hp).dot(dirs[j]);
            jac(1, j) = 2.0 * b.cwiseProduct(g.wp).dot(dirs[j]);
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
        cod.setThreshold(rank_tol);
        const Eigen::VectorXd mu = cod.solve(Eigen::VectorXd(-r));
        for (std::size_t j = 0; j < dirs.size(); ++j)
            b += mu[j] * dirs[j];
    }
    return false;
}

void check_problem(const WaterfillProblem &p)
{
    const Eigen::Index q = p.s.n_subcarriers();
    if (p.h_bob.size() != q || p.w.size() != q)
        throw ParameterError("waterfill: channel, AN and spreading sizes differ");
    if (!(p.alpha_init > 0.0 && p.alpha_init < 1.0))
        throw ParameterError("waterfill: alpha_init must lie strictly inside (0, 1)");
    if (!(p.epsilon > 0.0))
        throw ParameterError("waterfill: epsilon must be positive");
    if (p.max_iters < 1)
        throw ParameterError("waterfill: max_iters must be >= 1");
    if (!(p.step_tol > 0.0))
        throw ParameterError("waterfill: step_tol must be positive");
}

double leakage_energy(const RVector &alpha, const WaterfillProblem &p)
{
    const CVector an = (1.0 - alpha.array()).max(0.0).sqrt().matrix().cast<cdouble>().cwiseProduct(p.w);
    return despread(p.h_bob.gains.cwiseProduct(an), p.s).squaredNorm();
}

} // namespace

double waterfill_objective(const RVector &alpha, const DiagonalChannel &h_bob, const SpreadingMatrix &s)
{
    if (alpha.size() != s.n_subcarriers() || h_bob.size() != s.n_subcarriers())
        throw ParameterError("waterfill_objective: size mismatch");
    return despread_diagonal(RVector(alpha.cwiseSqrt().cwiseProduct(h_bob.power())), s).squaredNorm();
}

std::array<double, 3> waterfill_residuals(const RVector &alpha, const WaterfillProblem &p)
{
    check_problem(p);
    if (alpha.size() != p.s.n_subcarriers())
        throw ParameterError("waterfill_residuals: size mismatch");
    const RVector alpha0 = RVector::Constant(alpha.size(), p.alpha_init);
    const RVector hp = p.h_bob.power();
    const RVector wp = p.w.cwiseAbs2();
    const double u = p.s.bor();

    auto total = [&](const RVector &a) { return a.dot(hp) / u + (1.0 - a.array()).matrix().dot(wp); };
    auto an = [&](const RVector &a) { return (1.0 - a.array()).matrix().dot(wp); };

    return {std::max(0.0, leakage_energy(alpha, p) - leakage_energy(alpha0, p)),
            std::abs(total(alpha) - total(alpha0)), std::abs(an(alpha) - an(alpha0))};
}

WaterfillSolution waterfill(const WaterfillProblem &p)
{
    check_problem(p);

    const Eigen::Index nq = p.s.n_subcarriers();
    Geometry g{p.s.n_symbols(), p.s.bor(), p.h_bob.power(), p.w.cwiseAbs2(), RVector(nq), RVector(nq),
               std::sqrt(1.0 - alpha_floor)};
    for (Eigen::Index q = 0; q < nq; ++q)
    {
        const cdouble c = p.s.entry(q) * p.h_bob.gains[q] * p.w[q];
        g.c_re[q] = c.real();
        g.c_im[q] = c.imag();
    }

    RVector b = RVector::Constant(nq, std::sqrt(1.0 - p.alpha_init));
    const double target_data = b.array().square().matrix().dot(g.hp);
    const double target_an = b.array().square().matrix().dot(g.wp);

    WaterfillSolution sol;
    sol.objective_init = objective_b(b, g);
    double f = sol.objective_init;

    double lambda = 0.1;
    std::vector<bool> fixed(nq);
    while (sol.iterations < p.max_iters)
    {
        ++sol.iterations;
        const RVector grad = gradient_b(b, g);

        for (Eigen::Index q = 0; q < nq; ++q)
            fixed[q] = (b[q] <= 0.0 && grad[q] < 0.0) || (b[q] >= g.b_max && grad[q] > 0.0);

        // Pin every free variable whose projected
        // direction would leave the box, then project again.
        RVector d;
        std::vector<RVector> energy_dirs;
        for (;;)
        {
            TangentSpace tangent(g, b, fixed);
            d = tangent.project(grad);
            energy_dirs = tangent.energy_directions();
            bool changed = false;
            for (Eigen::Index q = 0; q < nq; ++q)
            {
                if (fixed[q])
                    continue;
                if ((b[q] <= 0.0 && d[q] < 0.0) || (b[q] >= g.b_max && d[q] > 0.0))
                {
                    fixed[q] = true;
                    changed = true;
                }
            }
            if (!changed)
                break;
        }

        double grad_scale = 0.0;
        for (Eigen::Index q = 0; q < nq; ++q)
            if (!fixed[q])
                grad_scale = std::max(grad_scale, std::abs(grad[q]));
        const double d_norm = d.lpNorm<Eigen::Infinity>();
        if (d_norm <= 1e-10 * grad_scale || d_norm == 0.0)
        {
            sol.converged = true;
            break;
        }

        double t_box = std::numeric_limits<double>::infinity();
        for (Eigen::Index q = 0; q < nq; ++q)
        {
            if (d[q] > 0.0)
                t_box = std::min(t_box, (g.b_max - b[q]) / d[q]);
            else if (d[q] < 0.0)
                t_box = std::min(t_box, b[q] / -d[q]);
        }
        const double t_len = lambda / d_norm;
        const bool truncated = t_box < t_len;
        const double t = truncated ? t_box : t_len;

        RVector cand = b + t * d;
        bool ok = restore_energy(cand, g, energy_dirs, target_data, target_an);
        if (ok)
        {
            const double slack = 1e-12;
            ok = cand.minCoeff() >= -slack && cand.maxCoeff() <= g.b_max + slack;
            cand = cand.cwiseMax(0.0).cwiseMin(g.b_max);
        }
        double f_cand = 0.0;
        if (ok)
        {
            f_cand = objective_b(cand, g);
            ok = f_cand > f;
        }
        if (ok)
        {
            const auto res = waterfill_residuals(alpha_of(cand), p);
            ok = *std::max_element(res.begin(), res.end()) <= 0.01 * p.epsilon;
        }

        if (ok)
        {
            const double step = (cand - b).lpNorm<Eigen::Infinity>();
            b = cand;
            f = f_cand;
            lambda = std::min(2.0 * lambda, 0.5);
            if (!truncated && step < p.step_tol)
            {
                sol.converged = true;
                break;
            }
        }
        else
        {
            lambda *= 0.5;
            if (lambda < p.step_tol)
            {
                sol.converged = true;
                break;
            }
        }
    }

    sol.alpha_w = alpha_of(b).cwiseMin(1.0);
    sol.objective = f;
    sol.objective_gain = sol.objective_init > 0.0 ? (f - sol.objective_init) / sol.objective_init : 0.0;
    sol.constraint_residuals = waterfill_residuals(sol.alpha_w, p);
    return sol;
}

} // namespace trsec
