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

#include "trsec/txchain.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace trsec
{

SpreadingMatrix::SpreadingMatrix(int n_symbols, int bor, RVector signs)
    : n_symbols_(n_symbols), bor_(bor), scale_(0.0), signs_(std::move(signs))
{
    if (n_symbols < 1 || bor < 1)
        throw ParameterError("spreading matrix needs N >= 1 and U >= 1");
    if (signs_.size() != static_cast<Eigen::Index>(n_symbols) * bor)
        throw ParameterError("spreading matrix needs one sign per subcarrier");
    for (Eigen::Index q = 0; q < signs_.size(); ++q)
        if (signs_[q] != 1.0 && signs_[q] != -1.0)
            throw ParameterError("spreading signs must be +1 or -1");
    scale_ = 1.0 / std::sqrt(static_cast<double>(bor));
}

Eigen::MatrixXd SpreadingMatrix::dense() const
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_subcarriers(), n_symbols_);
    for (Eigen::Index q = 0; q < m.rows(); ++q)
        m(q, q % n_symbols_) = entry(q);
    return m;
}

SpreadingMatrix build_spreading_matrix(int n_symbols, int bor, std::uint64_t sign_seed)
{
    if (n_symbols < 1 || bor < 1)
        throw ParameterError("spreading matrix needs N >= 1 and U >= 1");
    Rng rng(sign_seed);
    std::bernoulli_distribution coin(0.5);
    RVector signs(static_cast<Eigen::Index>(n_symbols) * bor);
    for (Eigen::Index q = 0; q < signs.size(); ++q)
        signs[q] = coin(rng) ? 1.0 : -1.0;
    return SpreadingMatrix(n_symbols, bor, std::move(signs));
}

CVector spread(const CVector &x, const SpreadingMatrix &s)
{
    if (x.size() != s.n_symbols())
        throw ParameterError("spread: expected " + std::to_string(s.n_symbols()) + " symbols");
    CVector y(s.n_subcarriers());
    for (Eigen::Index q = 0; q < y.size(); ++q)
        y[q] = s.entry(q) * x[q % s.n_symbols()];
    return y;
}

CVector despread(const CVector &y, const SpreadingMatrix &s)
{
    if (y.size() != s.n_subcarriers())
        throw ParameterError("despread: expected " + std::to_string(s.n_subcarriers()) + " subcarriers");
    CVector z = CVector::Zero(s.n_symbols());
    for (Eigen::Index q = 0; q < y.size(); ++q)
        z[q % s.n_symbols()] += s.entry(q) * y[q];
    return z;
}

template <typename Vec>
static Vec despread_diagonal_impl(const Vec &d, const SpreadingMatrix &s)
{
    if (d.size() != s.n_subcarriers())
        throw ParameterError("despread_diagonal: length mismatch");
    Vec g = Vec::Zero(s.n_symbols());
    for (Eigen::Index q = 0; q < d.size(); ++q)
        g[q % s.n_symbols()] += d[q];
    return g / static_cast<double>(s.bor());
}

CVector despread_diagonal(const CVector &d, const SpreadingMatrix &s) { return despread_diagonal_impl(d, s); }
RVector despread_diagonal(const RVector &d, const SpreadingMatrix &s) { return despread_diagonal_impl(d, s); }

CVector tr_precode(const CVector &y, const DiagonalChannel &h_bob)
{
    if (y.size() != h_bob.size())
        throw ParameterError("tr_precode: length mismatch");
    return h_bob.gains.conjugate().cwiseProduct(y);
}

// ---------------------------------------------------------------------------
// Artificial noise

NullSpaceBasis::NullSpaceBasis(int n_symbols, int bor, std::vector<Eigen::MatrixXcd> blocks,
                               RVector singular_values)
    : n_symbols_(n_symbols), bor_(bor), blocks_(std::move(blocks)), singular_values_(std::move(singular_values))
{
    if (static_cast<int>(blocks_.size()) != n_symbols_)
        throw ParameterError("null space basis needs one block per symbol");
}

CVector NullSpaceBasis::expand(const CVector &c) const
{
    if (c.size() != dimension())
        throw ParameterError("null space coefficients have the wrong length");
    const Eigen::Index k = bor_ - 1;
    CVector w = CVector::Zero(static_cast<Eigen::Index>(n_symbols_) * bor_);
    for (int n = 0; n < n_symbols_; ++n)
    {
        if (k == 0)
            continue;
        const CVector local = blocks_[n] * c.segment(n * k, k);
        for (int i = 0; i < bor_; ++i)
            w[n + static_cast<Eigen::Index>(i) * n_symbols_] = local[i];
    }
    return w;
}

CVector NullSpaceBasis::coefficients(const CVector &w) const
{
    const Eigen::Index k = bor_ - 1;
    if (w.size() != static_cast<Eigen::Index>(n_symbols_) * bor_)
        throw ParameterError("vector length does not match the null space basis");
    CVector c(dimension());
    for (int n = 0; n < n_symbols_; ++n)
    {
        if (k == 0)
            continue;
        CVector local(bor_);
        for (int i = 0; i < bor_; ++i)
            local[i] = w[n + static_cast<Eigen::Index>(i) * n_symbols_];
        c.segment(n * k, k) = blocks_[n].adjoint() * local;
    }
    return c;
}

Eigen::MatrixXcd NullSpaceBasis::dense() const
{
    const Eigen::Index q = static_cast<Eigen::Index>(n_symbols_) * bor_;
    const Eigen::Index k = bor_ - 1;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(q, dimension());
    for (int n = 0; n < n_symbols_; ++n)
        for (int i = 0; i < bor_; ++i)
            for (Eigen::Index j = 0; j < k; ++j)
                v(n + static_cast<Eigen::Index>(i) * n_symbols_, n * k + j) = blocks_[n](i, j);
    return v;
}

Eigen::MatrixXcd an_constraint_matrix(const DiagonalChannel &h_bob, const SpreadingMatrix &s)
{
    if (h_bob.size() != s.n_subcarriers())
        throw ParameterError("channel length does not match the spreading matrix");
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(s.n_symbols(), s.n_subcarriers());
    for (Eigen::Index q = 0; q < a.cols(); ++q)
        a(q % s.n_symbols(), q) = s.entry(q) * h_bob.gains[q];
    return a;
}

NullSpaceBasis an_null_space(const DiagonalChannel &h_bob, const SpreadingMatrix &s)
{
    if (h_bob.size() != s.n_subcarriers())
        throw ParameterError("channel length does not match the spreading matrix");
    const int n_sym = s.n_symbols();
    const int u = s.bor();

    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(n_sym);
    RVector sv(n_sym);
    Eigen::MatrixXcd row(1, u);
    for (int n = 0; n < n_sym; ++n)
    {
        for (int i = 0; i < u; ++i)
        {
            const Eigen::Index q = s.subcarrier(n, i);
            row(0, i) = s.entry(q) * h_bob.gains[q];
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(row, Eigen::ComputeFullV);
        sv[n] = svd.singularValues()[0];
        blocks.push_back(svd.matrixV().rightCols(u - 1));
    }

    const double largest = sv.maxCoeff();
    if (!(largest > 0.0) || sv.minCoeff() < null_space_rank_tol * largest)
        throw DegenerateTrialError("S^H H_B is numerically rank deficient");
    return NullSpaceBasis(n_sym, u, std::move(blocks), std::move(sv));
}

Eigen::MatrixXcd dense_null_space(const Eigen::MatrixXcd &a)
{
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const RVector &sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv.maxCoeff() : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] >= null_space_rank_tol * largest && sv[i] > 0.0)
            ++rank;
    return svd.matrixV().rightCols(a.cols() - rank);
}

double an_scale(int bor)
{
    if (bor < 2)
        throw ParameterError("no AN degrees of freedom: U must be >= 2");
    return 1.0 / std::sqrt(static_cast<double>(bor - 1));
}

CVector generate_an(const NullSpaceBasis &basis, Rng &rng)
{
    const double c = an_scale(basis.bor());
    return c * basis.expand(complex_normal_vector(basis.dimension(), rng));
}

CVector generate_an(const DiagonalChannel &h_bob, const SpreadingMatrix &s, Rng &rng)
{
    if (s.bor() < 2)
        throw ParameterError("no AN degrees of freedom: U must be >= 2");
    return generate_an(an_null_space(h_bob, s), rng);
}

// ---------------------------------------------------------------------------

TransmitFrame assemble_transmit(const CVector &symbols, const CVector &precoded, const CVector &w,
                                const RVector &alpha)
{
    if (precoded.size() != w.size() || alpha.size() != w.size())
        throw ParameterError("assemble_transmit: length mismatch");
    for (Eigen::Index q = 0; q < alpha.size(); ++q)
        if (!(alpha[q] >= 0.0 && alpha[q] <= 1.0))
            throw ParameterError("alpha must lie in [0, 1]");

    TransmitFrame f;
    f.symbols = symbols;
    f.an = w;
    f.alpha = alpha;
    f.data_part = alpha.cwiseSqrt().cast<cdouble>().cwiseProduct(precoded);
    f.an_part = (RVector::Ones(alpha.size()) - alpha).cwiseSqrt().cast<cdouble>().cwiseProduct(w);
    f.x_tr = f.data_part + f.an_part;
    return f;
}

TransmitFrame assemble_transmit(const CVector &symbols, const CVector &precoded, const CVector &w, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterError("alpha must lie in [0, 1]");
    // Scalar path keeps alpha = 1 and alpha = 0 bit-exact.
    TransmitFrame f;
    if (precoded.size() != w.size())
        throw ParameterError("assemble_transmit: length mismatch");
    f.symbols = symbols;
    f.an = w;
    f.alpha = RVector::Constant(w.size(), alpha);
    f.data_part = alpha == 1.0 ? precoded : CVector(std::sqrt(alpha) * precoded);
    f.an_part = alpha == 0.0 ? w : CVector(std::sqrt(1.0 - alpha) * w);
    f.x_tr = f.data_part + f.an_part;
    return f;
}

CVector draw_symbols(int n, int modulation_order, Rng &rng)
{
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(modulation_order))));
    if (n < 0 || modulation_order < 4 || side * side != modulation_order)
        throw ParameterError("draw_symbols: modulation order must be a square >= 4");
    // Levels -(side-1), ..., side-1 in steps of 2; E|x|^2 = 2 (M - 1) / 3 before scaling
    const double scale = 1.0 / std::sqrt(2.0 * (modulation_order - 1) / 3.0);
    std::uniform_int_distribution<int> level(0, side - 1);
    CVector x(n);
    for (int k = 0; k < n; ++k)
    {
        const double re = 2.0 * level(rng) - (side - 1);
        const double im = 2.0 * level(rng) - (side - 1);
        x[k] = cdouble(re, im) * scale;
    }
    return x;
}

} // namespace trsec
