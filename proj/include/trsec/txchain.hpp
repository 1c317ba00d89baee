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

#include <cstdint>
#include <vector>

#include "trsec/channel.hpp"
#include "trsec/common.hpp"
#include "trsec/random.hpp"

namespace trsec
{

// Q x N frequency spreading matrix with S[q, q mod N] = sign_q / sqrt(U) and
// zeros elsewhere. Symbol n occupies subcarriers n, n+N, ..., n+(U-1)N, so the
// column supports are disjoint and S^H S = I_N.
class SpreadingMatrix
{
public:
    SpreadingMatrix(int n_symbols, int bor, RVector signs);

    int n_symbols() const { return n_symbols_; }
    int bor() const { return bor_; }
    int n_subcarriers() const { return n_symbols_ * bor_; }

    const RVector &signs() const { return signs_; }
    double entry(Eigen::Index q) const { return signs_[q] * scale_; }
    double scale() const { return scale_; }

    // Subcarrier carrying copy i of symbol n
    Eigen::Index subcarrier(Eigen::Index n, Eigen::Index i) const { return n + i * n_symbols_; }

    Eigen::MatrixXd dense() const;

private:
    int n_symbols_;
    int bor_;
    double scale_;
    RVector signs_;
};

// Equiprobable +-1 signs drawn from sign_seed
SpreadingMatrix build_spreading_matrix(int n_symbols, int bor, std::uint64_t sign_seed);

CVector spread(const CVector &x, const SpreadingMatrix &s);   // S x
CVector despread(const CVector &y, const SpreadingMatrix &s); // S^H y

// Diagonal of S^H diag(d) S, i.e. (1/U) sum_i d[n + iN]. Exact because the
// column supports of S are disjoint.
CVector despread_diagonal(const CVector &d, const SpreadingMatrix &s);
RVector despread_diagonal(const RVector &d, const SpreadingMatrix &s);

// Time-reversal precoding in the frequency domain: element-wise h_q^* y_q
CVector tr_precode(const CVector &y, const DiagonalChannel &h_bob);

// Orthonormal basis V2 of the right null space of A = S^H H_B.
//
// Row n of A is supported only on the subcarriers of symbol n, so after a
// column permutation A is block diagonal with N blocks of size 1 x U and its
// SVD is the direct sum of the block SVDs. Each block contributes U-1 null
// vectors; coefficient block n occupies entries [n(U-1), (n+1)(U-1)).
class NullSpaceBasis
{
public:
    NullSpaceBasis(int n_symbols, int bor, std::vector<Eigen::MatrixXcd> blocks, RVector singular_values);

    int n_symbols() const { return n_symbols_; }
    int bor() const { return bor_; }
    Eigen::Index dimension() const { return static_cast<Eigen::Index>(n_symbols_) * (bor_ - 1); }
    const RVector &singular_values() const { return singular_values_; }

    CVector expand(const CVector &coefficients) const; // V2 c
    CVector coefficients(const CVector &w) const;      // V2^H w
    Eigen::MatrixXcd dense() const;                    // Q x (Q - N)

private:
    int n_symbols_;
    int bor_;
    std::vector<Eigen::MatrixXcd> blocks_; // U x (U-1) each
    RVector singular_values_;
};

// Relative threshold below which a singular value of A counts as zero
inline constexpr double null_space_rank_tol = 1e-9;

Eigen::MatrixXcd an_constraint_matrix(const DiagonalChannel &h_bob, const SpreadingMatrix &s); // A, N x Q

// Block-wise SVD of A. Throws DegenerateTrialError if A is numerically rank deficient.
NullSpaceBasis an_null_space(const DiagonalChannel &h_bob, const SpreadingMatrix &s);

// Null space of an arbitrary dense matrix from a full SVD; reference route for tests.
Eigen::MatrixXcd dense_null_space(const Eigen::MatrixXcd &a);

// AN amplitude factor c = 1/sqrt(U-1). With V2 orthonormal and w~ white this
// gives E|w_q|^2 = 1/U, the same per-subcarrier energy as the data term, so a
// symbol costs unit energy for any alpha.
double an_scale(int bor);

// w = c V2 w~ with w~ ~ CN(0, I_{Q-N}). Requires U >= 2.
CVector generate_an(const DiagonalChannel &h_bob, const SpreadingMatrix &s, Rng &rng);
CVector generate_an(const NullSpaceBasis &basis, Rng &rng);

// x_TR = sqrt(alpha) H_B^* S x + sqrt(1 - alpha) w, with alpha either uniform or
// one value per subcarrier. The two parts are kept for component bookkeeping.
struct TransmitFrame
{
    CVector symbols;   // x, length N
    CVector an;        // w, length Q, before the sqrt(1 - alpha) weight
    RVector alpha;     // per-subcarrier data fraction, length Q
    CVector data_part; // sqrt(alpha) H_B^* S x
    CVector an_part;   // sqrt(1 - alpha) w
    CVector x_tr;
};

TransmitFrame assemble_transmit(const CVector &symbols, const CVector &precoded, const CVector &w, double alpha);
TransmitFrame assemble_transmit(const CVector &symbols, const CVector &precoded, const CVector &w,
                                const RVector &alpha);

// Unit average energy square QAM (order 4 = QPSK)
CVector draw_symbols(int n, int modulation_order, Rng &rng);

} // namespace trsec
