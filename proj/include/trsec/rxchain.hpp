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

#include "trsec/channel.hpp"
#include "trsec/common.hpp"
#include "trsec/random.hpp"
#include "trsec/txchain.hpp"

namespace trsec
{

// Received block y = h .* x_TR + v. The noise realization is kept so the
// decoded sequence can be split into its data/noise/AN parts.
struct ReceivedBlock
{
    CVector samples;
    CVector noise;
};

// Draws v ~ CN(0, noise_var I). Q unit normals are drawn even when noise_var
// is 0 so the random stream does not depend on the SNR.
ReceivedBlock apply_channel(const CVector &x_tr, const DiagonalChannel &ch, double noise_var, Rng &rng);
ReceivedBlock apply_channel(const CVector &x_tr, const DiagonalChannel &ch, const CVector &noise);

// Per-symbol split of a despread (pre-ZF) sequence.
struct DecodeComponents
{
    CVector data;  // B1 x at Bob, E1 at Eve
    CVector noise; // B2 / E2
    CVector an;    // AN leakage at Bob, E3 at Eve

    CVector total() const { return data + noise + an; }
};

struct DecodeResult
{
    CVector symbols; // ZF estimate
    CVector zf_gain; // per-symbol gain the ZF step divides by
    DecodeComponents components;
};

// Guard below which a ZF gain counts as zero
inline constexpr double zf_gain_floor = 1e-12;

// Despread components at Bob; no equalization, valid for any alpha.
DecodeComponents bob_components(const TransmitFrame &frame, const ReceivedBlock &rx, const SpreadingMatrix &s,
                                 const DiagonalChannel &h_bob);

// Despreading followed by ZF with the real gain (1/U) sum_i sqrt(alpha_q) |h_B,q|^2.
// Throws ParameterError when alpha is 0 everywhere and DegenerateTrialError
// when a gain falls below zf_gain_floor.
DecodeResult bob_decode(const TransmitFrame &frame, const ReceivedBlock &rx, const SpreadingMatrix &s,
                        const DiagonalChannel &h_bob);

// Diagonal of Eve's filter before despreading: G = S^H diag(d).
CVector eve_decoder_weights(Decoder decoder, const DiagonalChannel &h_bob, const DiagonalChannel &h_eve);

DecodeComponents eve_components(Decoder decoder, const TransmitFrame &frame, const ReceivedBlock &rx,
                                const SpreadingMatrix &s, const DiagonalChannel &h_bob,
                                const DiagonalChannel &h_eve);

// G y followed by ZF with (G H_E H_B^* S)^{-1}; the estimate is
// sqrt(alpha) x plus AN and noise residuals. The gain is complex for SDS and OC.
DecodeResult eve_decode(Decoder decoder, const TransmitFrame &frame, const ReceivedBlock &rx,
                        const SpreadingMatrix &s, const DiagonalChannel &h_bob, const DiagonalChannel &h_eve);

} // namespace trsec
