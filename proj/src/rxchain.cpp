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

#include "trsec/rxchain.hpp"

#include <cmath>

namespace trsec
{

ReceivedBlock apply_channel(const CVector &x_tr, const DiagonalChannel &ch, double noise_var, Rng &rng)
{
    if (!(noise_var >= 0.0) || std::isinf(noise_var))
        throw ParameterError("noise variance must be finite and non-negative");
    if (x_tr.size() != ch.size())
        throw ParameterError("apply_channel: length mismatch");
    const CVector unit = complex_normal_vector(x_tr.size(), rng);
    return apply_channel(x_tr, ch, CVector(std::sqrt(noise_var) * unit));
}

ReceivedBlock apply_channel(const CVector &x_tr, const DiagonalChannel &ch, const CVector &noise)
{
    if (x_tr.size() != ch.size() || noise.size() != ch.size())
        throw ParameterError("apply_channel: length mismatch");
    return ReceivedBlock{ch.gains.cwiseProduct(x_tr) + noise, noise};
}

static void check_sizes(const TransmitFrame &frame, const ReceivedBlock &rx, const SpreadingMatrix &s)
{
    const Eigen::Index q = s.n_subcarriers();
    if (frame.x_tr.size() != q || rx.samples.size() != q || rx.noise.size() != q)
        throw ParameterError("received block does not match the spreading matrix");
}

DecodeComponents bob_components(const TransmitFrame &frame, const ReceivedBlock &rx, const SpreadingMatrix &s,
                                 const DiagonalChannel &h_bob)
{
    check_sizes(frame, rx, s);
    const CVector &h = h_bob.gains;
    return DecodeComponents{
        despread(h.cwiseProduct(frame.data_part), s),
        despread(rx.noise, s),
        despread(h.cwiseProduct(frame.an_part), s),
    };
}

DecodeResult bob_decode(const TransmitFrame &frame, const ReceivedBlock &rx, const SpreadingMatrix &s,
                        const DiagonalChannel &h_bob)
{
    DecodeResult out;
    out.components = bob_components(frame, rx, s, h_bob);

    if (frame.alpha.maxCoeff() <= 0.0)
        throw ParameterError("ZF at Bob is undefined for alpha = 0");
    const RVector gain = despread_diagonal(RVector(frame.alpha.cwiseSqrt().cwiseProduct(h_bob.power())), s);
    if (gain.minCoeff() < zf_gain_floor)
        throw DegenerateTrialError("Bob's ZF gain is numerically zero");

    out.zf_gain = gain.cast<cdouble>();
    out.symbols = despread(rx.samples, s).cwiseQuotient(out.zf_gain);
    return out;
}

CVector eve_decoder_weights(Decoder decoder, const DiagonalChannel &h_bob, const DiagonalChannel &h_eve)
{
    if (h_bob.size() != h_eve.size())
        throw ParameterError("Bob and Eve channels differ in length");
    switch (decoder)
    {
    case Decoder::SDS:
        return CVector::Ones(h_eve.size());
    case Decoder::MF:
        return h_bob.gains.cwiseProduct(h_eve.gains.conjugate());
    case Decoder::OC:
        return h_eve.gains.conjugate();
    }
    throw ParameterError("unknown decoder");
}

DecodeComponents eve_components(Decoder decoder, const TransmitFrame &frame, const ReceivedBlock &rx,
                                const SpreadingMatrix &s, const DiagonalChannel &h_bob,
                                const DiagonalChannel &h_eve)
{
    check_sizes(frame, rx, s);
    const CVector d = eve_decoder_weights(decoder, h_bob, h_eve);
    const CVector dh = d.cwiseProduct(h_eve.gains);
    return DecodeComponents{
        despread(dh.cwiseProduct(frame.data_part), s),
        despread(d.cwiseProduct(rx.noise), s),
        despread(dh.cwiseProduct(frame.an_part), s),
    };
}

DecodeResult eve_decode(Decoder decoder, const TransmitFrame &frame, const ReceivedBlock &rx,
                        const SpreadingMatrix &s, const DiagonalChannel &h_bob, const DiagonalChannel &h_eve)
{
    DecodeResult out;
    out.components = eve_components(decoder, frame, rx, s, h_bob, h_eve);

    const CVector d = eve_decoder_weights(decoder, h_bob, h_eve);
    const CVector gain =
        despread_diagonal(CVector(d.cwiseProduct(h_eve.gains).cwiseProduct(h_bob.gains.conjugate())), s);
    if (gain.cwiseAbs().minCoeff() < zf_gain_floor)
        throw DegenerateTrialError("Eve's ZF gain is numerically zero");

    out.zf_gain = gain;
    out.symbols = despread(d.cwiseProduct(rx.samples), s).cwiseQuotient(gain);
    return out;
}

} // namespace trsec
