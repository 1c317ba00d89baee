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

#include "trsec/secrecy_opt.hpp"

#include <algorithm>
#include <cmath>

namespace trsec
{

namespace
{

void check_common(int bor, double noise_eve)
{
    if (bor < 1)
        throw ParameterError("bor must be >= 1");
    if (!(noise_eve >= 0.0) || std::isinf(noise_eve))
        throw ParameterError("Eve noise variance must be finite and non-negative");
}

void check_delta(double delta)
{
    if (!(delta >= 0.0) || std::isinf(delta))
        throw ParameterError("target secrecy rate must be finite and non-negative");
}

AlphaOpt clamp_alpha(double a)
{
    AlphaOpt out;
    out.unclamped = a;
    out.alpha = std::clamp(a, 0.0, 1.0);
    out.clamped = out.alpha != a;
    return out;
}

} // namespace

AlphaOpt alpha_opt(Decoder decoder, int bor, double noise_bob, double noise_eve)
{
    check_common(bor, noise_eve);
    if (!(noise_bob >= 0.0) || std::isinf(noise_bob))
        throw ParameterError("Bob noise variance must be finite and non-negative");

    const double u = bor;
    const double sb = noise_bob;
    const double se = noise_eve;

    switch (decoder)
    {
    case Decoder::SDS:
        return clamp_alpha(((u + 1.0) * (u * se + 1.0) - u * sb) / (2.0 * (u + 1.0)));
    case Decoder::OC:
        return clamp_alpha(((u + 1.0) * (u * se + 2.0) - 2.0 * u * sb) / (4.0 * (u + 1.0)));
    case Decoder::MF:
    {
        // Stationarity of log(1 + k a) - log(p + r a) + log(p - a), divided by k:
        //   r a^2 + 2 p a - p (p - (r + 1)/k) = 0
        // with k = (U+1)/(U sb), p = (U+1) se + 1, r = ((U+1)(U+3) - U)/U.
        // Same root as the T1..T4 form, but finite for a noiseless Bob.
        const double p = (u + 1.0) * se + 1.0;
        const double r = ((u + 1.0) * (u + 3.0) - u) / u;
        const double inv_k = u * sb / (u + 1.0);
        const double disc = p * p + r * p * (p - (r + 1.0) * inv_k);
        if (disc < 0.0)
        {
            // No stationary point: the rate decreases over [0, 1].
            AlphaOpt out;
            out.unclamped = -p / r;
            out.alpha = 0.0;
            out.clamped = true;
            return out;
        }
        return clamp_alpha((std::sqrt(disc) - p) / r);
    }
    }
    throw ParameterError("unknown decoder");
}

double required_snr_bob(Decoder decoder, double delta, double alpha, int bor, double noise_eve)
{
    check_common(bor, noise_eve);
    check_delta(delta);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("required SNR is undefined unless 0 < alpha < 1");

    const double u = bor;
    const double se = noise_eve;
    const double g = std::exp2(delta);
    const double a = alpha;

    switch (decoder)
    {
    case Decoder::SDS:
    {
        const double p = u * se + 1.0;
        return (g * p - (p - a)) / (a * (u + 1.0) * (p - a));
    }
    case Decoder::MF:
    {
        const double base = u * (u + 1.0) * se + u * (1.0 - a);
        const double num = g * (base + a * (u + 1.0) * (u + 3.0)) - base;
        return num / (a * u * (u + 1.0) * ((u + 1.0) * se + 1.0 - a));
    }
    case Decoder::OC:
    {
        const double p = u * se + 2.0;
        return (g * p - (p - 2.0 * a)) / (a * (u + 1.0) * (p - 2.0 * a));
    }
    }
    throw ParameterError("unknown decoder");
}

double required_snr_infinite_eve_at(Decoder decoder, double delta, int bor, double alpha)
{
    check_common(bor, 0.0);
    check_delta(delta);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("required SNR is undefined unless 0 < alpha < 1");

    const double u = bor;
    const double g1 = std::exp2(delta) - 1.0;
    const double spread = alpha - alpha * alpha;
    switch (decoder)
    {
    case Decoder::SDS:
    case Decoder::OC:
        return (alpha + g1) / (spread * (u + 1.0));
    case Decoder::MF:
    {
        const double a1 = std::exp2(delta) * (u + 1.0) * (u + 3.0) - u * g1;
        const double a2 = u * g1;
        return (alpha * a1 + a2) / (spread * u * (u + 1.0));
    }
    }
    throw ParameterError("unknown decoder");
}

double alpha_infinity(Decoder decoder, double delta, int bor)
{
    check_common(bor, 0.0);
    check_delta(delta);

    const double u = bor;
    const double g1 = std::exp2(delta) - 1.0;
    switch (decoder)
    {
    case Decoder::SDS:
    case Decoder::OC:
        // sqrt(g1^2 + g1) - g1, rationalized to avoid cancellation at small delta
        return g1 == 0.0 ? 0.0 : g1 / (std::sqrt(g1 * g1 + g1) + g1);
    case Decoder::MF:
    {
        const double a1 = std::exp2(delta) * (u + 1.0) * (u + 3.0) - u * g1;
        const double a2 = u * g1;
        // (-a2 + sqrt(a2 (a1 + a2))) / a1, rationalized
        return a2 == 0.0 ? 0.0 : a2 / (std::sqrt(a2 * (a1 + a2)) + a2);
    }
    }
    throw ParameterError("unknown decoder");
}

double required_snr_infinite_eve(Decoder decoder, double delta, int bor)
{
    check_delta(delta);
    if (delta == 0.0)
        return 0.0;
    return required_snr_infinite_eve_at(decoder, delta, bor, alpha_infinity(decoder, delta, bor));
}

} // namespace trsec
