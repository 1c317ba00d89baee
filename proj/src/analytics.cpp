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

#include "trsec/analytics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace trsec
{

namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// num / den where both are non-negative; x/0 is +inf for x > 0 and 0 for x = 0
double ratio(double num, double den)
{
    if (den == 0.0)
        return num > 0.0 ? inf : 0.0;
    return num / den;
}
} // namespace

void SinrModelInputs::validate() const
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterError("alpha must lie in [0, 1]");
    if (bor < 1)
        throw ParameterError("bor must be >= 1");
    if (!(noise_bob >= 0.0) || !(noise_eve >= 0.0) || std::isinf(noise_bob) || std::isinf(noise_eve))
        throw ParameterError("noise variances must be finite and non-negative");
}

double sinr_bob(const SinrModelInputs &in)
{
    in.validate();
    const double u = in.bor;
    return ratio(in.alpha * (u + 1.0), u * in.noise_bob);
}

double sinr_eve(Decoder decoder, const SinrModelInputs &in)
{
    in.validate();
    const double u = in.bor;
    const double a = in.alpha;
    switch (decoder)
    {
    case Decoder::SDS:
        return ratio(a / u, in.noise_eve + (1.0 - a) / u);
    case Decoder::MF:
        return ratio(a * (u + 3.0) / u, in.noise_eve + (1.0 - a) / (u + 1.0));
    case Decoder::OC:
        return ratio(a / u, in.noise_eve / 2.0 + (1.0 - a) / u);
    }
    throw ParameterError("unknown decoder");
}

double secrecy_rate(double sinr_bob, double sinr_eve)
{
    if (std::isnan(sinr_bob) || std::isnan(sinr_eve) || sinr_bob < 0.0 || sinr_eve < 0.0)
        throw ParameterError("SINRs must be non-negative");
    if (std::isinf(sinr_bob))
        throw ParameterError("infinite SINR at Bob: secrecy rate is unbounded");
    if (std::isinf(sinr_eve))
        return 0.0;
    return std::max(0.0, std::log2(1.0 + sinr_bob) - std::log2(1.0 + sinr_eve));
}

double analytic_sr(Decoder decoder, const SinrModelInputs &in)
{
    return secrecy_rate(sinr_bob(in), sinr_eve(decoder, in));
}

ComponentTerm parse_component_term(std::string_view text)
{
    auto upper = std::string(text);
    for (auto &c : upper)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    if (upper == "B1")
        return {Component::B1, Decoder::SDS};
    if (upper == "B2")
        return {Component::B2, Decoder::SDS};

    if (upper.size() > 3 && upper[0] == 'E' && upper[2] == '-')
    {
        Component c;
        switch (upper[1])
        {
        case '1':
            c = Component::E1;
            break;
        case '2':
            c = Component::E2;
            break;
        case '3':
            c = Component::E3;
            break;
        default:
            throw ParameterError("unknown component term '" + std::string(text) + "'");
        }
        try
        {
            return {c, parse_decoder(std::string_view(upper).substr(3))};
        }
        catch (const ParameterError &)
        {
        }
    }
    throw ParameterError("unknown component term '" + std::string(text) + "'");
}

std::string to_string(const ComponentTerm &term)
{
    switch (term.component)
    {
    case Component::B1:
        return "B1";
    case Component::B2:
        return "B2";
    case Component::E1:
        return "E1-" + std::string(to_string(term.decoder));
    case Component::E2:
        return "E2-" + std::string(to_string(term.decoder));
    case Component::E3:
        return "E3-" + std::string(to_string(term.decoder));
    }
    return "?";
}

double appendix_expectation(const ComponentTerm &term, const SinrModelInputs &in)
{
    in.validate();
    const double u = in.bor;
    const double a = in.alpha;
    switch (term.component)
    {
    case Component::B1:
        return a * (u + 1.0) / u;
    case Component::B2:
        return in.noise_bob;
    case Component::E2:
        return in.noise_eve;
    case Component::E1:
        switch (term.decoder)
        {
        case Decoder::SDS:
            return a / u;
        case Decoder::MF:
            return a * (u + 3.0) / u;
        case Decoder::OC:
            return 2.0 * a / u;
        }
        break;
    case Component::E3:
        switch (term.decoder)
        {
        case Decoder::SDS:
            return (1.0 - a) / u;
        case Decoder::MF:
            return (1.0 - a) / (u + 1.0);
        case Decoder::OC:
            return 2.0 * (1.0 - a) / u;
        }
        break;
    }
    throw ParameterError("unknown component term");
}

} // namespace trsec
