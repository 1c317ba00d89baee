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

#include "trsec/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace trsec
{

std::string_view to_string(Decoder d)
{
    switch (d)
    {
    case Decoder::SDS:
        return "SDS";
    case Decoder::MF:
        return "MF";
    case Decoder::OC:
        return "OC";
    }
    return "?";
}

static std::string lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

Decoder parse_decoder(std::string_view name)
{
    const auto n = lowercase(name);
    if (n == "sds")
        return Decoder::SDS;
    if (n == "mf")
        return Decoder::MF;
    if (n == "oc")
        return Decoder::OC;
    throw ParameterError("unknown decoder '" + std::string(name) + "' (expected sds, mf or oc)");
}

double db_to_linear(double x_db)
{
    if (std::isinf(x_db) && x_db > 0)
        return std::numeric_limits<double>::infinity();
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double linear)
{
    if (std::isinf(linear) && linear > 0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(linear);
}

double noise_variance_from_snr(double snr_linear, int bor)
{
    if (bor < 1)
        throw ParameterError("back-off rate must be >= 1");
    if (std::isnan(snr_linear) || snr_linear <= 0.0)
        throw ParameterError("SNR must be positive");
    if (std::isinf(snr_linear))
        return 0.0;
    return 1.0 / (static_cast<double>(bor) * snr_linear);
}

Snr Snr::from_db(double db)
{
    if (std::isnan(db) || (std::isinf(db) && db < 0))
        throw ParameterError("SNR in dB must be a number or +inf");
    if (std::isinf(db))
        return infinite();
    return Snr(db_to_linear(db));
}

Snr Snr::from_linear(double linear)
{
    if (std::isnan(linear) || linear <= 0.0)
        throw ParameterError("linear SNR must be positive");
    if (std::isinf(linear))
        return infinite();
    return Snr(linear);
}

Snr Snr::parse_db(std::string_view text)
{
    const auto t = lowercase(text);
    if (t == "inf" || t == "+inf" || t == "infinite" || t == "infinity")
        return infinite();
    double value = 0.0;
    const char *first = t.data();
    const char *last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParameterError("cannot parse SNR '" + std::string(text) + "'");
    return from_db(value);
}

double Snr::linear() const
{
    return linear_ ? *linear_ : std::numeric_limits<double>::infinity();
}

double Snr::db() const { return linear_to_db(linear()); }

double Snr::noise_variance(int bor) const { return noise_variance_from_snr(linear(), bor); }

ScenarioConfig::ScenarioConfig(const ScenarioParams &p) : p_(p)
{
    if (p.n_symbols < 1)
        throw ParameterError("n_symbols must be >= 1");
    if (p.bor < 1)
        throw ParameterError("bor must be >= 1");
    if (p.n_subcarriers && *p.n_subcarriers != p.n_symbols * p.bor)
        throw ParameterError("n_subcarriers must equal n_symbols * bor");
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw ParameterError("alpha must lie in [0, 1]");
    if (p.n_trials < 1)
        throw ParameterError("n_trials must be >= 1");
    const int m = p.modulation_order;
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    if (m < 4 || side * side != m || (side & (side - 1)) != 0)
        throw ParameterError("modulation_order must be a square power of two (4, 16, 64, ...)");
    p_.n_subcarriers = p.n_symbols * p.bor;
}

} // namespace trsec
