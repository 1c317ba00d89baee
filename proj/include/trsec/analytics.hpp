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

#include <string>
#include <string_view>

#include "trsec/common.hpp"

namespace trsec
{

// Closed-form ergodic SINR models. Infinite SINRs are ordinary values here.
struct SinrModelInputs
{
    double alpha = 0.5;
    int bor = 4;
    double noise_bob = 0.0; // sigma^2_{V,B}
    double noise_eve = 0.0; // sigma^2_{V,E}, 0 for an infinite Eve SNR

    void validate() const;
};

// alpha (U+1) / (U sigma_B^2)
double sinr_bob(const SinrModelInputs &in);

// SDS: (alpha/U) / (sigma_E^2 + (1-alpha)/U)
// MF:  (alpha (U+3)/U) / (sigma_E^2 + (1-alpha)/(U+1))
// OC:  (alpha/U) / (sigma_E^2/2 + (1-alpha)/U)
double sinr_eve(Decoder decoder, const SinrModelInputs &in);

// [log2(1 + gamma_B) - log2(1 + gamma_E)]^+ in bits per channel use.
// An infinite gamma_B is rejected since the rate would be unbounded.
double secrecy_rate(double sinr_bob, double sinr_eve);

double analytic_sr(Decoder decoder, const SinrModelInputs &in);

// Mean power of one despread component, per symbol.
enum class Component
{
    B1, // Bob data
    B2, // Bob noise
    E1, // Eve data
    E2, // Eve noise
    E3, // Eve AN
};

struct ComponentTerm
{
    Component component = Component::B1;
    Decoder decoder = Decoder::SDS; // ignored for B1 and B2
};

// "B1", "B2", "E1-SDS", "E3-MF", ...; throws ParameterError on anything else
ComponentTerm parse_component_term(std::string_view text);
std::string to_string(const ComponentTerm &term);

double appendix_expectation(const ComponentTerm &term, const SinrModelInputs &in);

} // namespace trsec
