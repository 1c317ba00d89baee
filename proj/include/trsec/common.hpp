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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace trsec
{

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Invalid user-supplied parameter (CLI exit code 1)
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A channel draw for which the null space or a ZF gain is numerically singular.
// Monte Carlo loops catch this, count the trial, and leave it out of the averages.
class DegenerateTrialError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Solver failure under strict mode (CLI exit code 2)
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Eavesdropper decoding structure, set by what the handshake leaks:
//   SDS  despreading only, G = S^H
//   MF   matched filter on the equivalent channel, G = S^H H_B H_E^*
//   OC   own-channel knowledge, G = S^H H_E^*
enum class Decoder
{
    SDS,
    MF,
    OC
};

inline constexpr Decoder all_decoders[] = {Decoder::SDS, Decoder::MF, Decoder::OC};

std::string_view to_string(Decoder d);
Decoder parse_decoder(std::string_view name); // case-insensitive, throws ParameterError

inline std::size_t index_of(Decoder d) { return static_cast<std::size_t>(d); }

} // namespace trsec
