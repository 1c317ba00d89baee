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
#include <random>

#include "trsec/common.hpp"

namespace trsec
{

using Rng = std::mt19937_64;

// Stream identifiers for seed derivation. Each consumer of randomness gets its
// own stream so that adding draws in one place never shifts another.
enum class SeedStream : std::uint64_t
{
    Trial = 0x7472,
    Spreading = 0x5350,
    Selftest = 0x5354,
};

// SplitMix64 finalizer
std::uint64_t mix64(std::uint64_t x);

// Deterministic sub-seed for (master seed, stream, index); independent of the
// order in which indices are visited.
std::uint64_t derive_seed(std::uint64_t master, SeedStream stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// n i.i.d. draws of CN(0, 1): (g1 + j g2) / sqrt(2)
CVector complex_normal_vector(Eigen::Index n, Rng &rng);

} // namespace trsec
