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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "trsec/harness.hpp"

namespace trsec
{

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);

    std::size_t column(std::string_view name) const; // throws ParameterError when absent
    double number(std::size_t row, std::string_view name) const; // NaN for empty cells
    std::string text(std::size_t row, std::string_view name) const;
};

enum class OutputFormat
{
    Csv,
    Json,
};

OutputFormat parse_output_format(std::string_view name);

// Header row, then one line per row; doubles with 9 significant digits,
// empty cells for missing values.
void write_csv(std::ostream &os, const Table &t);

// Array of objects keyed by column name; NaN and missing become null, infinities "inf"/"-inf".
void write_json(std::ostream &os, const Table &t);

void write_table(std::ostream &os, const Table &t, OutputFormat format);

std::string format_double(double v);

Table result_table(const std::vector<ResultRow> &rows);

} // namespace trsec
