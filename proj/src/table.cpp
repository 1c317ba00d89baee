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

#include "trsec/table.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace trsec
{

static std::string csv_cell(const Cell &c);

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw ParameterError("table row has " + std::to_string(row.size()) + " cells, expected " +
                             std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

std::size_t Table::column(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw ParameterError("no column named '" + std::string(name) + "'");
}

double Table::number(std::size_t row, std::string_view name) const
{
    const Cell &c = rows.at(row).at(column(name));
    if (const auto *d = std::get_if<double>(&c))
        return *d;
    if (const auto *n = std::get_if<long long>(&c))
        return static_cast<double>(*n);
    if (std::holds_alternative<std::monostate>(c))
        return std::numeric_limits<double>::quiet_NaN();
    throw ParameterError("column '" + std::string(name) + "' is not numeric");
}

std::string Table::text(std::size_t row, std::string_view name) const
{
    const Cell &c = rows.at(row).at(column(name));
    if (const auto *s = std::get_if<std::string>(&c))
        return *s;
    return csv_cell(c);
}

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw ParameterError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

static std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

static std::string csv_cell(const Cell &c)
{
    struct Visitor
    {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return std::isnan(v) ? "" : format_double(v); }
        std::string operator()(const std::string &s) const { return csv_escape(s); }
    };
    return std::visit(Visitor{}, c);
}

void write_csv(std::ostream &os, const Table &t)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto &row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream &os, const Table &t)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &row : t.rows)
    {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            const Cell &c = row[i];
            nlohmann::ordered_json &slot = obj[t.columns[i]];
            if (const auto *d = std::get_if<double>(&c))
            {
                if (std::isinf(*d))
                    slot = *d > 0 ? "inf" : "-inf";
                else if (!std::isnan(*d))
                    slot = *d;
            }
            else if (const auto *n = std::get_if<long long>(&c))
                slot = *n;
            else if (const auto *s = std::get_if<std::string>(&c))
                slot = *s;
        }
        out.push_back(std::move(obj));
    }
    os << out.dump(2) << '\n';
}

void write_table(std::ostream &os, const Table &t, OutputFormat format)
{
    if (format == OutputFormat::Csv)
        write_csv(os, t);
    else
        write_json(os, t);
}

Table result_table(const std::vector<ResultRow> &rows)
{
    Table t;
    t.columns = {"variable",
                 "value",
                 "decoder",
                 "bor",
                 "alpha",
                 "snr_bob_db",
                 "snr_eve_db",
                 "n_trials",
                 "degenerate_count",
                 "sinr_bob_emp",
                 "sinr_bob_analytic",
                 "sinr_eve_emp",
                 "sinr_eve_analytic",
                 "sr_empirical",
                 "sr_empirical_unclamped",
                 "sr_ergodic",
                 "sr_plugin",
                 "sr_analytic",
                 "tightness_gap",
                 "waterfill_gain",
                 "sr_waterfill_before",
                 "sr_waterfill_after",
                 "waterfill_trials",
                 "waterfill_objective_gain",
                 "waterfill_max_residual",
                 "waterfill_converged"};
    for (const auto &r : rows)
    {
        const bool wf = r.waterfill_gain.has_value();
        const Cell none{};
        t.add_row({r.variable,
                   r.value,
                   std::string(to_string(r.decoder)),
                   static_cast<long long>(r.bor),
                   r.alpha,
                   r.snr_bob_db,
                   r.snr_eve_db,
                   static_cast<long long>(r.n_trials),
                   static_cast<long long>(r.degenerate_count),
                   r.sinr_bob_emp,
                   r.sinr_bob_analytic,
                   r.sinr_eve_emp,
                   r.sinr_eve_analytic,
                   r.sr_empirical,
                   r.sr_empirical_unclamped,
                   r.sr_ergodic,
                   r.sr_plugin,
                   r.sr_analytic,
                   r.tightness_gap,
                   wf ? Cell{*r.waterfill_gain} : none,
                   wf ? Cell{r.sr_waterfill_before} : none,
                   wf ? Cell{r.sr_waterfill_after} : none,
                   static_cast<long long>(r.waterfill_trials),
                   wf ? Cell{r.waterfill_objective_gain} : none,
                   wf ? Cell{r.waterfill_max_residual} : none,
                   wf ? Cell{r.waterfill_converged} : none});
    }
    return t;
}

} // namespace trsec
