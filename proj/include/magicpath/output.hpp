// Copyright 2026 The magicpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MAGICPATH_OUTPUT_HPP
#define MAGICPATH_OUTPUT_HPP

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace magicpath {

inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class Format { table, csv, json };

inline Format parse_format(std::string_view name)
{
    if (name == "table")
        return Format::table;
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected table, csv or json)");
}

/// One count as emitted by the command line tool.
struct OutputRecord {
    int n = 0;
    Graph graph = Graph::path;
    Mode mode = Mode::fast;
    Convention convention = Convention::canonical;
    std::uint64_t total = 0;
    /// Present only when per-constant counts were asked for.
    std::optional<std::vector<std::pair<MagicConstant, std::uint64_t>>> per_k;
    std::int64_t elapsed_ms = 0;
    std::string engine_version{kEngineVersion};

    static OutputRecord from(const CountReport &report, bool with_per_k)
    {
        OutputRecord record;
        record.n = report.n;
        record.graph = report.graph;
        record.mode = report.mode;
        record.convention = report.convention;
        record.total = report.total;
        if (with_per_k)
            record.per_k.emplace(report.per_k.begin(), report.per_k.end());
        record.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
        return record;
    }
};

/// Keys keep a fixed order; elapsed_ms is always last so timing can be
/// stripped before comparing runs.
inline nlohmann::ordered_json to_json(const OutputRecord &r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["graph"] = to_string(r.graph);
    j["mode"] = to_string(r.mode);
    j["convention"] = to_string(r.convention);
    j["total"] = r.total;
    if (r.per_k) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto &[k, count] : *r.per_k)
            rows.push_back({{"k", k}, {"count", count}});
        j["per_k"] = std::move(rows);
    }
    j["engine_version"] = r.engine_version;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

namespace detail {

inline std::string_view length_heading(Graph g)
{
    return g == Graph::path ? "Path Length" : "Cycle Length";
}

inline std::string_view csv_heading(Graph g)
{
    return g == Graph::path ? "path_length" : "cycle_length";
}

inline void table_rows(std::ostream &out, Graph graph, std::span<const OutputRecord> records)
{
    const std::string_view left = length_heading(graph);
    const std::string_view right = "Number of Solutions";
    out << left << "  " << right << '\n';
    for (const auto &r : records)
        out << std::setw(static_cast<int>(left.size())) << r.n << "  "
            << std::setw(static_cast<int>(right.size())) << r.total << '\n';
}

} // namespace detail

/// Renders a single count. Timing only appears in JSON.
inline std::string format_record(const OutputRecord &r, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::json:
        out << to_json(r).dump(2) << '\n';
        break;
    case Format::csv:
        if (r.per_k) {
            out << detail::csv_heading(r.graph) << ",magic_constant,solutions\n";
            for (const auto &[k, count] : *r.per_k)
                out << r.n << ',' << k << ',' << count << '\n';
            out << r.n << ",," << r.total << '\n';
        } else {
            out << detail::csv_heading(r.graph) << ",solutions\n" << r.n << ',' << r.total << '\n';
        }
        break;
    case Format::table:
        detail::table_rows(out, r.graph, std::span(&r, 1));
        if (r.per_k) {
            const std::string_view left = "Magic Constant";
            const std::string_view right = "Solutions";
            out << '\n' << left << "  " << right << '\n';
            for (const auto &[k, count] : *r.per_k)
                out << std::setw(static_cast<int>(left.size())) << k << "  "
                    << std::setw(static_cast<int>(right.size())) << count << '\n';
        }
        out << "(mode " << to_string(r.mode) << ", convention " << to_string(r.convention)
            << ")\n";
        break;
    }
    return out.str();
}

/// Renders one row per record, in the layout Path Length / Number of
/// Solutions. JSON emits an array of records.
inline std::string format_table(std::span<const OutputRecord> records, Format format)
{
    const Graph graph = records.empty() ? Graph::path : records.front().graph;
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        auto rows = nlohmann::ordered_json::array();
        for (const auto &r : records)
            rows.push_back(to_json(r));
        out << rows.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << detail::csv_heading(graph) << ",solutions\n";
        for (const auto &r : records)
            out << r.n << ',' << r.total << '\n';
        break;
    case Format::table:
        detail::table_rows(out, graph, records);
        break;
    }
    return out.str();
}

} // namespace magicpath

#endif
