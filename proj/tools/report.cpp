// SPDX-License-Identifier: Apache-2.0
//
// wavail - wireless availability planning toolkit
// Copyright (C) 2026 The wavail authors
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


#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>

#include "wavail/format.hpp"

namespace wavail::cli {

namespace {

std::string human(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", x);
                return buf;
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                return x;
            }
        },
        v);
}

std::string exact(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return fmt_num(*d);
    return human(v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

nlohmann::ordered_json to_json(const Value& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

void render_table(std::ostream& os, const Report& r) {
    std::size_t key_width = 0;
    for (const auto& [k, v] : r.results) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : r.results) {
        os << k << std::string(key_width - k.size() + 2, ' ') << human(v) << '\n';
    }
    if (!r.table) return;
    if (!r.results.empty()) os << '\n';
    const auto& t = *r.table;
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = t.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(human(row[c]));
            widths[c] = std::max(widths[c], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) os << "  ";
            os << std::string(widths[c] - line[c].size(), ' ') << line[c];
        }
        os << '\n';
    };
    emit(t.columns);
    for (const auto& line : cells) emit(line);
}

void render_json(std::ostream& os, const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["results"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.results) j["results"][k] = to_json(v);
    if (r.table) {
        j["table"]["columns"] = r.table->columns;
        auto& rows = j["table"]["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : r.table->rows) {
            auto& out = rows.emplace_back(nlohmann::ordered_json::array());
            for (const auto& v : row) out.push_back(to_json(v));
        }
    }
    os << j.dump(2) << '\n';
}

void render_csv(std::ostream& os, const Report& r) {
    if (!r.table) {
        os << "key,value\n";
        for (const auto& [k, v] : r.results) os << csv_field(k) << ',' << csv_field(exact(v)) << '\n';
        return;
    }
    const auto& t = *r.table;
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(exact(row[c]));
        os << '\n';
    }
}

}  // namespace

void render(std::ostream& os, const Report& report, Format format) {
    switch (format) {
        case Format::table: render_table(os, report); break;
        case Format::json: render_json(os, report); break;
        case Format::csv: render_csv(os, report); break;
    }
}

}  // namespace wavail::cli
