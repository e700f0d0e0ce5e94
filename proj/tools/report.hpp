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


#ifndef WAVAIL_TOOLS_REPORT_HPP
#define WAVAIL_TOOLS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wavail::cli {

using Value = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

// What one subcommand produced, independent of the output format.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, Value>> results;
    std::optional<Table> table;

    Report& add(std::string key, Value v) {
        results.emplace_back(std::move(key), std::move(v));
        return *this;
    }
};

enum class Format { table, json, csv };

// table: aligned "key  value" lines, then the table if any.
// json:  {"command": ..., "results": {...}, "table": {"columns": [...], "rows": [[...]]}}
// csv:   the table with its header; without a table, "key,value" rows.
void render(std::ostream& os, const Report& report, Format format);

}  // namespace wavail::cli

#endif  // WAVAIL_TOOLS_REPORT_HPP
