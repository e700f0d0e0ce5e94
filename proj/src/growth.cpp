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


#include "wavail/growth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

#include "wavail/error.hpp"

namespace wavail::growth {

CountSeries::CountSeries(std::vector<CountPoint> points) : points_(std::move(points)) {
    detail::require(points_.size() >= 2, "a count series needs at least two points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        detail::require(std::isfinite(points_[i].t_days) && std::isfinite(points_[i].count),
                        "count series values must be finite");
        detail::require(points_[i].count > 0.0, "counts must be positive");
        if (i > 0) detail::require(points_[i].t_days > points_[i - 1].t_days, "times must be strictly increasing");
    }
}

GrowthFit fit_doubling(const CountSeries& series) {
    const auto& pts = series.points();
    const double n = static_cast<double>(pts.size());
    double t_mean = 0.0;
    double y_mean = 0.0;
    for (const auto& p : pts) {
        t_mean += p.t_days;
        y_mean += std::log2(p.count);
    }
    t_mean /= n;
    y_mean /= n;

    // Centred sums keep the slope independent of where t = 0 sits.
    double stt = 0.0;
    double sty = 0.0;
    double syy = 0.0;
    for (const auto& p : pts) {
        const double dt = p.t_days - t_mean;
        const double dy = std::log2(p.count) - y_mean;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    const double slope = sty / stt;
    if (slope == 0.0 || syy == 0.0) throw NoGrowthError("counts do not change over time; no doubling period");

    double ss_res = 0.0;
    for (const auto& p : pts) {
        const double r = std::log2(p.count) - (y_mean + slope * (p.t_days - t_mean));
        ss_res += r * r;
    }
    const double r2 = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return {1.0 / slope, y_mean - slope * t_mean, r2};
}

double predict_doubling_date(const GrowthFit& fit, double from_t_days) {
    detail::require(fit.doubling_days > 0.0, "series is not growing; no future doubling date");
    return from_t_days + fit.doubling_days;
}

namespace {

bool parse_double(std::string_view s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace

CountSeries read_count_series(std::istream& is) {
    std::vector<CountPoint> pts;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace_if(line.begin(), line.end(), [](char c) { return c == ',' || c == ';' || c == '\t'; }, ' ');
        std::string_view sv(line);
        const auto first = sv.find_first_not_of(' ');
        if (first == std::string_view::npos) continue;
        sv.remove_prefix(first);
        const auto sep = sv.find(' ');
        double t = 0.0;
        double c = 0.0;
        const bool ok = sep != std::string_view::npos && parse_double(sv.substr(0, sep), t) &&
                        parse_double(sv.substr(sep + 1), c);
        if (!ok) {
            if (pts.empty()) continue;  // header
            throw FormatError("line " + std::to_string(line_no) + ": expected two numeric columns");
        }
        pts.push_back({t, c});
    }
    return CountSeries(std::move(pts));
}

}  // namespace wavail::growth
