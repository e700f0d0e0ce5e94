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


#ifndef WAVAIL_GROWTH_HPP
#define WAVAIL_GROWTH_HPP

#include <iosfwd>
#include <vector>

namespace wavail::growth {

struct CountPoint {
    double t_days;
    double count;
};

// At least two points, strictly increasing in time, positive counts.
class CountSeries {
public:
    explicit CountSeries(std::vector<CountPoint> points);

    [[nodiscard]] const std::vector<CountPoint>& points() const noexcept { return points_; }

private:
    std::vector<CountPoint> points_;
};

struct GrowthFit {
    double doubling_days;
    double intercept_log2;  // log2(count) at t = 0
    double r_squared;
};

// Ordinary least squares of log2(count) on t_days. A zero slope throws
// NoGrowthError; a negative slope yields a negative (halving) period.
GrowthFit fit_doubling(const CountSeries& series);

// from_t_days + doubling_days; throws unless the period is positive.
double predict_doubling_date(const GrowthFit& fit, double from_t_days);

// Two columns (t_days, count) separated by a comma, semicolon, tab or
// spaces. Blank lines, '#' comments and a non-numeric header are skipped.
CountSeries read_count_series(std::istream& is);

}  // namespace wavail::growth

#endif  // WAVAIL_GROWTH_HPP
