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


#include "wavail/spectrum/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavail/error.hpp"
#include "wavail/rf_core.hpp"

namespace wavail::spectrum {

SpectrumAggregator::SpectrumAggregator(std::string position_id, AggregationMode mode)
    : position_id_(std::move(position_id)), mode_(mode) {
    if (mode_.kind == AggregationMode::Kind::ewma) {
        detail::require(mode_.alpha > 0.0 && mode_.alpha <= 1.0, "EWMA alpha must lie in (0, 1]");
    }
}

void SpectrumAggregator::append(const SensorSweep& sweep) {
    validate(sweep);
    std::lock_guard lock(mu_);
    if (!start_khz_) {
        start_khz_ = sweep.start_khz;
        bin_khz_ = sweep.bin_khz;
        n_bins_ = sweep.bins.size();
        max_hold_dbm_.assign(n_bins_, -std::numeric_limits<double>::infinity());
    } else if (sweep.start_khz != *start_khz_ || sweep.bin_khz != bin_khz_ || sweep.bins.size() != n_bins_) {
        throw DomainError("sweep from sensor " + std::to_string(sweep.sensor_id) +
                          " is on a different frequency grid; resampling is not supported");
    }

    auto [it, fresh] = sensors_.try_emplace(sweep.sensor_id);
    SensorState& st = it->second;
    if (mode_.kind == AggregationMode::Kind::ewma && !fresh && sweep.timestamp_ms < st.last_ms) {
        throw DomainError("sweep from sensor " + std::to_string(sweep.sensor_id) + " arrived out of time order");
    }

    if (mode_.kind == AggregationMode::Kind::max_hold) {
        for (std::size_t i = 0; i < n_bins_; ++i) {
            max_hold_dbm_[i] = std::max(max_hold_dbm_[i], static_cast<double>(sweep.bins[i]));
        }
    } else if (fresh) {
        st.smoothed_mw.resize(n_bins_);
        for (std::size_t i = 0; i < n_bins_; ++i) st.smoothed_mw[i] = dbm_to_mw(sweep.bins[i]);
    } else {
        const double a = mode_.alpha;
        for (std::size_t i = 0; i < n_bins_; ++i) {
            st.smoothed_mw[i] = a * dbm_to_mw(sweep.bins[i]) + (1.0 - a) * st.smoothed_mw[i];
        }
    }
    st.last_ms = fresh ? sweep.timestamp_ms : std::max(st.last_ms, sweep.timestamp_ms);
}

AggregatedSpectrum SpectrumAggregator::snapshot() const {
    std::lock_guard lock(mu_);
    detail::require(start_khz_.has_value(), "no sweeps have been aggregated");
    AggregatedSpectrum out;
    out.position_id = position_id_;
    out.mode = mode_;
    out.start_khz = *start_khz_;
    out.bin_khz = bin_khz_;
    for (const auto& [id, st] : sensors_) out.last_update_ms[id] = st.last_ms;

    if (mode_.kind == AggregationMode::Kind::max_hold) {
        out.bins = max_hold_dbm_;
        return out;
    }
    out.bins.assign(n_bins_, -std::numeric_limits<double>::infinity());
    for (const auto& [id, st] : sensors_) {
        for (std::size_t i = 0; i < n_bins_; ++i) out.bins[i] = std::max(out.bins[i], mw_to_dbm(st.smoothed_mw[i]));
    }
    return out;
}

AggregatedSpectrum aggregate(std::span<const SensorSweep> sweeps, AggregationMode mode, std::string position_id) {
    detail::require(!sweeps.empty(), "nothing to aggregate");
    std::vector<const SensorSweep*> order;
    order.reserve(sweeps.size());
    for (const auto& s : sweeps) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(),
                     [](const SensorSweep* a, const SensorSweep* b) { return a->timestamp_ms < b->timestamp_ms; });
    SpectrumAggregator agg(std::move(position_id), mode);
    for (const auto* s : order) agg.append(*s);
    return agg.snapshot();
}

}  // namespace wavail::spectrum
