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


#include "wavail/spectrum/channels.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "wavail/error.hpp"
#include "wavail/rf_core.hpp"

namespace wavail::spectrum {

namespace {

void check_channel(int channel) {
    if (channel < kMinChannel || channel > kMaxChannel) {
        throw DomainError("channel " + std::to_string(channel) + " is outside 1..14");
    }
}

bool preferred(int channel) { return channel == 1 || channel == 6 || channel == 11; }

}  // namespace

double channel_centre_mhz(int channel) {
    check_channel(channel);
    return channel == 14 ? 2484.0 : 2407.0 + 5.0 * channel;
}

double channel_power_mw(const AggregatedSpectrum& spec, int channel) {
    const double centre_khz = channel_centre_mhz(channel) * 1000.0;
    const double half_khz = kChannelHalfWidthMhz * 1000.0;
    const double grid_lo = spec.start_khz;
    const double grid_hi = grid_lo + static_cast<double>(spec.bins.size()) * spec.bin_khz;
    if (spec.bin_khz == 0 || centre_khz - half_khz < grid_lo || centre_khz + half_khz > grid_hi) {
        throw DomainError("spectrum grid does not cover the mask of channel " + std::to_string(channel));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < spec.bins.size(); ++i) {
        if (std::abs(spec.bin_centre_khz(i) - centre_khz) <= half_khz) sum += dbm_to_mw(spec.bins[i]);
    }
    return sum;
}

double overlap_weight(int channel_distance) {
    detail::require(channel_distance >= 0, "channel distance must be non-negative");
    return std::max(0.0, (22.0 - 5.0 * channel_distance) / 22.0);
}

std::set<int> all_channels() {
    std::set<int> out;
    for (int ch = kMinChannel; ch <= kMaxChannel; ++ch) out.insert(ch);
    return out;
}

const char* to_string(PlanMode mode) { return mode == PlanMode::ap_only ? "ap-only" : "client-aware"; }

ChannelPlan select_channel(const SpectrumSet& spectra, PlanMode mode, const std::set<int>& candidates,
                           const Objective& objective) {
    detail::require(!candidates.empty(), "no candidate channels");
    for (const auto& [id, w] : objective.weights) {
        detail::require(std::isfinite(w) && w >= 0.0, "objective weight for " + id + " must be non-negative");
    }
    for (int ch : candidates) check_channel(ch);

    std::map<std::string, const AggregatedSpectrum*> positions;
    if (mode == PlanMode::ap_only) {
        detail::require(spectra.ap.has_value(), "ap-only planning needs the AP spectrum");
        positions.emplace("ap", &*spectra.ap);
    } else {
        detail::require(!spectra.clients.empty(), "client-aware planning needs at least one client spectrum");
        for (const auto& [id, spec] : spectra.clients) positions.emplace(id, &spec);
    }

    ChannelPlan plan;
    plan.mode = mode;
    for (int ch : candidates) {
        ChannelScore score;
        double worst = 0.0;
        double weighted = 0.0;
        for (const auto& [id, spec] : positions) {
            const double p = channel_power_mw(*spec, ch);
            score.per_position_mw[id] = p;
            worst = std::max(worst, p);
            const auto w = objective.weights.find(id);
            weighted += (w == objective.weights.end() ? 1.0 : w->second) * p;
        }
        score.objective = objective.kind == Objective::Kind::minimax ? worst : weighted;
        if (spectra.ap) score.ap_mw = channel_power_mw(*spectra.ap, ch);
        plan.per_channel_scores.emplace(ch, std::move(score));
    }

    auto rank = [](int ch, const ChannelScore& s) {
        return std::make_tuple(s.objective, s.ap_mw.value_or(0.0), preferred(ch) ? 0 : 1, ch);
    };
    const auto best = std::min_element(
        plan.per_channel_scores.begin(), plan.per_channel_scores.end(),
        [&](const auto& a, const auto& b) { return rank(a.first, a.second) < rank(b.first, b.second); });
    plan.chosen_channel = best->first;
    return plan;
}

}  // namespace wavail::spectrum
