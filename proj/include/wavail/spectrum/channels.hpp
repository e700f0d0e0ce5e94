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


#ifndef WAVAIL_SPECTRUM_CHANNELS_HPP
#define WAVAIL_SPECTRUM_CHANNELS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "wavail/spectrum/aggregate.hpp"

namespace wavail::spectrum {

inline constexpr int kMinChannel = 1;
inline constexpr int kMaxChannel = 14;
inline constexpr double kChannelHalfWidthMhz = 11.0;

// 2407 + 5·ch MHz for channels 1–13, 2484 MHz for channel 14.
double channel_centre_mhz(int channel);

// Sum of 10^(dBm/10) over bins whose centres lie within ±11 MHz of the
// channel centre. The spectrum must cover the whole mask.
double channel_power_mw(const AggregatedSpectrum& spec, int channel);

// Coupling between channels `distance` apart on the 5 MHz grid under a
// triangular 22 MHz mask: max(0, (22 − 5d)/22).
double overlap_weight(int channel_distance);

enum class PlanMode { ap_only, client_aware };

struct Objective {
    enum class Kind { minimax, weighted_sum };

    Kind kind = Kind::minimax;
    // Per-client weights for weighted_sum; clients without an entry weigh 1.
    std::map<std::string, double> weights;
};

struct SpectrumSet {
    std::optional<AggregatedSpectrum> ap;
    std::map<std::string, AggregatedSpectrum> clients;
};

struct ChannelScore {
    std::map<std::string, double> per_position_mw;
    double objective = 0.0;
    std::optional<double> ap_mw;
};

struct ChannelPlan {
    int chosen_channel = 0;
    PlanMode mode = PlanMode::client_aware;
    std::map<int, ChannelScore> per_channel_scores;
};

std::set<int> all_channels();

// Exhaustive scoring of every candidate. ap_only scores the AP spectrum
// alone; client_aware scores the client positions. Ties on the objective
// go to the lower AP power, then to channels 1/6/11, then to the lowest
// channel number.
ChannelPlan select_channel(const SpectrumSet& spectra, PlanMode mode, const std::set<int>& candidates,
                           const Objective& objective = {});

const char* to_string(PlanMode mode);

}  // namespace wavail::spectrum

#endif  // WAVAIL_SPECTRUM_CHANNELS_HPP
