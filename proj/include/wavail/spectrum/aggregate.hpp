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


#ifndef WAVAIL_SPECTRUM_AGGREGATE_HPP
#define WAVAIL_SPECTRUM_AGGREGATE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavail/spectrum/sweep.hpp"

namespace wavail::spectrum {

struct AggregationMode {
    enum class Kind { max_hold, ewma };

    Kind kind = Kind::max_hold;
    double alpha = 0.3;  // EWMA weight of the newest sweep, (0, 1]

    static AggregationMode max_hold() { return {Kind::max_hold, 0.3}; }
    static AggregationMode ewma(double alpha = 0.3) { return {Kind::ewma, alpha}; }
};

struct AggregatedSpectrum {
    std::string position_id;
    AggregationMode mode;
    std::uint32_t start_khz = 0;
    std::uint16_t bin_khz = 0;
    std::vector<double> bins;  // dBm
    std::map<std::uint16_t, std::uint64_t> last_update_ms;

    [[nodiscard]] double bin_centre_khz(std::size_t i) const {
        return start_khz + (static_cast<double>(i) + 0.5) * bin_khz;
    }
};

// Merges sweeps from several sensors onto one grid. append() may be called
// from several threads. Within one sensor, EWMA mode requires
// non-decreasing timestamps; across sensors the interleaving is irrelevant.
class SpectrumAggregator {
public:
    SpectrumAggregator(std::string position_id, AggregationMode mode);

    void append(const SensorSweep& sweep);

    [[nodiscard]] AggregatedSpectrum snapshot() const;

private:
    struct SensorState {
        std::vector<double> smoothed_mw;
        std::uint64_t last_ms = 0;
    };

    std::string position_id_;
    AggregationMode mode_;
    mutable std::mutex mu_;
    std::optional<std::uint32_t> start_khz_;
    std::uint16_t bin_khz_ = 0;
    std::size_t n_bins_ = 0;
    std::vector<double> max_hold_dbm_;
    std::map<std::uint16_t, SensorState> sensors_;
};

// Batch form: sweeps are applied in timestamp order (stable), so any
// interleaving of per-sensor streams gives the same result.
AggregatedSpectrum aggregate(std::span<const SensorSweep> sweeps, AggregationMode mode,
                             std::string position_id = "");

}  // namespace wavail::spectrum

#endif  // WAVAIL_SPECTRUM_AGGREGATE_HPP
