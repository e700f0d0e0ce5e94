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


#ifndef WAVAIL_SPECTRUM_SIMULATOR_HPP
#define WAVAIL_SPECTRUM_SIMULATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wavail/spectrum/channels.hpp"
#include "wavail/spectrum/sweep.hpp"

namespace wavail::spectrum {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Client {
    std::string id;
    double x = 0.0;
    double y = 0.0;
};

struct Emitter {
    int channel = 1;
    double tx_power_dbm = 0.0;
    double x = 0.0;
    double y = 0.0;
};

struct Scenario {
    Point ap_position;
    std::vector<Client> clients;
    std::vector<Emitter> emitters;
    double noise_floor_dbm = -95.0;
    double shadowing_sigma_db = 4.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SensorPosition {
    std::uint16_t sensor_id = 0;
    std::string position_id;
    double x = 0.0;
    double y = 0.0;
};

// The simulated band: 100 one-MHz bins from 2400 MHz.
inline constexpr std::uint32_t kSimStartKhz = 2'400'000;
inline constexpr std::uint16_t kSimBinKhz = 1'000;
inline constexpr std::size_t kSimBins = 100;

// Sensor 0 sits at the AP ("ap"); sensors 1..N at the clients in order.
std::vector<SensorPosition> sensor_positions(const Scenario& scenario);

// Shadowing offset in dB for one (sensor, emitter) link: a single N(0, σ²)
// draw from a generator seeded by (scenario seed, sensor, emitter index).
double shadowing_db(const Scenario& scenario, std::uint16_t sensor_id, std::size_t emitter_index);

// Unquantized per-bin level in dBm seen by one sensor, floored at the
// scenario noise floor.
std::vector<double> simulate_levels_dbm(const Scenario& scenario, const SensorPosition& sensor);

// One sweep per sensor, levels rounded to the nearest dBm and clamped to int8.
std::vector<SensorSweep> simulate_sweeps(const Scenario& scenario, std::span<const SensorPosition> sensors,
                                         std::uint64_t t_ms);

// Simulates every position of the scenario at t_ms and aggregates each
// position's sweeps (max-hold) into the planner's input.
SpectrumSet build_spectrum_set(const Scenario& scenario, std::uint64_t t_ms);

// Scenario documents are JSON objects mirroring Scenario field for field:
// {"ap_position":{"x":0,"y":0},"clients":[{"id":"c1","x":30,"y":0}],
//  "emitters":[{"channel":6,"tx_power_dbm":20,"x":1,"y":2}],
//  "noise_floor_dbm":-95,"shadowing_sigma_db":4,"seed":1}
Scenario read_scenario(std::istream& is);
std::string scenario_to_json(const Scenario& scenario);

}  // namespace wavail::spectrum

#endif  // WAVAIL_SPECTRUM_SIMULATOR_HPP
