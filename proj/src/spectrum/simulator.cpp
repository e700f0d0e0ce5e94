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


#include "wavail/spectrum/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <nlohmann/json.hpp>
#include <random>

#include "wavail/error.hpp"
#include "wavail/rf_core.hpp"

namespace wavail::spectrum {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

bool finite(double x, double y) { return std::isfinite(x) && std::isfinite(y); }

}  // namespace

void Scenario::validate() const {
    detail::require(finite(ap_position.x, ap_position.y), "AP position must be finite");
    for (std::size_t i = 0; i < clients.size(); ++i) {
        const auto& c = clients[i];
        detail::require(finite(c.x, c.y), "client " + c.id + " position must be finite");
        for (std::size_t k = 0; k < i; ++k) detail::require(clients[k].id != c.id, "duplicate client id " + c.id);
    }
    for (const auto& e : emitters) {
        detail::require(e.channel >= kMinChannel && e.channel <= kMaxChannel, "emitter channel must lie in 1..14");
        detail::require(finite(e.x, e.y) && std::isfinite(e.tx_power_dbm), "emitter values must be finite");
    }
    detail::require(std::isfinite(noise_floor_dbm), "noise floor must be finite");
    detail::require(std::isfinite(shadowing_sigma_db) && shadowing_sigma_db >= 0.0,
                    "shadowing sigma must be non-negative");
}

std::vector<SensorPosition> sensor_positions(const Scenario& scenario) {
    std::vector<SensorPosition> out;
    out.push_back({0, "ap", scenario.ap_position.x, scenario.ap_position.y});
    std::uint16_t id = 1;
    for (const auto& c : scenario.clients) out.push_back({id++, c.id, c.x, c.y});
    return out;
}

double shadowing_db(const Scenario& scenario, std::uint16_t sensor_id, std::size_t emitter_index) {
    if (scenario.shadowing_sigma_db == 0.0) return 0.0;
    const std::uint64_t key =
        splitmix64(scenario.seed ^ splitmix64(0x5E50'0000ULL + sensor_id) ^ splitmix64(0xE417'0000'0000ULL + emitter_index));
    std::mt19937_64 rng(key);
    std::normal_distribution<double> draw(0.0, scenario.shadowing_sigma_db);
    return draw(rng);
}

std::vector<double> simulate_levels_dbm(const Scenario& scenario, const SensorPosition& sensor) {
    scenario.validate();
    std::vector<double> mw(kSimBins, 0.0);
    const double spread_db = 10.0 * std::log10(2.0 * kChannelHalfWidthMhz);
    for (std::size_t e = 0; e < scenario.emitters.size(); ++e) {
        const auto& em = scenario.emitters[e];
        const Frequency f(channel_centre_mhz(em.channel) * 1e6);
        // Inside one wavelength the free-space formula is meaningless; pin the
        // loss at its far-field floor instead.
        const double d = std::max(std::hypot(em.x - sensor.x, em.y - sensor.y), f.wavelength_m());
        const double total_dbm =
            em.tx_power_dbm - fspl_db(LinkGeometry(d, f)) + shadowing_db(scenario, sensor.sensor_id, e);
        const double per_bin_mw = dbm_to_mw(total_dbm - spread_db);
        const double centre_khz = channel_centre_mhz(em.channel) * 1000.0;
        for (std::size_t i = 0; i < kSimBins; ++i) {
            const double bin_centre = kSimStartKhz + (static_cast<double>(i) + 0.5) * kSimBinKhz;
            if (std::abs(bin_centre - centre_khz) <= kChannelHalfWidthMhz * 1000.0) mw[i] += per_bin_mw;
        }
    }
    std::vector<double> out(kSimBins);
    for (std::size_t i = 0; i < kSimBins; ++i) {
        out[i] = mw[i] > 0.0 ? std::max(scenario.noise_floor_dbm, mw_to_dbm(mw[i])) : scenario.noise_floor_dbm;
    }
    return out;
}

std::vector<SensorSweep> simulate_sweeps(const Scenario& scenario, std::span<const SensorPosition> sensors,
                                         std::uint64_t t_ms) {
    std::vector<SensorSweep> out;
    out.reserve(sensors.size());
    for (const auto& sensor : sensors) {
        SensorSweep s{sensor.sensor_id, t_ms, kSimStartKhz, kSimBinKhz, {}};
        s.bins.reserve(kSimBins);
        for (double level : simulate_levels_dbm(scenario, sensor)) {
            s.bins.push_back(static_cast<std::int8_t>(std::clamp(std::round(level), -128.0, 127.0)));
        }
        out.push_back(std::move(s));
    }
    return out;
}

SpectrumSet build_spectrum_set(const Scenario& scenario, std::uint64_t t_ms) {
    const auto sensors = sensor_positions(scenario);
    const auto sweeps = simulate_sweeps(scenario, sensors, t_ms);
    SpectrumSet set;
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        auto spec = aggregate(std::span(&sweeps[i], 1), AggregationMode::max_hold(), sensors[i].position_id);
        if (i == 0) {
            set.ap = std::move(spec);
        } else {
            set.clients.insert_or_assign(sensors[i].position_id, std::move(spec));
        }
    }
    return set;
}

Scenario read_scenario(std::istream& is) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("scenario is not valid JSON: ") + e.what());
    }
    try {
        Scenario s;
        if (j.contains("ap_position")) {
            s.ap_position = {j["ap_position"].at("x").get<double>(), j["ap_position"].at("y").get<double>()};
        }
        for (const auto& c : j.value("clients", nlohmann::json::array())) {
            s.clients.push_back({c.at("id").get<std::string>(), c.at("x").get<double>(), c.at("y").get<double>()});
        }
        for (const auto& e : j.value("emitters", nlohmann::json::array())) {
            s.emitters.push_back({e.at("channel").get<int>(), e.at("tx_power_dbm").get<double>(),
                                  e.at("x").get<double>(), e.at("y").get<double>()});
        }
        s.noise_floor_dbm = j.value("noise_floor_dbm", s.noise_floor_dbm);
        s.shadowing_sigma_db = j.value("shadowing_sigma_db", s.shadowing_sigma_db);
        s.seed = j.value("seed", s.seed);
        s.validate();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed scenario: ") + e.what());
    }
}

std::string scenario_to_json(const Scenario& s) {
    nlohmann::ordered_json j;
    j["ap_position"] = {{"x", s.ap_position.x}, {"y", s.ap_position.y}};
    j["clients"] = nlohmann::ordered_json::array();
    for (const auto& c : s.clients) j["clients"].push_back({{"id", c.id}, {"x", c.x}, {"y", c.y}});
    j["emitters"] = nlohmann::ordered_json::array();
    for (const auto& e : s.emitters) {
        j["emitters"].push_back({{"channel", e.channel}, {"tx_power_dbm", e.tx_power_dbm}, {"x", e.x}, {"y", e.y}});
    }
    j["noise_floor_dbm"] = s.noise_floor_dbm;
    j["shadowing_sigma_db"] = s.shadowing_sigma_db;
    j["seed"] = s.seed;
    return j.dump(2);
}

}  // namespace wavail::spectrum
