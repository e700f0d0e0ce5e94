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


#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wavail/error.hpp"
#include "wavail/spectrum/channels.hpp"
#include "wavail/spectrum/simulator.hpp"

using namespace wavail;
using namespace wavail::spectrum;

namespace {

AggregatedSpectrum flat(double dbm, std::string id = "p") {
    AggregatedSpectrum s;
    s.position_id = std::move(id);
    s.start_khz = 2'400'000;
    s.bin_khz = 1000;
    s.bins.assign(100, dbm);
    return s;
}

}  // namespace

TEST_CASE("channel centres") {
    CHECK(channel_centre_mhz(1) == 2412.0);
    CHECK(channel_centre_mhz(6) == 2437.0);
    CHECK(channel_centre_mhz(13) == 2472.0);
    CHECK(channel_centre_mhz(14) == 2484.0);
    CHECK_THROWS_AS(channel_centre_mhz(0), DomainError);
    CHECK_THROWS_AS(channel_centre_mhz(15), DomainError);
}

TEST_CASE("channel power over the flat mask") {
    const auto s = flat(-40.0);
    CHECK(channel_power_mw(s, 6) == doctest::Approx(2.2e-3).epsilon(1e-12));
    CHECK(10.0 * std::log10(channel_power_mw(s, 6)) == doctest::Approx(-26.5758).epsilon(1e-5));
    CHECK(channel_power_mw(flat(-128.0), 3) == doctest::Approx(22.0 * std::pow(10.0, -12.8)).epsilon(1e-12));
    CHECK_THROWS_AS(channel_power_mw(s, 0), DomainError);

    AggregatedSpectrum narrow = s;
    narrow.bins.resize(30);  // 2400–2430 MHz: channel 6 mask not covered
    CHECK_THROWS_AS(channel_power_mw(narrow, 6), DomainError);
    CHECK(channel_power_mw(narrow, 1) == doctest::Approx(2.2e-3));
    CHECK(channel_power_mw(narrow, 2) == doctest::Approx(2.2e-3));
    CHECK_THROWS_AS(channel_power_mw(narrow, 3), DomainError);

    for (int ch = 1; ch <= 14; ++ch) CHECK(channel_power_mw(s, ch) == oracle::channel_mw_brute(s, ch));
}

TEST_CASE("channel power is monotone in each bin") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dbm(-100.0, -20.0);
    std::uniform_int_distribution<std::size_t> pick(0, 99);
    for (int trial = 0; trial < 500; ++trial) {
        auto s = flat(-95.0);
        for (auto& b : s.bins) b = dbm(rng);
        const int ch = 1 + static_cast<int>(rng() % 14);
        const double before = channel_power_mw(s, ch);
        s.bins[pick(rng)] += 3.0;
        CHECK(channel_power_mw(s, ch) >= before);
    }
}

TEST_CASE("overlap weight") {
    CHECK(overlap_weight(0) == 1.0);
    CHECK(overlap_weight(1) == doctest::Approx(0.77273).epsilon(1e-5));
    CHECK(overlap_weight(4) == doctest::Approx(2.0 / 22.0));
    CHECK(overlap_weight(5) == 0.0);
    CHECK(overlap_weight(13) == 0.0);
    CHECK_THROWS_AS(overlap_weight(-1), DomainError);
}

TEST_CASE("channel selection tie-breaks") {
    SpectrumSet quiet;
    quiet.ap = flat(-95.0, "ap");
    quiet.clients.emplace("c1", flat(-95.0, "c1"));
    CHECK(select_channel(quiet, PlanMode::client_aware, all_channels()).chosen_channel == 1);
    CHECK(select_channel(quiet, PlanMode::ap_only, all_channels()).chosen_channel == 1);
    CHECK(select_channel(quiet, PlanMode::ap_only, {2, 3, 6, 11}).chosen_channel == 6);
    CHECK(select_channel(quiet, PlanMode::ap_only, {2, 3, 4}).chosen_channel == 2);

    // equal client objective, AP quieter on 9
    SpectrumSet ap_breaks = quiet;
    for (std::size_t i = 0; i < 100; ++i) {
        const double f = 2400.5 + static_cast<double>(i);
        if (f < 2441.0) ap_breaks.ap->bins[i] = -60.0;
    }
    CHECK(select_channel(ap_breaks, PlanMode::client_aware, {1, 9}).chosen_channel == 9);

    CHECK_THROWS_AS(select_channel(quiet, PlanMode::ap_only, {}), DomainError);
    CHECK_THROWS_AS(select_channel(quiet, PlanMode::ap_only, {0, 3}), DomainError);
    SpectrumSet no_clients;
    no_clients.ap = flat(-95.0);
    CHECK_THROWS_AS(select_channel(no_clients, PlanMode::client_aware, all_channels()), DomainError);
    SpectrumSet no_ap;
    no_ap.clients.emplace("c", flat(-95.0));
    CHECK_THROWS_AS(select_channel(no_ap, PlanMode::ap_only, all_channels()), DomainError);
}

TEST_CASE("plan scores") {
    SpectrumSet set;
    set.ap = flat(-95.0, "ap");
    auto loud = flat(-95.0, "c1");
    for (std::size_t i = 20; i < 50; ++i) loud.bins[i] = -50.0;
    set.clients.emplace("c1", loud);
    set.clients.emplace("c2", flat(-95.0, "c2"));
    const auto plan = select_channel(set, PlanMode::client_aware, all_channels());
    CHECK(plan.per_channel_scores.size() == 14);
    for (const auto& [ch, score] : plan.per_channel_scores) {
        CHECK(score.objective >= 0.0);
        CHECK(score.objective == std::max(score.per_position_mw.at("c1"), score.per_position_mw.at("c2")));
        CHECK(score.objective >= plan.per_channel_scores.at(plan.chosen_channel).objective);
    }
    Objective ws;
    ws.kind = Objective::Kind::weighted_sum;
    ws.weights = {{"c1", 0.0}};
    const auto weighted = select_channel(set, PlanMode::client_aware, all_channels(), ws);
    CHECK(weighted.chosen_channel == 1);  // c1 ignored, everything quiet at c2
    ws.weights = {{"c1", -1.0}};
    CHECK_THROWS_AS(select_channel(set, PlanMode::client_aware, all_channels(), ws), DomainError);
}

TEST_CASE("optimizer agrees with brute force on seeded scenarios") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto scenario = oracle::random_scenario(seed);
        const auto set = build_spectrum_set(scenario, 0);
        CHECK(select_channel(set, PlanMode::client_aware, all_channels()).chosen_channel ==
              oracle::best_channel_brute(set, true));
        CHECK(select_channel(set, PlanMode::ap_only, all_channels()).chosen_channel ==
              oracle::best_channel_brute(set, false));
    }
}

TEST_CASE("divergence fixture") {
    const auto set = build_spectrum_set(oracle::divergence_fixture(), 0);
    const int ap = select_channel(set, PlanMode::ap_only, all_channels()).chosen_channel;
    const int client = select_channel(set, PlanMode::client_aware, all_channels()).chosen_channel;
    CHECK(ap == 6);
    CHECK(client == 14);
    CHECK((client < 4 || client > 8));
    CHECK(ap == oracle::best_channel_brute(set, false));
    CHECK(client == oracle::best_channel_brute(set, true));
}
