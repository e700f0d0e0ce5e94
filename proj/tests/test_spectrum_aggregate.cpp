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

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "wavail/error.hpp"
#include "wavail/spectrum/aggregate.hpp"

using namespace wavail;
using namespace wavail::spectrum;

namespace {

SensorSweep sweep(std::uint16_t id, std::uint64_t t, std::vector<std::int8_t> bins) {
    return {id, t, 2'400'000, 1000, std::move(bins)};
}

std::vector<SensorSweep> random_sweeps(std::mt19937_64& rng, std::size_t count, std::size_t bins) {
    std::uniform_int_distribution<int> dbm(-128, 127);
    std::vector<SensorSweep> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::int8_t> b(bins);
        for (auto& x : b) x = static_cast<std::int8_t>(dbm(rng));
        out.push_back(sweep(static_cast<std::uint16_t>(i % 3), i, b));
    }
    return out;
}

}  // namespace

TEST_CASE("max-hold basics") {
    const std::vector<SensorSweep> one{sweep(1, 0, {-90, -40})};
    CHECK(aggregate(one, AggregationMode::max_hold()).bins == std::vector<double>{-90.0, -40.0});

    const std::vector<SensorSweep> two{sweep(1, 0, {-90, -40}), sweep(2, 0, {-50, -60})};
    const auto agg = aggregate(two, AggregationMode::max_hold(), "desk");
    CHECK(agg.bins == std::vector<double>{-50.0, -40.0});
    CHECK(agg.position_id == "desk");
    CHECK(agg.last_update_ms.size() == 2);

    const std::vector<SensorSweep> swapped{two[1], two[0]};
    CHECK(aggregate(swapped, AggregationMode::max_hold()).bins == agg.bins);
}

TEST_CASE("max-hold is commutative, associative and idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto sweeps = random_sweeps(rng, 6, 40);
        const auto base = aggregate(sweeps, AggregationMode::max_hold()).bins;

        auto shuffled = sweeps;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(aggregate(shuffled, AggregationMode::max_hold()).bins == base);

        // (a ∨ b) ∨ c == a ∨ (b ∨ c), merging the partial results as sweeps
        std::vector<SensorSweep> left(sweeps.begin(), sweeps.begin() + 3);
        std::vector<SensorSweep> right(sweeps.begin() + 3, sweeps.end());
        auto as_sweep = [](const AggregatedSpectrum& a) {
            SensorSweep s{9, 0, a.start_khz, a.bin_khz, {}};
            for (double v : a.bins) s.bins.push_back(static_cast<std::int8_t>(v));
            return s;
        };
        const std::vector<SensorSweep> merged{as_sweep(aggregate(left, AggregationMode::max_hold())),
                                              as_sweep(aggregate(right, AggregationMode::max_hold()))};
        CHECK(aggregate(merged, AggregationMode::max_hold()).bins == base);

        auto doubled = sweeps;
        doubled.insert(doubled.end(), sweeps.begin(), sweeps.end());
        CHECK(aggregate(doubled, AggregationMode::max_hold()).bins == base);

        for (const auto& s : sweeps) {
            for (std::size_t i = 0; i < s.bins.size(); ++i) CHECK(base[i] >= s.bins[i]);
        }
    }
}

TEST_CASE("EWMA smooths in the mW domain") {
    // one sensor: -60 then -50 dBm → 0.3·1e-5 + 0.7·1e-6 mW
    const std::vector<SensorSweep> s{sweep(1, 0, {-60}), sweep(1, 100, {-50})};
    const auto agg = aggregate(s, AggregationMode::ewma(0.3));
    CHECK(agg.bins[0] == doctest::Approx(10.0 * std::log10(0.3e-5 + 0.7e-6)).epsilon(1e-12));
    CHECK(agg.last_update_ms.at(1) == 100);

    // time order wins over input order
    const std::vector<SensorSweep> reversed{s[1], s[0]};
    CHECK(aggregate(reversed, AggregationMode::ewma(0.3)).bins == agg.bins);

    // cross-sensor max after smoothing
    const std::vector<SensorSweep> two{sweep(1, 0, {-60}), sweep(2, 0, {-70}), sweep(1, 100, {-50})};
    CHECK(aggregate(two, AggregationMode::ewma(0.3)).bins == agg.bins);

    CHECK_THROWS_AS(SpectrumAggregator("x", AggregationMode::ewma(0.0)), DomainError);
    CHECK_THROWS_AS(SpectrumAggregator("x", AggregationMode::ewma(1.5)), DomainError);
}

TEST_CASE("aggregator rejects grid mismatches and late sweeps") {
    SpectrumAggregator agg("p", AggregationMode::ewma());
    agg.append(sweep(1, 100, {-60, -61}));
    CHECK_THROWS_AS(agg.append(sweep(2, 0, {-60})), DomainError);
    SensorSweep shifted = sweep(2, 0, {-60, -61});
    shifted.start_khz += 1;
    CHECK_THROWS_AS(agg.append(shifted), DomainError);
    CHECK_THROWS_AS(agg.append(sweep(1, 50, {-60, -61})), DomainError);
    CHECK_NOTHROW(agg.append(sweep(2, 0, {-60, -61})));

    CHECK_THROWS_AS(static_cast<void>(SpectrumAggregator("q", AggregationMode::max_hold()).snapshot()), DomainError);
    CHECK_THROWS_AS(aggregate({}, AggregationMode::max_hold()), DomainError);
}

TEST_CASE("concurrent appends from independent sensor streams") {
    std::mt19937_64 rng(99);
    constexpr int kSensors = 4;
    constexpr int kPerSensor = 200;
    std::vector<std::vector<SensorSweep>> streams(kSensors);
    std::uniform_int_distribution<int> dbm(-128, 127);
    for (int s = 0; s < kSensors; ++s) {
        for (int t = 0; t < kPerSensor; ++t) {
            std::vector<std::int8_t> b(64);
            for (auto& x : b) x = static_cast<std::int8_t>(dbm(rng));
            streams[s].push_back(sweep(static_cast<std::uint16_t>(s), static_cast<std::uint64_t>(t) * 10, b));
        }
    }
    std::vector<SensorSweep> flat;
    for (const auto& st : streams) flat.insert(flat.end(), st.begin(), st.end());

    for (auto mode : {AggregationMode::max_hold(), AggregationMode::ewma(0.3)}) {
        const auto serial = aggregate(flat, mode);
        SpectrumAggregator agg("", mode);
        std::vector<std::thread> workers;
        for (int s = 0; s < kSensors; ++s) {
            workers.emplace_back([&, s] {
                for (const auto& sw : streams[s]) agg.append(sw);
            });
        }
        for (auto& w : workers) w.join();
        CHECK(agg.snapshot().bins == serial.bins);
    }
}
