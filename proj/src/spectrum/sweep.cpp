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


#include "wavail/spectrum/sweep.hpp"

#include <boost/crc.hpp>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>

#include "wavail/error.hpp"

namespace wavail::spectrum {

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
    }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(bytes[offset + i]) << (8 * i);
    return static_cast<T>(v);
}

}  // namespace

void validate(const SensorSweep& sweep) {
    detail::require(!sweep.bins.empty(), "sweep has no bins");
    detail::require(sweep.bin_khz > 0, "sweep bin width must be positive");
    detail::require(sweep.bins.size() <= std::numeric_limits<std::uint16_t>::max(),
                    "sweep has more than 65535 bins");
}

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::vector<std::uint8_t> encode_frame(const SensorSweep& sweep) {
    validate(sweep);
    std::vector<std::uint8_t> out;
    out.reserve(kFrameHeaderSize + sweep.bins.size() + kFrameCrcSize);
    out.push_back(kFrameMagic0);
    out.push_back(kFrameMagic1);
    out.push_back(kFrameVersion);
    put_le(out, sweep.sensor_id);
    put_le(out, sweep.timestamp_ms);
    put_le(out, sweep.start_khz);
    put_le(out, sweep.bin_khz);
    put_le(out, static_cast<std::uint16_t>(sweep.bins.size()));
    for (std::int8_t b : sweep.bins) out.push_back(static_cast<std::uint8_t>(b));
    put_le(out, crc32(out));
    return out;
}

SensorSweep parse_frame(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= 2 && (bytes[0] != kFrameMagic0 || bytes[1] != kFrameMagic1)) {
        throw FormatError("bad frame magic");
    }
    if (bytes.size() < kFrameHeaderSize + kFrameCrcSize) {
        throw TruncationError("frame of " + std::to_string(bytes.size()) + " bytes is shorter than the header");
    }
    if (bytes[2] != kFrameVersion) throw FormatError("unsupported frame version " + std::to_string(bytes[2]));

    const auto n_bins = get_le<std::uint16_t>(bytes, 19);
    const std::size_t expected = kFrameHeaderSize + n_bins + kFrameCrcSize;
    if (bytes.size() != expected) {
        throw TruncationError("frame length " + std::to_string(bytes.size()) + " does not match " +
                              std::to_string(n_bins) + " bins (expected " + std::to_string(expected) + ")");
    }
    const auto body = bytes.first(expected - kFrameCrcSize);
    if (crc32(body) != get_le<std::uint32_t>(bytes, expected - kFrameCrcSize)) {
        throw IntegrityError("frame CRC mismatch");
    }

    SensorSweep s;
    s.sensor_id = get_le<std::uint16_t>(bytes, 3);
    s.timestamp_ms = get_le<std::uint64_t>(bytes, 5);
    s.start_khz = get_le<std::uint32_t>(bytes, 13);
    s.bin_khz = get_le<std::uint16_t>(bytes, 17);
    if (n_bins == 0 || s.bin_khz == 0) throw FormatError("frame carries an empty or zero-width sweep");
    s.bins.reserve(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) s.bins.push_back(static_cast<std::int8_t>(bytes[kFrameHeaderSize + i]));
    return s;
}

std::string to_json_line(const SensorSweep& sweep) {
    nlohmann::ordered_json j;
    j["sensor_id"] = sweep.sensor_id;
    j["timestamp_ms"] = sweep.timestamp_ms;
    j["start_khz"] = sweep.start_khz;
    j["bin_khz"] = sweep.bin_khz;
    auto& bins = j["bins"] = nlohmann::ordered_json::array();
    for (std::int8_t b : sweep.bins) bins.push_back(static_cast<int>(b));
    return j.dump();
}

SensorSweep from_json_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("sweep record is not valid JSON: ") + e.what());
    }
    try {
        SensorSweep s;
        s.sensor_id = j.at("sensor_id").get<std::uint16_t>();
        s.timestamp_ms = j.at("timestamp_ms").get<std::uint64_t>();
        s.start_khz = j.at("start_khz").get<std::uint32_t>();
        s.bin_khz = j.at("bin_khz").get<std::uint16_t>();
        for (const auto& b : j.at("bins")) {
            const int v = b.get<int>();
            if (v < -128 || v > 127) throw FormatError("bin value " + std::to_string(v) + " outside int8 range");
            s.bins.push_back(static_cast<std::int8_t>(v));
        }
        validate(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed sweep record: ") + e.what());
    }
}

void write_sweeps_jsonl(std::ostream& os, std::span<const SensorSweep> sweeps) {
    for (const auto& s : sweeps) os << to_json_line(s) << '\n';
}

std::vector<SensorSweep> read_sweeps_jsonl(std::istream& is) {
    std::vector<SensorSweep> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(from_json_line(line));
    }
    return out;
}

}  // namespace wavail::spectrum
