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


#ifndef WAVAIL_SPECTRUM_SWEEP_HPP
#define WAVAIL_SPECTRUM_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wavail::spectrum {

// One scan of the band by one sensor: per-bin received level in dBm.
struct SensorSweep {
    std::uint16_t sensor_id = 0;
    std::uint64_t timestamp_ms = 0;
    std::uint32_t start_khz = 0;
    std::uint16_t bin_khz = 0;
    std::vector<std::int8_t> bins;

    // Centre of bin i in kHz.
    [[nodiscard]] double bin_centre_khz(std::size_t i) const {
        return start_khz + (static_cast<double>(i) + 0.5) * bin_khz;
    }

    bool operator==(const SensorSweep&) const = default;
};

void validate(const SensorSweep& sweep);

// Binary frame, little-endian throughout:
//
//   offset  size  field
//        0     2  magic 0x57 0x58 ("WX")
//        2     1  version (1)
//        3     2  sensor_id
//        5     8  timestamp_ms
//       13     4  start_khz
//       17     2  bin_khz
//       19     2  n_bins
//       21     n  bins (int8 dBm)
//     21+n     4  CRC-32 (IEEE, reflected) over bytes [0, 21+n)
inline constexpr std::uint8_t kFrameMagic0 = 0x57;
inline constexpr std::uint8_t kFrameMagic1 = 0x58;
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr std::size_t kFrameHeaderSize = 21;
inline constexpr std::size_t kFrameCrcSize = 4;

std::uint32_t crc32(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_frame(const SensorSweep& sweep);

// Throws FormatError (magic, version, empty payload), TruncationError
// (length disagrees with n_bins) or IntegrityError (CRC).
SensorSweep parse_frame(std::span<const std::uint8_t> bytes);

// Line-delimited JSON interchange, one sweep per line:
// {"sensor_id":1,"timestamp_ms":0,"start_khz":2400000,"bin_khz":1000,"bins":[-90,...]}
std::string to_json_line(const SensorSweep& sweep);
SensorSweep from_json_line(const std::string& line);
void write_sweeps_jsonl(std::ostream& os, std::span<const SensorSweep> sweeps);
std::vector<SensorSweep> read_sweeps_jsonl(std::istream& is);

}  // namespace wavail::spectrum

#endif  // WAVAIL_SPECTRUM_SWEEP_HPP
