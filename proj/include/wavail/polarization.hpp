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


#ifndef WAVAIL_POLARIZATION_HPP
#define WAVAIL_POLARIZATION_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace wavail::polar {

// Reference forward tilt that produces the nominal +2 dB uplift.
inline constexpr double kReferenceTiltRad = 15.0 * 3.14159265358979323846 / 180.0;
inline constexpr double kReferenceTiltGainDb = 2.0;

struct EnvironmentModel {
    // Fraction of received power arriving depolarized, ε in [0, 1].
    double diffuse_fraction = 0.0;
    double tilt_gain_db_per_rad = kReferenceTiltGainDb / kReferenceTiltRad;

    void validate() const;
};

// Named presets calibrated from measured cross-polar isolation:
// "sparse-room" (15 dB) and "metal-rich" (4 dB).
std::optional<EnvironmentModel> preset(std::string_view name);
std::vector<std::string_view> preset_names();

// 10·log10((1−ε)·cos²Δψ + ε); never positive.
double mismatch_loss_db(double delta_psi_deg, const EnvironmentModel& env);

// ε such that a 90° mismatch shows exactly `isolation_db` of loss.
double calibrate_diffuse_from_isolation(double isolation_db);

// Linear tilt model: positive (forward) tilt raises the level, backward
// tilt lowers it. |tilt| <= π/2.
double tilt_effect_db(double tilt_rad, const EnvironmentModel& env);

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;

struct MimoChannel {
    Matrix2c h{};
    double snr_linear = 1.0;
};

// Eigenvalues of H·H†, descending. Both are >= 0.
std::array<double, 2> gram_eigenvalues(const Matrix2c& h);

// log2 det(I + (ρ/2)·H·H†) with equal power per transmit branch.
double mimo_capacity_bps_hz(const MimoChannel& ch);

// H = [[1, √xpd], [√xpd, 1]]. With a seed, every entry gets an independent
// complex Gaussian perturbation of standard deviation 0.1.
Matrix2c dual_polarized_channel(double xpd_linear, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace wavail::polar

#endif  // WAVAIL_POLARIZATION_HPP
