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


#ifndef WAVAIL_RF_CORE_HPP
#define WAVAIL_RF_CORE_HPP

namespace wavail {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact SI value
inline constexpr double kPi = 3.14159265358979323846;

// Carrier frequency in Hz. Always positive.
class Frequency {
public:
    explicit Frequency(double hertz);

    [[nodiscard]] double hertz() const noexcept { return hertz_; }
    [[nodiscard]] double wavelength_m() const noexcept { return kSpeedOfLight / hertz_; }

private:
    double hertz_;
};

// Boresight antenna gain, stored linear.
class AntennaGain {
public:
    static AntennaGain from_linear(double linear);
    static AntennaGain from_dbi(double dbi);

    [[nodiscard]] double linear() const noexcept { return linear_; }
    [[nodiscard]] double dbi() const;

private:
    explicit AntennaGain(double linear) : linear_(linear) {}
    double linear_;
};

struct LinkGeometry {
    LinkGeometry(double distance_m, Frequency frequency);

    double distance_m;
    Frequency frequency;
};

struct LinkBudget {
    double tx_power_dbm = 0.0;
    AntennaGain tx_gain = AntennaGain::from_linear(1.0);
    AntennaGain rx_gain = AntennaGain::from_linear(1.0);
    LinkGeometry geometry;
};

// The free-space formulas below are only valid for R >= λ. Tests of the
// identity scale (R = λ/4π) switch the check off explicitly.
enum class FarFieldGuard { enforce, disabled };

double wavelength(Frequency f);

/// Free-space path loss 20·log10(4πR/λ) in dB.
double fspl_db(const LinkGeometry& geom, FarFieldGuard guard = FarFieldGuard::enforce);

/// Received power Pt + Gt + Gr − FSPL in dBm.
double friis_received_dbm(const LinkBudget& budget, FarFieldGuard guard = FarFieldGuard::enforce);

/// Ratio of received to radiated power in free space,
/// Gt·A_eff/(4πR²) with A_eff = Gr·λ²/(4π). Symmetric in the two gains.
double power_utilization(AntennaGain gt, AntennaGain gr, const LinkGeometry& geom,
                         FarFieldGuard guard = FarFieldGuard::enforce);

/// Distance multiplier that keeps received power constant after a gain
/// change of `delta_db`: 10^(Δ/20).
double range_ratio_from_gain_delta(double delta_db);

// dB helpers. Power quantities use 10·log10, field and distance 20·log10.
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

}  // namespace wavail

#endif  // WAVAIL_RF_CORE_HPP
