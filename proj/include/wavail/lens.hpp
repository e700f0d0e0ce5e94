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


#ifndef WAVAIL_LENS_HPP
#define WAVAIL_LENS_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "wavail/rf_core.hpp"

namespace wavail::lens {

// Effective refraction index between parallel plates spaced `plate_spacing_m`
// apart: n = sqrt(1 − (λ/2a)²). Throws BelowCutoffError when a <= λ/2.
double effective_index(double plate_spacing_m, Frequency f);

// Plate-edge curve of an accelerating (n < 1) lens in polar form about the
// feed: r(θ) = f·(1−n)/(1 − n·cosθ). Valid for n in (0, 1), |θ| <= 90°.
double profile_radius(double focal_m, double n, double theta_deg);

// Validated lens geometry in the plane of plate curvature (cylindrical lens).
// The aperture half-angle must stay below acos(n), where the edge height
// r·sinθ peaks.
class LensSpec {
public:
    LensSpec(double plate_spacing_m, Frequency design_frequency, double focal_length_m,
             double aperture_half_angle_deg);

    [[nodiscard]] double plate_spacing_m() const noexcept { return plate_spacing_m_; }
    [[nodiscard]] Frequency design_frequency() const noexcept { return design_frequency_; }
    [[nodiscard]] double focal_length_m() const noexcept { return focal_length_m_; }
    [[nodiscard]] double aperture_half_angle_deg() const noexcept { return aperture_half_angle_deg_; }
    [[nodiscard]] double index() const noexcept { return index_; }

    // Half-height of the aperture, r(θmax)·sin(θmax).
    [[nodiscard]] double aperture_half_height_m() const;

private:
    double plate_spacing_m_;
    Frequency design_frequency_;
    double focal_length_m_;
    double aperture_half_angle_deg_;
    double index_;
};

struct ProfileSample {
    double theta_deg;
    double r_m;
    double y_m;      // r·sinθ
    double depth_m;  // f − r·cosθ
};

using LensProfile = std::vector<ProfileSample>;

// Samples the profile from 0 to the aperture half-angle in `step_deg` steps;
// the aperture edge is always the last sample.
LensProfile sample_profile(const LensSpec& spec, double step_deg = 1.0);

// Axial depth of the plate edge at transverse height y. θ is recovered by
// bisection on r(θ)·sinθ = |y| to 1e-9 m.
double plate_edge_offset(const LensSpec& spec, double y_m);

// CSV header: theta_deg,r_m,y_m,depth_m
void write_profile_csv(std::ostream& os, std::span<const ProfileSample> profile);

struct ShadingSector {
    double bearing_deg = 0.0;
    double width_deg = 0.0;
    double attenuation_db = 10.0;
};

struct LensEffect {
    double gain_uplift_db = 6.0;
    double throughput_uplift_fraction = 0.04;
    ShadingSector shading{};

    void validate() const;
};

struct LensReport {
    LinkBudget budget;  // rx gain raised by the uplift
    double rx_before_dbm;
    double rx_after_dbm;
    double range_ratio;
    double throughput_multiplier;
};

LensReport apply_lens(const LinkBudget& budget, const LensEffect& effect = {});

// Same report when only the received level of the link is known.
struct LevelReport {
    double rx_before_dbm;
    double rx_after_dbm;
    double range_ratio;
    double throughput_multiplier;
};

LevelReport apply_lens_to_level(double rx_dbm, const LensEffect& effect = {});

// Angular width of a lens aperture `aperture_width_m` wide seen from `distance_m`.
double lens_angular_width_deg(double aperture_width_m, double distance_m);

// Per-client attenuation in dB: the sector's attenuation when the client's
// bearing lies in the closed circular interval bearing ± width/2, else 0.
// A zero-width sector shades nobody.
std::vector<double> shading_assessment(double lens_bearing_deg, const LensEffect& effect,
                                       std::span<const double> client_bearings_deg);

}  // namespace wavail::lens

#endif  // WAVAIL_LENS_HPP
