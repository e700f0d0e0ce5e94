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


#include "wavail/lens.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "wavail/error.hpp"
#include "wavail/format.hpp"

namespace wavail::lens {

namespace {

constexpr double kDeg = kPi / 180.0;
constexpr double kBisectionTolerance = 1e-9;

double normalize_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    return r;
}

}  // namespace

double effective_index(double plate_spacing_m, Frequency f) {
    const double lambda = f.wavelength_m();
    detail::require(std::isfinite(plate_spacing_m), "plate spacing must be finite");
    if (plate_spacing_m <= lambda / 2.0) {
        throw BelowCutoffError("plate spacing " + std::to_string(plate_spacing_m) +
                               " m is at or below cutoff λ/2 = " + std::to_string(lambda / 2.0) + " m");
    }
    const double ratio = lambda / (2.0 * plate_spacing_m);
    return std::sqrt(1.0 - ratio * ratio);
}

double profile_radius(double focal_m, double n, double theta_deg) {
    detail::require(n > 0.0 && n < 1.0, "effective index must lie in (0, 1)");
    detail::require(focal_m > 0.0, "focal length must be positive");
    detail::require(std::abs(theta_deg) <= 90.0, "profile angle must satisfy |θ| <= 90°");
    return focal_m * (1.0 - n) / (1.0 - n * std::cos(theta_deg * kDeg));
}

LensSpec::LensSpec(double plate_spacing_m, Frequency design_frequency, double focal_length_m,
                   double aperture_half_angle_deg)
    : plate_spacing_m_(plate_spacing_m),
      design_frequency_(design_frequency),
      focal_length_m_(focal_length_m),
      aperture_half_angle_deg_(aperture_half_angle_deg),
      index_(effective_index(plate_spacing_m, design_frequency)) {
    detail::require(focal_length_m > 0.0, "focal length must be positive");
    detail::require(aperture_half_angle_deg > 0.0 && aperture_half_angle_deg < 90.0,
                    "aperture half-angle must lie in (0°, 90°)");
    // Past acos(n) the edge height r·sinθ turns back toward the axis.
    const double fold_deg = std::acos(index_) / kDeg;
    if (aperture_half_angle_deg >= fold_deg) {
        throw DomainError("aperture half-angle " + std::to_string(aperture_half_angle_deg) +
                          "° reaches the profile fold at acos(n) = " + std::to_string(fold_deg) + "°");
    }
}

double LensSpec::aperture_half_height_m() const {
    return profile_radius(focal_length_m_, index_, aperture_half_angle_deg_) *
           std::sin(aperture_half_angle_deg_ * kDeg);
}

namespace {

ProfileSample sample_at(const LensSpec& spec, double theta_deg) {
    const double r = profile_radius(spec.focal_length_m(), spec.index(), theta_deg);
    const double t = theta_deg * kDeg;
    return {theta_deg, r, r * std::sin(t), spec.focal_length_m() - r * std::cos(t)};
}

}  // namespace

LensProfile sample_profile(const LensSpec& spec, double step_deg) {
    detail::require(step_deg > 0.0, "profile step must be positive");
    const double edge = spec.aperture_half_angle_deg();
    LensProfile out;
    for (int i = 0;; ++i) {
        const double theta = i * step_deg;
        if (theta >= edge - 1e-12) break;
        out.push_back(sample_at(spec, theta));
    }
    out.push_back(sample_at(spec, edge));
    return out;
}

double plate_edge_offset(const LensSpec& spec, double y_m) {
    const double y = std::abs(y_m);
    const double y_max = spec.aperture_half_height_m();
    if (!(y <= y_max)) {
        throw DomainError("height " + std::to_string(y_m) + " m lies outside the lens aperture (±" +
                          std::to_string(y_max) + " m)");
    }
    if (y == 0.0) return 0.0;

    // r(θ)·sinθ increases on [0, θmax] because θmax < acos(n).
    const double f = spec.focal_length_m();
    const double n = spec.index();
    auto height = [&](double theta_deg) { return profile_radius(f, n, theta_deg) * std::sin(theta_deg * kDeg); };
    double lo = 0.0;
    double hi = spec.aperture_half_angle_deg();
    double theta = hi;
    for (int iter = 0; iter < 200; ++iter) {
        theta = 0.5 * (lo + hi);
        const double h = height(theta);
        if (std::abs(h - y) <= kBisectionTolerance) break;
        (h < y ? lo : hi) = theta;
    }
    return f - profile_radius(f, n, theta) * std::cos(theta * kDeg);
}

void write_profile_csv(std::ostream& os, std::span<const ProfileSample> profile) {
    os << "theta_deg,r_m,y_m,depth_m\n";
    for (const auto& s : profile) {
        os << fmt_num(s.theta_deg) << ',' << fmt_num(s.r_m) << ',' << fmt_num(s.y_m) << ','
           << fmt_num(s.depth_m) << '\n';
    }
}

void LensEffect::validate() const {
    detail::require(gain_uplift_db >= 0.0 && gain_uplift_db <= 30.0, "gain uplift must lie in [0, 30] dB");
    detail::require(throughput_uplift_fraction >= 0.0, "throughput uplift must be non-negative");
    detail::require(shading.width_deg >= 0.0 && shading.width_deg < 360.0,
                    "shading width must lie in [0°, 360°)");
}

LensReport apply_lens(const LinkBudget& budget, const LensEffect& effect) {
    effect.validate();
    LinkBudget lensed = budget;
    lensed.rx_gain = AntennaGain::from_dbi(budget.rx_gain.dbi() + effect.gain_uplift_db);
    return {lensed, friis_received_dbm(budget), friis_received_dbm(lensed),
            range_ratio_from_gain_delta(effect.gain_uplift_db), 1.0 + effect.throughput_uplift_fraction};
}

LevelReport apply_lens_to_level(double rx_dbm, const LensEffect& effect) {
    effect.validate();
    return {rx_dbm, rx_dbm + effect.gain_uplift_db, range_ratio_from_gain_delta(effect.gain_uplift_db),
            1.0 + effect.throughput_uplift_fraction};
}

double lens_angular_width_deg(double aperture_width_m, double distance_m) {
    detail::require(aperture_width_m >= 0.0, "aperture width must be non-negative");
    detail::require(distance_m > 0.0, "distance must be positive");
    return 2.0 * std::atan(aperture_width_m / (2.0 * distance_m)) / kDeg;
}

std::vector<double> shading_assessment(double lens_bearing_deg, const LensEffect& effect,
                                       std::span<const double> client_bearings_deg) {
    effect.validate();
    const auto& sector = effect.shading;
    const double centre = normalize_deg(lens_bearing_deg);
    std::vector<double> out;
    out.reserve(client_bearings_deg.size());
    for (double bearing : client_bearings_deg) {
        double diff = std::abs(normalize_deg(bearing) - centre);
        diff = std::min(diff, 360.0 - diff);
        const bool inside = sector.width_deg > 0.0 && diff <= sector.width_deg / 2.0;
        out.push_back(inside ? sector.attenuation_db : 0.0);
    }
    return out;
}

}  // namespace wavail::lens
