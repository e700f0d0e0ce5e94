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


#ifndef WAVAIL_FRESNEL_HPP
#define WAVAIL_FRESNEL_HPP

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace wavail::fresnel {

// Transmitter → screen plane (d1), screen plane → receiver (d2), wavelength.
struct PathGeometry {
    PathGeometry(double d1_m, double d2_m, double lambda_m);

    double d1_m;
    double d2_m;
    double lambda_m;
};

// r_n = sqrt(n·λ·d1·d2/(d1+d2)).
double zone_radius(int n, const PathGeometry& geom);

// Continuous zone coordinate u = r²(d1+d2)/(λ·d1·d2); u(r_n) = n.
double zone_index(double r_m, const PathGeometry& geom);

struct AnnularScreenSpec {
    PathGeometry geometry;
    double r_inner_m;
    double r_outer_m;
    int blocked_zone;

    [[nodiscard]] double outer_diameter_m() const noexcept { return 2.0 * r_outer_m; }
};

// Annulus covering exactly zone n: [r_{n−1}, r_n], with r_0 = 0.
AnnularScreenSpec screen_for_zone(int n, const PathGeometry& geom);

// Full apex angle 2·atan(r/distance) of the cone a screen of radius r
// subtends from `distance` away.
double shading_cone_deg(double r_outer_m, double distance_m);

// A blocked band of the zone coordinate, lo <= hi.
struct ZoneInterval {
    double lo;
    double hi;
};

enum class Obliquity { off, on };

struct FieldOptions {
    Obliquity obliquity = Obliquity::off;
    // Needed for the obliquity weight; ignored otherwise.
    std::optional<PathGeometry> geometry;
    // Route obliquity-off evaluation through the quadrature instead of the
    // closed form.
    bool force_quadrature = false;
    double u_max = 200.0;
    double relative_tolerance = 1e-6;
};

struct FieldRatio {
    std::complex<double> complex_ratio;

    [[nodiscard]] double magnitude() const { return std::abs(complex_ratio); }
    [[nodiscard]] double power_gain_db() const;
};

// On-axis field relative to the unobstructed path when the given u-bands
// are opaque. Without obliquity the result is the closed form
// 1 + Σ (e^{iπb} − e^{iπa}); with it, the zone integral weighted by
// K(u) = (1 + cosχ)/2 is evaluated by adaptive Gauss–Kronrod quadrature.
FieldRatio field_ratio(std::span<const ZoneInterval> blocked, const FieldOptions& opts = {});

// Obliquity factor at zone coordinate u for the given geometry.
double obliquity_factor(double u, const PathGeometry& geom);

struct PartialFieldPoint {
    double u;
    double magnitude;  // |field from the disc [0, u]| relative to the free path
};

// |∫_0^u| curve on a uniform grid, showing the zone-by-zone oscillation.
std::vector<PartialFieldPoint> partial_field_curve(double u_end, double step, const FieldOptions& opts = {});

// CSV header: u,partial_field
void write_partial_field_csv(std::ostream& os, std::span<const PartialFieldPoint> curve);

// CSV header: r_m,zone_index for zones 1..n_max.
void write_zone_table_csv(std::ostream& os, const PathGeometry& geom, int n_max);

}  // namespace wavail::fresnel

#endif  // WAVAIL_FRESNEL_HPP
