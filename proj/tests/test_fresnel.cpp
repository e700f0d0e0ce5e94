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
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wavail/error.hpp"
#include "wavail/fresnel.hpp"

using namespace wavail;
using namespace wavail::fresnel;

namespace {

const PathGeometry kSym(25.0, 25.0, 0.125);

FieldRatio closed(std::vector<ZoneInterval> v) { return field_ratio(v); }

FieldRatio quad(std::vector<ZoneInterval> v) {
    FieldOptions o;
    o.force_quadrature = true;
    return field_ratio(v, o);
}

FieldRatio oblique(std::vector<ZoneInterval> v, const PathGeometry& g) {
    FieldOptions o;
    o.obliquity = Obliquity::on;
    o.geometry = g;
    return field_ratio(v, o);
}

}  // namespace

TEST_CASE("zone radii") {
    CHECK(zone_radius(1, kSym) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(zone_radius(2, kSym) == doctest::Approx(1.76777).epsilon(1e-5));
    CHECK(zone_radius(1, PathGeometry(1e-9, 25.0, 0.125)) ==
          doctest::Approx(std::sqrt(0.125 * 1e-9 * 25.0 / (25.0 + 1e-9))).epsilon(1e-12));
    CHECK_THROWS_AS(zone_radius(0, kSym), DomainError);
    CHECK_THROWS_AS(PathGeometry(0.0, 25.0, 0.125), DomainError);

    const PathGeometry a(7.0, 31.0, 0.06);
    const PathGeometry b(31.0, 7.0, 0.06);
    for (int n = 1; n <= 20; ++n) {
        CHECK(std::abs(zone_radius(n, a) / zone_radius(1, a) - std::sqrt(n)) < 1e-12);
        CHECK(zone_radius(n, a) == doctest::Approx(zone_radius(n, b)).epsilon(1e-15));
        CHECK(std::abs(zone_index(zone_radius(n, a), a) - n) < 1e-9);
    }
}

TEST_CASE("zone index") {
    CHECK(zone_index(1.25, kSym) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(zone_index(1.76777, kSym) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(zone_index(0.0, kSym) == 0.0);
    CHECK_THROWS_AS(zone_index(-1.0, kSym), DomainError);
}

TEST_CASE("screens and shading cones") {
    const auto s2 = screen_for_zone(2, kSym);
    CHECK(s2.r_inner_m == doctest::Approx(1.25));
    CHECK(s2.r_outer_m == doctest::Approx(1.76777).epsilon(1e-5));
    CHECK(s2.outer_diameter_m() == doctest::Approx(3.53553).epsilon(1e-5));

    const auto near = screen_for_zone(2, PathGeometry(5.0, 45.0, 0.125));
    CHECK(near.r_outer_m == doctest::Approx(std::sqrt(1.125)).epsilon(1e-12));
    CHECK(near.outer_diameter_m() == doctest::Approx(2.12132).epsilon(1e-5));
    CHECK(near.outer_diameter_m() <= 2.5);

    CHECK(screen_for_zone(1, PathGeometry(3.0, 9.0, 0.05)).r_inner_m == 0.0);

    CHECK(shading_cone_deg(0.0, 50.0) == 0.0);
    CHECK(shading_cone_deg(1.76777, 50.0) == doctest::Approx(4.04974).epsilon(1e-5));
    CHECK(shading_cone_deg(1.06066, 45.0) == doctest::Approx(2.70045).epsilon(1e-5));
    CHECK_THROWS_AS(shading_cone_deg(1.0, 0.0), DomainError);
}

TEST_CASE("closed-form field ratio") {
    const auto empty = closed({});
    CHECK(empty.complex_ratio == std::complex<double>(1.0, 0.0));

    const auto z2 = closed({{1.0, 2.0}});
    CHECK(std::abs(z2.complex_ratio - std::complex<double>(3.0, 0.0)) < 1e-9);
    CHECK(z2.power_gain_db() == doctest::Approx(9.54243).epsilon(1e-5));

    const auto z1 = closed({{0.0, 1.0}});
    CHECK(std::abs(z1.complex_ratio - std::complex<double>(-1.0, 0.0)) < 1e-9);
    CHECK(z1.magnitude() == doctest::Approx(1.0));

    CHECK(std::abs(closed({{0.0, 2.0}}).complex_ratio - 1.0) < 1e-9);

    CHECK_THROWS_AS(closed({{0.0, 1.5}, {1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(closed({{-0.5, 1.0}}), DomainError);
    CHECK_THROWS_AS(closed({{2.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(closed({{1.0, 250.0}}), DomainError);
    CHECK_NOTHROW(closed({{0.0, 1.0}, {1.0, 2.0}}));
}

TEST_CASE("closed form against brute-force midpoint quadrature") {
    const std::vector<std::vector<std::pair<double, double>>> cases = {
        {{1.0, 2.0}}, {{0.0, 1.0}}, {{0.3, 0.9}}, {{1.0, 2.0}, {3.0, 4.0}}, {{0.25, 1.75}, {5.5, 5.6}}};
    for (const auto& bands : cases) {
        std::vector<ZoneInterval> iv;
        for (const auto& [a, b] : bands) iv.push_back({a, b});
        const auto brute = oracle::field_ratio_brute(bands);
        CHECK(std::abs(closed(iv).complex_ratio - brute) < 1e-4);
        CHECK(std::abs(quad(iv).complex_ratio - brute) < 1e-4);
        CHECK(std::abs(quad(iv).complex_ratio - closed(iv).complex_ratio) < 1e-4);
    }
}

TEST_CASE("even zones enhance, odd zones do not") {
    for (int n = 1; n <= 30; ++n) {
        const double mag = closed({{n - 1.0, static_cast<double>(n)}}).magnitude();
        if (n % 2 == 0) {
            CHECK(mag > 1.0);
        } else {
            CHECK(mag <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("obliquity-weighted field") {
    const auto z2 = oblique({{1.0, 2.0}}, kSym);
    CHECK(z2.magnitude() > 2.5);
    CHECK(z2.magnitude() < 3.0);

    // More oblique geometry degrades further but stays in band for d >= 100λ.
    const double lambda = 0.125;
    double prev = 3.0;
    for (double d : {1000.0, 100.0, 30.0, 12.5}) {
        const auto r = oblique({{1.0, 2.0}}, PathGeometry(d, d, lambda));
        CHECK(r.magnitude() > 2.5);
        CHECK(r.magnitude() < 3.0);
        CHECK(r.magnitude() <= prev);
        prev = r.magnitude();
    }
    CHECK(oblique({}, kSym).complex_ratio == std::complex<double>(1.0, 0.0));

    FieldOptions missing;
    missing.obliquity = Obliquity::on;
    std::vector<ZoneInterval> z{{1.0, 2.0}};
    CHECK_THROWS_AS(field_ratio(z, missing), DomainError);
}

TEST_CASE("obliquity factor") {
    CHECK(obliquity_factor(0.0, kSym) == doctest::Approx(1.0).epsilon(1e-15));
    double prev = 1.0;
    for (double u = 1.0; u < 200.0; u += 1.0) {
        const double k = obliquity_factor(u, kSym);
        CHECK(k < prev);
        CHECK(k > 0.0);
        prev = k;
    }
}

TEST_CASE("partial-field curve and zone table") {
    const auto curve = partial_field_curve(4.0, 0.5);
    REQUIRE(curve.size() == 9);
    CHECK(curve[0].magnitude == doctest::Approx(0.0).epsilon(1e-9));
    // disc of one zone gives twice the free-space field, two zones nearly none
    CHECK(curve[2].magnitude == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(curve[4].magnitude == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));

    std::ostringstream os;
    write_partial_field_csv(os, curve);
    CHECK(os.str().rfind("u,partial_field\n0,", 0) == 0);

    std::ostringstream zt;
    write_zone_table_csv(zt, kSym, 2);
    std::istringstream rows(zt.str());
    std::string line;
    std::getline(rows, line);
    CHECK(line == "r_m,zone_index");
    for (int n = 1; n <= 2; ++n) {
        REQUIRE(std::getline(rows, line));
        const auto comma = line.find(',');
        CHECK(std::stod(line.substr(0, comma)) == doctest::Approx(zone_radius(n, kSym)).epsilon(1e-15));
        CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(n).epsilon(1e-12));
    }
    CHECK_FALSE(std::getline(rows, line));
}
