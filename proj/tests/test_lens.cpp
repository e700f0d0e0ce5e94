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
#include <vector>

#include "wavail/error.hpp"
#include "wavail/lens.hpp"

using namespace wavail;
using namespace wavail::lens;

namespace {

const Frequency kF(2.4e9);
const double kLambda = kF.wavelength_m();

}  // namespace

TEST_CASE("effective index between plates") {
    CHECK(effective_index(kLambda / std::sqrt(2.0), kF) == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(effective_index(0.625 * kLambda, kF) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK_THROWS_AS(effective_index(0.5 * kLambda, kF), BelowCutoffError);
    CHECK_THROWS_AS(effective_index(0.3 * kLambda, kF), DomainError);

    double prev = 0.0;
    for (double a = 0.51; a < 20.0; a *= 1.1) {
        const double n = effective_index(a * kLambda, kF);
        CHECK(n > prev);
        CHECK(n < 1.0);
        prev = n;
    }
    CHECK(effective_index(1000.0 * kLambda, kF) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("profile radius") {
    CHECK(profile_radius(0.3, 0.6, 0.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(profile_radius(0.3, 0.6, 20.0) == doctest::Approx(0.275113).epsilon(1e-6));
    CHECK(profile_radius(0.3, 0.6, 90.0) == doctest::Approx(0.12).epsilon(1e-12));
    CHECK_THROWS_AS(profile_radius(0.3, 1.0, 10.0), DomainError);
    CHECK_THROWS_AS(profile_radius(0.3, 0.0, 10.0), DomainError);
    CHECK_THROWS_AS(profile_radius(0.3, 0.6, 95.0), DomainError);

    // 1 − n·cosθ grows with θ, so r falls away from the vertex.
    for (double n : {0.2, 0.5, 0.8, 0.95}) {
        double prev = profile_radius(0.3, n, 0.0);
        for (double t = 1.0; t < 90.0; t += 1.0) {
            const double r = profile_radius(0.3, n, t);
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("equal-phase identity along the profile") {
    for (double a_over_lambda : {0.55, 0.625, 0.8, 1.5}) {
        const double n0 = effective_index(a_over_lambda * kLambda, kF);
        const double aperture = 0.99 * std::acos(n0) * 180.0 / kPi;
        const LensSpec spec(a_over_lambda * kLambda, kF, 0.3, aperture);
        const double n = spec.index();
        for (const auto& s : sample_profile(spec, 0.5)) {
            CHECK(std::abs(s.r_m + n * (spec.focal_length_m() - s.r_m * std::cos(s.theta_deg * kPi / 180.0)) -
                           spec.focal_length_m()) < 1e-9);
        }
    }
}

TEST_CASE("plate edge offset by bisection") {
    const LensSpec spec(0.625 * kLambda, kF, 0.3, 40.0);
    REQUIRE(spec.index() == doctest::Approx(0.6));
    CHECK(plate_edge_offset(spec, 0.0) == 0.0);

    // y at θ = 20°: r(20°)·sin20°; depth = f − r·cos20° = 0.0414784 m
    const double r20 = 0.12 / (1.0 - 0.6 * std::cos(20.0 * kPi / 180.0));
    const double y20 = r20 * std::sin(20.0 * kPi / 180.0);
    CHECK(y20 == doctest::Approx(0.0941).epsilon(1e-3));
    CHECK(plate_edge_offset(spec, y20) == doctest::Approx(0.0414784).epsilon(1e-5));
    CHECK(plate_edge_offset(spec, -y20) == doctest::Approx(0.0414784).epsilon(1e-5));

    const double edge = spec.aperture_half_height_m();
    CHECK_NOTHROW(plate_edge_offset(spec, edge));
    CHECK_THROWS_AS(plate_edge_offset(spec, edge + 1e-6), DomainError);
}

TEST_CASE("lens spec validation") {
    CHECK_THROWS_AS(LensSpec(0.4 * kLambda, kF, 0.3, 30.0), BelowCutoffError);
    CHECK_THROWS_AS(LensSpec(0.7 * kLambda, kF, 0.0, 30.0), DomainError);
    CHECK_THROWS_AS(LensSpec(0.7 * kLambda, kF, 0.3, 90.0), DomainError);
    CHECK_THROWS_AS(LensSpec(0.7 * kLambda, kF, 0.3, 0.0), DomainError);
    // n = 0.6 folds at acos(0.6) = 53.13°
    CHECK_NOTHROW(LensSpec(0.625 * kLambda, kF, 0.3, 53.0));
    CHECK_THROWS_AS(LensSpec(0.625 * kLambda, kF, 0.3, 53.2), DomainError);
}

TEST_CASE("profile sampling and CSV export") {
    const LensSpec spec(0.625 * kLambda, kF, 0.3, 30.5);
    const auto profile = sample_profile(spec);
    REQUIRE(profile.size() == 32);
    CHECK(profile.front().theta_deg == 0.0);
    CHECK(profile[20].theta_deg == 20.0);
    CHECK(profile.back().theta_deg == 30.5);

    std::ostringstream os;
    write_profile_csv(os, profile);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "theta_deg,r_m,y_m,depth_m");
    std::string first;
    std::getline(is, first);
    CHECK(first == "0,0.3,0,0");
}

TEST_CASE("apply lens to a link") {
    const LinkBudget b{20.0, AntennaGain::from_dbi(3.0), AntennaGain::from_dbi(3.0),
                       LinkGeometry(10.0, Frequency(2.437e9))};
    const auto rep = apply_lens(b);
    CHECK(rep.rx_after_dbm - rep.rx_before_dbm == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rep.budget.rx_gain.dbi() == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(rep.range_ratio == range_ratio_from_gain_delta(6.0));
    CHECK(rep.throughput_multiplier == 1.04);

    const auto level = apply_lens_to_level(-60.0);
    CHECK(level.rx_after_dbm == -54.0);
    CHECK(level.range_ratio == doctest::Approx(1.99526).epsilon(1e-5));

    LensEffect none;
    none.gain_uplift_db = 0.0;
    const auto flat = apply_lens(b, none);
    CHECK(flat.rx_after_dbm == doctest::Approx(flat.rx_before_dbm).epsilon(1e-12));
    CHECK(flat.range_ratio == 1.0);

    LensEffect seven;
    seven.gain_uplift_db = 7.0;
    CHECK(apply_lens(b, seven).range_ratio == doctest::Approx(2.2387).epsilon(1e-4));

    LensEffect bad;
    bad.gain_uplift_db = 31.0;
    CHECK_THROWS_AS(apply_lens(b, bad), DomainError);
}

TEST_CASE("shading sectors") {
    LensEffect e;
    const std::vector<double> clients{80.0, 120.0, 75.0, 105.0, 90.0};
    SUBCASE("zero width shades nobody") {
        for (double att : shading_assessment(90.0, e, clients)) CHECK(att == 0.0);
    }
    SUBCASE("sector at 90°, 30° wide, boundaries inside") {
        e.shading = {90.0, 30.0, 10.0};
        const auto att = shading_assessment(90.0, e, clients);
        CHECK(att == std::vector<double>{10.0, 0.0, 10.0, 10.0, 10.0});
    }
    SUBCASE("wrap through north") {
        e.shading = {0.0, 20.0, 10.0};
        const std::vector<double> wrap{355.0, 5.0, 10.0, 350.0, 11.0, -5.0};
        CHECK(shading_assessment(0.0, e, wrap) == std::vector<double>{10.0, 10.0, 10.0, 10.0, 0.0, 10.0});
    }
    SUBCASE("invariant under full turns, two-valued") {
        e.shading = {0.0, 47.0, 12.5};
        std::vector<double> b;
        for (int i = 0; i < 360; i += 7) b.push_back(i);
        std::vector<double> shifted = b;
        for (auto& x : shifted) x += 720.0;
        const auto base = shading_assessment(200.0, e, b);
        CHECK(shading_assessment(200.0 + 360.0, e, shifted) == base);
        for (double att : base) CHECK((att == 0.0 || att == 12.5));
    }
    CHECK(lens_angular_width_deg(0.5, 10.0) == doctest::Approx(2.8642).epsilon(1e-4));
}
