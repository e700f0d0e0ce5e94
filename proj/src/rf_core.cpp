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


#include "wavail/rf_core.hpp"

#include <cmath>
#include <string>

#include "wavail/error.hpp"

namespace wavail {

Frequency::Frequency(double hertz) : hertz_(hertz) {
    detail::require(std::isfinite(hertz) && hertz > 0.0,
                    "frequency must be positive, got " + std::to_string(hertz) + " Hz");
}

AntennaGain AntennaGain::from_linear(double linear) {
    detail::require(std::isfinite(linear) && linear > 0.0, "antenna gain must be positive (linear)");
    return AntennaGain(linear);
}

AntennaGain AntennaGain::from_dbi(double dbi) {
    detail::require(std::isfinite(dbi), "antenna gain in dBi must be finite");
    return AntennaGain(std::pow(10.0, dbi / 10.0));
}

double AntennaGain::dbi() const { return 10.0 * std::log10(linear_); }

LinkGeometry::LinkGeometry(double distance, Frequency freq) : distance_m(distance), frequency(freq) {
    detail::require(std::isfinite(distance) && distance > 0.0, "link distance must be positive");
}

namespace {

void check_far_field(const LinkGeometry& geom, FarFieldGuard guard) {
    if (guard == FarFieldGuard::disabled) return;
    const double lambda = geom.frequency.wavelength_m();
    if (geom.distance_m < lambda) {
        throw DomainError("near field: distance " + std::to_string(geom.distance_m) +
                          " m is below one wavelength (" + std::to_string(lambda) + " m)");
    }
}

// (4πR/λ)
double spreading_factor(const LinkGeometry& geom) {
    return 4.0 * kPi * geom.distance_m / geom.frequency.wavelength_m();
}

}  // namespace

double wavelength(Frequency f) { return f.wavelength_m(); }

double fspl_db(const LinkGeometry& geom, FarFieldGuard guard) {
    check_far_field(geom, guard);
    return 20.0 * std::log10(spreading_factor(geom));
}

double friis_received_dbm(const LinkBudget& budget, FarFieldGuard guard) {
    return budget.tx_power_dbm + budget.tx_gain.dbi() + budget.rx_gain.dbi() -
           fspl_db(budget.geometry, guard);
}

double power_utilization(AntennaGain gt, AntennaGain gr, const LinkGeometry& geom, FarFieldGuard guard) {
    check_far_field(geom, guard);
    const double inv = 1.0 / spreading_factor(geom);
    // Gt·Gr commutes exactly in IEEE arithmetic, so reciprocity holds bit for bit.
    return (gt.linear() * gr.linear()) * (inv * inv);
}

double range_ratio_from_gain_delta(double delta_db) { return std::pow(10.0, delta_db / 20.0); }

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace wavail
