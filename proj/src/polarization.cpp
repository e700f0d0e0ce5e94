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


#include "wavail/polarization.hpp"

#include <cmath>
#include <random>

#include "wavail/error.hpp"
#include "wavail/rf_core.hpp"

namespace wavail::polar {

void EnvironmentModel::validate() const {
    detail::require(diffuse_fraction >= 0.0 && diffuse_fraction <= 1.0, "diffuse fraction must lie in [0, 1]");
    detail::require(std::isfinite(tilt_gain_db_per_rad), "tilt gain must be finite");
}

std::optional<EnvironmentModel> preset(std::string_view name) {
    if (name == "sparse-room") return EnvironmentModel{calibrate_diffuse_from_isolation(15.0)};
    if (name == "metal-rich") return EnvironmentModel{calibrate_diffuse_from_isolation(4.0)};
    return std::nullopt;
}

std::vector<std::string_view> preset_names() { return {"sparse-room", "metal-rich"}; }

double mismatch_loss_db(double delta_psi_deg, const EnvironmentModel& env) {
    env.validate();
    const double eps = env.diffuse_fraction;
    const double c = std::cos(delta_psi_deg * kPi / 180.0);
    return std::min(0.0, 10.0 * std::log10((1.0 - eps) * c * c + eps));
}

double calibrate_diffuse_from_isolation(double isolation_db) {
    detail::require(isolation_db >= 0.0, "isolation must be non-negative");
    return std::pow(10.0, -isolation_db / 10.0);
}

double tilt_effect_db(double tilt_rad, const EnvironmentModel& env) {
    env.validate();
    detail::require(std::abs(tilt_rad) <= kPi / 2.0, "tilt must satisfy |tilt| <= π/2");
    return env.tilt_gain_db_per_rad * tilt_rad;
}

std::array<double, 2> gram_eigenvalues(const Matrix2c& h) {
    // G = H·H† = [[a, b], [conj(b), d]] with a, d real.
    const double a = std::norm(h[0][0]) + std::norm(h[0][1]);
    const double d = std::norm(h[1][0]) + std::norm(h[1][1]);
    const std::complex<double> b = h[0][0] * std::conj(h[1][0]) + h[0][1] * std::conj(h[1][1]);
    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double disc = std::sqrt(half_gap * half_gap + std::norm(b));
    const double hi = mean + disc;
    // Small eigenvalue via det/hi avoids cancellation when G is near rank 1.
    const double det = std::max(0.0, a * d - std::norm(b));
    const double lo = hi > 0.0 ? det / hi : 0.0;
    return {hi, std::max(0.0, lo)};
}

double mimo_capacity_bps_hz(const MimoChannel& ch) {
    for (const auto& row : ch.h) {
        for (const auto& v : row) {
            detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), "channel matrix must be finite");
        }
    }
    detail::require(std::isfinite(ch.snr_linear) && ch.snr_linear > 0.0, "SNR must be positive");
    const auto eig = gram_eigenvalues(ch.h);
    const double scale = ch.snr_linear / 2.0;
    return std::log2(1.0 + scale * eig[0]) + std::log2(1.0 + scale * eig[1]);
}

Matrix2c dual_polarized_channel(double xpd_linear, std::optional<std::uint64_t> seed) {
    detail::require(xpd_linear >= 0.0 && xpd_linear <= 1.0, "cross-polar leakage xpd must lie in [0, 1]");
    const double leak = std::sqrt(xpd_linear);
    Matrix2c h{};
    h[0] = {std::complex<double>(1.0), std::complex<double>(leak)};
    h[1] = {std::complex<double>(leak), std::complex<double>(1.0)};
    if (seed) {
        std::mt19937_64 rng(*seed);
        // Complex std 0.1 split evenly between the real and imaginary parts.
        std::normal_distribution<double> noise(0.0, 0.1 / std::sqrt(2.0));
        for (auto& row : h) {
            for (auto& v : row) {
                const double re = noise(rng);
                const double im = noise(rng);
                v += std::complex<double>(re, im);
            }
        }
    }
    return h;
}

}  // namespace wavail::polar
