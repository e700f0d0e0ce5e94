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


#include "wavail/fresnel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "wavail/error.hpp"
#include "wavail/format.hpp"
#include "wavail/rf_core.hpp"

namespace wavail::fresnel {

using cplx = std::complex<double>;

PathGeometry::PathGeometry(double d1, double d2, double lambda) : d1_m(d1), d2_m(d2), lambda_m(lambda) {
    detail::require(d1 > 0.0 && d2 > 0.0, "path distances d1 and d2 must be positive");
    detail::require(lambda > 0.0, "wavelength must be positive");
}

namespace {

// λ·d1·d2/(d1+d2): r² per unit zone.
double zone_scale(const PathGeometry& g) { return g.lambda_m * g.d1_m * g.d2_m / (g.d1_m + g.d2_m); }

// e^{iπu}, exact at multiples of 1/2.
cplx cispi(double u) {
    double r = std::fmod(u, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0) return {1.0, 0.0};
    if (r == 0.5) return {0.0, 1.0};
    if (r == 1.0) return {-1.0, 0.0};
    if (r == 1.5) return {0.0, -1.0};
    return {std::cos(kPi * r), std::sin(kPi * r)};
}

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
cplx gk15(F&& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx kronrod = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const cplx fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    err = std::abs((kronrod - gauss) * h);
    return kronrod * h;
}

template <typename F>
cplx adaptive(F&& f, double a, double b, double abs_tol, int depth) {
    double err = 0.0;
    const cplx whole = gk15(f, a, b, err);
    if (err <= abs_tol || depth <= 0) return whole;
    const double m = 0.5 * (a + b);
    return adaptive(f, a, m, abs_tol / 2.0, depth - 1) + adaptive(f, m, b, abs_tol / 2.0, depth - 1);
}

// ∫_a^b w(u)·e^{iπu} du with panels split at every integer zone boundary.
template <typename W>
cplx zone_integral(W&& weight, double a, double b, double abs_tol) {
    auto integrand = [&](double u) { return weight(u) * cispi(u); };
    cplx sum{0.0, 0.0};
    double lo = a;
    while (lo < b) {
        const double hi = std::min(b, std::floor(lo) + 1.0);
        sum += adaptive(integrand, lo, hi, abs_tol, 30);
        lo = hi;
    }
    return sum;
}

std::vector<ZoneInterval> validated(std::span<const ZoneInterval> blocked, double u_max) {
    std::vector<ZoneInterval> v(blocked.begin(), blocked.end());
    for (const auto& iv : v) {
        detail::require(std::isfinite(iv.lo) && std::isfinite(iv.hi), "blocked interval bounds must be finite");
        detail::require(iv.lo >= 0.0 && iv.lo <= iv.hi, "blocked interval must satisfy 0 <= lo <= hi");
        detail::require(iv.hi <= u_max, "blocked interval exceeds the zone cap u_max");
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].lo < v[i - 1].hi) {
            throw DomainError("blocked intervals overlap: [" + fmt_num(v[i - 1].lo) + ", " + fmt_num(v[i - 1].hi) +
                              "] and [" + fmt_num(v[i].lo) + ", " + fmt_num(v[i].hi) + "]");
        }
    }
    return v;
}

struct Weighting {
    const FieldOptions& opts;

    double operator()(double u) const {
        return opts.obliquity == Obliquity::on ? obliquity_factor(u, *opts.geometry) : 1.0;
    }
};

// Field of the whole unobstructed plane, ∫_0^∞ K e^{iπu} du: quadrature up
// to u_max plus the leading two terms of the asymptotic tail, i.e. the Abel
// limit of the oscillating remainder.
cplx unobstructed_field(const Weighting& w, double u_max, double abs_tol) {
    const cplx body = zone_integral(w, 0.0, u_max, abs_tol);
    const cplx ipi{0.0, kPi};
    const double k_end = w(u_max);
    const double dh = 1e-3;
    const double dk_end = (w(u_max + dh) - w(u_max - dh)) / (2.0 * dh);
    const cplx e = cispi(u_max);
    const cplx tail = -k_end * e / ipi + dk_end * e / (ipi * ipi);
    return body + tail;
}

void check_options(const FieldOptions& opts) {
    detail::require(opts.u_max > 0.0 && std::isfinite(opts.u_max), "u_max must be positive");
    detail::require(opts.relative_tolerance > 0.0, "quadrature tolerance must be positive");
    if (opts.obliquity == Obliquity::on) {
        detail::require(opts.geometry.has_value(), "obliquity weighting needs the path geometry");
    }
}

}  // namespace

double zone_radius(int n, const PathGeometry& geom) {
    detail::require(n >= 1, "Fresnel zone number must be >= 1");
    return std::sqrt(n * zone_scale(geom));
}

double zone_index(double r_m, const PathGeometry& geom) {
    detail::require(r_m >= 0.0, "radius must be non-negative");
    return r_m * r_m / zone_scale(geom);
}

AnnularScreenSpec screen_for_zone(int n, const PathGeometry& geom) {
    const double outer = zone_radius(n, geom);
    const double inner = n == 1 ? 0.0 : zone_radius(n - 1, geom);
    return {geom, inner, outer, n};
}

double shading_cone_deg(double r_outer_m, double distance_m) {
    detail::require(distance_m > 0.0, "cone distance must be positive");
    detail::require(r_outer_m >= 0.0, "screen radius must be non-negative");
    return 2.0 * std::atan(r_outer_m / distance_m) * 180.0 / kPi;
}

double FieldRatio::power_gain_db() const { return 20.0 * std::log10(magnitude()); }

double obliquity_factor(double u, const PathGeometry& g) {
    const double r2 = u * zone_scale(g);
    const double cos_chi =
        (g.d1_m * g.d2_m - r2) / (std::sqrt(r2 + g.d1_m * g.d1_m) * std::sqrt(r2 + g.d2_m * g.d2_m));
    return 0.5 * (1.0 + cos_chi);
}

FieldRatio field_ratio(std::span<const ZoneInterval> blocked, const FieldOptions& opts) {
    check_options(opts);
    const auto bands = validated(blocked, opts.u_max);
    if (bands.empty()) return {{1.0, 0.0}};

    if (opts.obliquity == Obliquity::off && !opts.force_quadrature) {
        cplx ratio{1.0, 0.0};
        for (const auto& b : bands) ratio += cispi(b.hi) - cispi(b.lo);
        return {ratio};
    }

    const Weighting w{opts};
    // |U0| ≈ 1/π, so an absolute tolerance of tol/π per integral is relative.
    const double abs_tol = opts.relative_tolerance / kPi;
    const cplx u0 = unobstructed_field(w, opts.u_max, abs_tol);
    cplx screened{0.0, 0.0};
    for (const auto& b : bands) screened += zone_integral(w, b.lo, b.hi, abs_tol);
    return {1.0 - screened / u0};
}

std::vector<PartialFieldPoint> partial_field_curve(double u_end, double step, const FieldOptions& opts) {
    check_options(opts);
    detail::require(step > 0.0, "curve step must be positive");
    detail::require(u_end >= 0.0 && u_end <= opts.u_max, "curve end must lie in [0, u_max]");
    const Weighting w{opts};
    const double abs_tol = opts.relative_tolerance / kPi;
    const cplx u0 = unobstructed_field(w, opts.u_max, abs_tol);

    std::vector<PartialFieldPoint> out;
    cplx acc{0.0, 0.0};
    double prev = 0.0;
    const auto n = static_cast<long>(std::floor(u_end / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
        const double u = std::min(u_end, static_cast<double>(i) * step);
        acc += zone_integral(w, prev, u, abs_tol);
        prev = u;
        out.push_back({u, std::abs(acc / u0)});
    }
    return out;
}

void write_partial_field_csv(std::ostream& os, std::span<const PartialFieldPoint> curve) {
    os << "u,partial_field\n";
    for (const auto& p : curve) os << fmt_num(p.u) << ',' << fmt_num(p.magnitude) << '\n';
}

void write_zone_table_csv(std::ostream& os, const PathGeometry& geom, int n_max) {
    detail::require(n_max >= 1, "zone count must be >= 1");
    os << "r_m,zone_index\n";
    for (int n = 1; n <= n_max; ++n) {
        const double r = zone_radius(n, geom);
        os << fmt_num(r) << ',' << fmt_num(zone_index(r, geom)) << '\n';
    }
}

}  // namespace wavail::fresnel
