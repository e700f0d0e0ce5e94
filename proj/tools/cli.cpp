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


#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "report.hpp"
#include "wavail/error.hpp"
#include "wavail/fresnel.hpp"
#include "wavail/growth.hpp"
#include "wavail/lens.hpp"
#include "wavail/polarization.hpp"
#include "wavail/rf_core.hpp"
#include "wavail/spectrum/aggregate.hpp"
#include "wavail/spectrum/channels.hpp"
#include "wavail/spectrum/simulator.hpp"
#include "wavail/spectrum/sweep.hpp"

namespace wavail::cli {

namespace {

struct Globals {
    Format format = Format::table;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write " + path);
    return os;
}

// --- linkbudget --------------------------------------------------------------

struct LinkArgs {
    double pt = 20.0;
    double gt = 0.0;
    double gr = 0.0;
    double freq = 0.0;
    double dist = 0.0;

    void attach(CLI::App* sub, bool required) {
        sub->add_option("--pt", pt, "transmit power, dBm")->capture_default_str();
        sub->add_option("--gt", gt, "transmit antenna gain, dBi")->capture_default_str();
        sub->add_option("--gr", gr, "receive antenna gain, dBi")->capture_default_str();
        auto* f = sub->add_option("--freq", freq, "carrier frequency, Hz");
        auto* d = sub->add_option("--dist", dist, "link distance, m");
        if (required) {
            f->required();
            d->required();
        }
    }

    [[nodiscard]] LinkBudget budget() const {
        return {pt, AntennaGain::from_dbi(gt), AntennaGain::from_dbi(gr), LinkGeometry(dist, Frequency(freq))};
    }
};

Report linkbudget(const LinkArgs& a) {
    const auto b = a.budget();
    Report r{"linkbudget", {}, {}};
    r.add("wavelength_m", wavelength(b.geometry.frequency))
        .add("fspl_db", fspl_db(b.geometry))
        .add("rx_dbm", friis_received_dbm(b))
        .add("power_utilization", power_utilization(b.tx_gain, b.rx_gain, b.geometry))
        .add("range_ratio_per_db", range_ratio_from_gain_delta(1.0));
    return r;
}

// --- lens ----------------------------------------------------------------------

struct LensDesignArgs {
    double spacing = 0.0;
    double freq = 2.437e9;
    double focal = 0.0;
    double aperture = 30.0;
    double step = 1.0;
};

Report lens_design(const LensDesignArgs& a) {
    const lens::LensSpec spec(a.spacing, Frequency(a.freq), a.focal, a.aperture);
    const auto profile = lens::sample_profile(spec, a.step);
    Report r{"lens design", {}, Table{{"theta_deg", "r_m", "y_m", "depth_m"}, {}}};
    r.add("index", spec.index()).add("aperture_half_height_m", spec.aperture_half_height_m());
    for (const auto& s : profile) r.table->rows.push_back({s.theta_deg, s.r_m, s.y_m, s.depth_m});
    return r;
}

struct LensApplyArgs {
    LinkArgs link;
    std::optional<double> rx;
    lens::LensEffect effect;
    double lens_bearing = 0.0;
    std::vector<double> client_bearings;
};

Report lens_apply(const LensApplyArgs& a) {
    Report r{"lens apply", {}, {}};
    if (a.rx) {
        const auto rep = lens::apply_lens_to_level(*a.rx, a.effect);
        r.add("rx_before_dbm", rep.rx_before_dbm)
            .add("rx_after_dbm", rep.rx_after_dbm)
            .add("range_ratio", rep.range_ratio)
            .add("throughput_multiplier", rep.throughput_multiplier);
    } else {
        if (a.link.freq == 0.0 || a.link.dist == 0.0) {
            throw DomainError("lens apply needs either --rx or a full link (--freq and --dist)");
        }
        const auto rep = lens::apply_lens(a.link.budget(), a.effect);
        r.add("rx_before_dbm", rep.rx_before_dbm)
            .add("rx_after_dbm", rep.rx_after_dbm)
            .add("rx_gain_dbi", rep.budget.rx_gain.dbi())
            .add("range_ratio", rep.range_ratio)
            .add("throughput_multiplier", rep.throughput_multiplier);
    }
    if (!a.client_bearings.empty()) {
        const auto att = lens::shading_assessment(a.lens_bearing, a.effect, a.client_bearings);
        r.table = Table{{"client_bearing_deg", "attenuation_db"}, {}};
        for (std::size_t i = 0; i < att.size(); ++i) r.table->rows.push_back({a.client_bearings[i], att[i]});
    }
    return r;
}

// --- fresnel -------------------------------------------------------------------

struct PathArgs {
    std::optional<double> lambda;
    std::optional<double> freq;
    double d1 = 0.0;
    double d2 = 0.0;

    void attach(CLI::App* sub, bool required) {
        auto* l = sub->add_option("--lambda", lambda, "wavelength, m");
        sub->add_option("--freq", freq, "carrier frequency, Hz (alternative to --lambda)")->excludes(l);
        auto* o1 = sub->add_option("--d1", d1, "transmitter to screen plane, m");
        auto* o2 = sub->add_option("--d2", d2, "screen plane to receiver, m");
        if (required) {
            o1->required();
            o2->required();
        }
    }

    [[nodiscard]] fresnel::PathGeometry geometry() const {
        if (!lambda && !freq) throw DomainError("give the wavelength with --lambda or --freq");
        return {d1, d2, lambda ? *lambda : Frequency(*freq).wavelength_m()};
    }
};

Report fresnel_zones(const PathArgs& p, int count) {
    const auto g = p.geometry();
    detail::require(count >= 1, "--count must be >= 1");
    Report r{"fresnel zones", {}, Table{{"zone", "r_m", "zone_index"}, {}}};
    r.add("lambda_m", g.lambda_m).add("d1_m", g.d1_m).add("d2_m", g.d2_m);
    for (int n = 1; n <= count; ++n) {
        const double rad = fresnel::zone_radius(n, g);
        r.table->rows.push_back({static_cast<std::int64_t>(n), rad, fresnel::zone_index(rad, g)});
    }
    return r;
}

Report fresnel_screen(const PathArgs& p, int zone, std::optional<double> cone_distance) {
    const auto g = p.geometry();
    const auto s = fresnel::screen_for_zone(zone, g);
    const double dist = cone_distance.value_or(g.d1_m + g.d2_m);
    Report r{"fresnel screen", {}, {}};
    r.add("zone", static_cast<std::int64_t>(s.blocked_zone))
        .add("r_inner_m", s.r_inner_m)
        .add("r_outer_m", s.r_outer_m)
        .add("outer_diameter_m", s.outer_diameter_m())
        .add("cone_distance_m", dist)
        .add("cone_deg", fresnel::shading_cone_deg(s.r_outer_m, dist));
    return r;
}

struct FieldArgs {
    PathArgs path;
    std::vector<std::string> blocks;
    std::vector<int> zones;
    bool obliquity = false;
    bool force_quadrature = false;
    std::optional<double> curve_end;
    double curve_step = 0.05;
};

fresnel::ZoneInterval parse_block(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("blocked band '" + text + "' must look like lo:hi");
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        const fresnel::ZoneInterval iv{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
        return iv;
    } catch (const std::logic_error&) {
        throw DomainError("blocked band '" + text + "' must look like lo:hi");
    }
}

Report fresnel_field(const FieldArgs& a) {
    fresnel::FieldOptions opts;
    opts.obliquity = a.obliquity ? fresnel::Obliquity::on : fresnel::Obliquity::off;
    opts.force_quadrature = a.force_quadrature;
    if (a.obliquity) opts.geometry = a.path.geometry();
    std::vector<fresnel::ZoneInterval> bands;
    for (const auto& b : a.blocks) bands.push_back(parse_block(b));
    for (int z : a.zones) {
        detail::require(z >= 1, "--zone must be >= 1");
        bands.push_back({z - 1.0, static_cast<double>(z)});
    }
    const auto ratio = fresnel::field_ratio(bands, opts);
    Report r{"fresnel field", {}, {}};
    r.add("ratio_re", ratio.complex_ratio.real())
        .add("ratio_im", ratio.complex_ratio.imag())
        .add("magnitude", ratio.magnitude())
        .add("power_gain_db", ratio.power_gain_db())
        .add("obliquity", a.obliquity);
    if (a.curve_end) {
        r.table = Table{{"u", "partial_field"}, {}};
        for (const auto& pt : fresnel::partial_field_curve(*a.curve_end, a.curve_step, opts)) {
            r.table->rows.push_back({pt.u, pt.magnitude});
        }
    }
    return r;
}

// --- polar ---------------------------------------------------------------------

struct PolarLossArgs {
    double delta_psi = 90.0;
    std::optional<double> diffuse;
    std::optional<double> isolation;
    std::string preset;
    double tilt_rad = 0.0;
};

Report polar_loss(const PolarLossArgs& a) {
    polar::EnvironmentModel env;
    if (!a.preset.empty()) {
        const auto p = polar::preset(a.preset);
        if (!p) throw DomainError("unknown environment preset '" + a.preset + "' (sparse-room, metal-rich)");
        env = *p;
    } else if (a.isolation) {
        env.diffuse_fraction = polar::calibrate_diffuse_from_isolation(*a.isolation);
    } else if (a.diffuse) {
        env.diffuse_fraction = *a.diffuse;
    }
    Report r{"polar loss", {}, {}};
    r.add("diffuse_fraction", env.diffuse_fraction)
        .add("delta_psi_deg", a.delta_psi)
        .add("mismatch_loss_db", polar::mismatch_loss_db(a.delta_psi, env))
        .add("tilt_rad", a.tilt_rad)
        .add("tilt_effect_db", polar::tilt_effect_db(a.tilt_rad, env));
    return r;
}

struct CapacityArgs {
    double xpd = 0.0;
    double snr_db = 20.0;
    bool perturb = false;
    bool sweep = false;
};

Report polar_capacity(const CapacityArgs& a, const Globals& g) {
    const double snr = std::pow(10.0, a.snr_db / 10.0);
    const std::optional<std::uint64_t> seed = a.perturb ? std::optional(g.seed.value_or(0)) : std::nullopt;
    const polar::MimoChannel ch{polar::dual_polarized_channel(a.xpd, seed), snr};
    const auto eig = polar::gram_eigenvalues(ch.h);
    Report r{"polar capacity", {}, {}};
    r.add("xpd", a.xpd)
        .add("snr_db", a.snr_db)
        .add("eigenvalue_max", eig[0])
        .add("eigenvalue_min", eig[1])
        .add("capacity_bps_hz", polar::mimo_capacity_bps_hz(ch));
    if (a.sweep) {
        r.table = Table{{"xpd", "capacity_bps_hz"}, {}};
        for (int i = 0; i <= 10; ++i) {
            const double x = i / 10.0;
            r.table->rows.push_back({x, polar::mimo_capacity_bps_hz({polar::dual_polarized_channel(x, seed), snr})});
        }
    }
    return r;
}

// --- spectrum ------------------------------------------------------------------

spectrum::Scenario load_scenario(const std::string& path, const Globals& g) {
    auto in = open_input(path);
    auto s = spectrum::read_scenario(in);
    if (g.seed) s.seed = *g.seed;
    return s;
}

struct SimulateArgs {
    std::string scenario;
    std::uint64_t t_ms = 0;
    std::string sweeps_out;
    std::string frames_out;
};

Report spectrum_simulate(const SimulateArgs& a, const Globals& g) {
    const auto scenario = load_scenario(a.scenario, g);
    const auto sensors = spectrum::sensor_positions(scenario);
    const auto sweeps = spectrum::simulate_sweeps(scenario, sensors, a.t_ms);
    if (!a.sweeps_out.empty()) {
        auto os = open_output(a.sweeps_out);
        spectrum::write_sweeps_jsonl(os, sweeps);
    }
    if (!a.frames_out.empty()) {
        auto os = open_output(a.frames_out);
        for (const auto& s : sweeps) {
            const auto frame = spectrum::encode_frame(s);
            os.write(reinterpret_cast<const char*>(frame.data()), static_cast<std::streamsize>(frame.size()));
        }
    }
    Report r{"spectrum simulate", {}, Table{{"sensor_id", "position", "freq_khz", "dbm"}, {}}};
    r.add("sensors", static_cast<std::int64_t>(sweeps.size())).add("timestamp_ms", static_cast<std::int64_t>(a.t_ms));
    for (std::size_t k = 0; k < sweeps.size(); ++k) {
        const auto& s = sweeps[k];
        for (std::size_t i = 0; i < s.bins.size(); ++i) {
            r.table->rows.push_back({static_cast<std::int64_t>(s.sensor_id), sensors[k].position_id,
                                     s.bin_centre_khz(i), static_cast<std::int64_t>(s.bins[i])});
        }
    }
    return r;
}

std::vector<spectrum::SensorSweep> read_frames(std::istream& in) {
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<spectrum::SensorSweep> out;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const std::span<const std::uint8_t> rest(bytes.data() + pos, bytes.size() - pos);
        if (rest.size() < spectrum::kFrameHeaderSize) {
            out.push_back(spectrum::parse_frame(rest));  // throws the right error
        }
        const std::size_t n = rest[19] | (static_cast<std::size_t>(rest[20]) << 8);
        const std::size_t len = std::min(rest.size(), spectrum::kFrameHeaderSize + n + spectrum::kFrameCrcSize);
        out.push_back(spectrum::parse_frame(rest.first(len)));
        pos += len;
    }
    return out;
}

struct AggregateArgs {
    std::string in;
    std::string frames_in;
    std::string mode = "max-hold";
    double alpha = 0.3;
    std::string position = "merged";
};

spectrum::AggregationMode parse_mode(const std::string& mode, double alpha) {
    if (mode == "max-hold") return spectrum::AggregationMode::max_hold();
    if (mode == "ewma") return spectrum::AggregationMode::ewma(alpha);
    throw DomainError("unknown aggregation mode '" + mode + "' (max-hold, ewma)");
}

Report spectrum_aggregate(const AggregateArgs& a) {
    std::vector<spectrum::SensorSweep> sweeps;
    if (!a.in.empty()) {
        auto in = open_input(a.in);
        sweeps = spectrum::read_sweeps_jsonl(in);
    }
    if (!a.frames_in.empty()) {
        auto in = open_input(a.frames_in);
        auto more = read_frames(in);
        sweeps.insert(sweeps.end(), more.begin(), more.end());
    }
    if (a.in.empty() && a.frames_in.empty()) throw DomainError("give sweeps with --in or --frames-in");
    const auto agg = spectrum::aggregate(sweeps, parse_mode(a.mode, a.alpha), a.position);
    Report r{"spectrum aggregate", {}, Table{{"freq_khz", "dbm"}, {}}};
    r.add("position", agg.position_id)
        .add("mode", a.mode)
        .add("sensors", static_cast<std::int64_t>(agg.last_update_ms.size()))
        .add("sweeps", static_cast<std::int64_t>(sweeps.size()));
    for (std::size_t i = 0; i < agg.bins.size(); ++i) r.table->rows.push_back({agg.bin_centre_khz(i), agg.bins[i]});
    return r;
}

struct PlanArgs {
    std::string scenario;
    std::uint64_t t_ms = 0;
    std::string objective = "minimax";
    std::vector<std::string> weights;
    std::vector<int> candidates;
};

Report spectrum_plan(const PlanArgs& a, const Globals& g) {
    const auto scenario = load_scenario(a.scenario, g);
    spectrum::Objective obj;
    if (a.objective == "weighted-sum") {
        obj.kind = spectrum::Objective::Kind::weighted_sum;
    } else if (a.objective != "minimax") {
        throw DomainError("unknown objective '" + a.objective + "' (minimax, weighted-sum)");
    }
    for (const auto& w : a.weights) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw DomainError("weight '" + w + "' must look like client=value");
        try {
            obj.weights[w.substr(0, eq)] = std::stod(w.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw DomainError("weight '" + w + "' must look like client=value");
        }
    }
    std::set<int> cands(a.candidates.begin(), a.candidates.end());
    if (a.candidates.empty()) cands = spectrum::all_channels();

    const auto set = spectrum::build_spectrum_set(scenario, a.t_ms);
    const auto ap_plan = spectrum::select_channel(set, spectrum::PlanMode::ap_only, cands, obj);
    std::optional<spectrum::ChannelPlan> client_plan;
    if (!set.clients.empty()) client_plan = spectrum::select_channel(set, spectrum::PlanMode::client_aware, cands, obj);

    Report r{"spectrum plan", {}, Table{{"channel", "ap_only_objective_mw", "client_aware_objective_mw"}, {}}};
    r.add("objective", a.objective).add("ap_only_channel", static_cast<std::int64_t>(ap_plan.chosen_channel));
    if (client_plan) {
        r.add("client_aware_channel", static_cast<std::int64_t>(client_plan->chosen_channel))
            .add("modes_differ", client_plan->chosen_channel != ap_plan.chosen_channel);
    }
    for (const auto& [ch, score] : ap_plan.per_channel_scores) {
        const double client_obj = client_plan ? client_plan->per_channel_scores.at(ch).objective : std::nan("");
        r.table->rows.push_back({static_cast<std::int64_t>(ch), score.objective, client_obj});
    }
    return r;
}

// --- growth --------------------------------------------------------------------

Report growth_fit(const std::string& path, std::optional<double> from) {
    auto in = open_input(path);
    const auto series = growth::read_count_series(in);
    const auto fit = growth::fit_doubling(series);
    Report r{"growth fit", {}, {}};
    r.add("points", static_cast<std::int64_t>(series.points().size()))
        .add("doubling_days", fit.doubling_days)
        .add("intercept_log2", fit.intercept_log2)
        .add("r_squared", fit.r_squared);
    if (from) r.add("next_doubling_t_days", growth::predict_doubling_date(fit, *from));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wavail: wireless availability planning toolkit", "wavail"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, json, csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed (overrides scenario seeds)");
    app.add_option("--out", g.out_path, "write the report to this file instead of stdout");

    std::function<Report()> action;

    LinkArgs link;
    auto* lb = app.add_subcommand("linkbudget", "free-space link budget and power utilization");
    link.attach(lb, true);
    lb->callback([&] { action = [&] { return linkbudget(link); }; });

    auto* lens_cmd = app.add_subcommand("lens", "accelerating metal-plate lens");
    lens_cmd->require_subcommand(1);
    LensDesignArgs design;
    auto* ld = lens_cmd->add_subcommand("design", "effective index and plate-edge profile");
    ld->add_option("--spacing", design.spacing, "plate spacing a, m")->required();
    ld->add_option("--freq", design.freq, "design frequency, Hz")->capture_default_str();
    ld->add_option("--focal", design.focal, "focal length, m")->required();
    ld->add_option("--aperture", design.aperture, "aperture half-angle, deg")->capture_default_str();
    ld->add_option("--step", design.step, "profile sampling step, deg")->capture_default_str();
    ld->callback([&] { action = [&] { return lens_design(design); }; });

    LensApplyArgs apply;
    auto* la = lens_cmd->add_subcommand("apply", "gain, range and throughput uplift of a lens");
    apply.link.attach(la, false);
    la->add_option("--rx", apply.rx, "baseline received level, dBm (instead of a full link)");
    la->add_option("--uplift", apply.effect.gain_uplift_db, "gain uplift, dB")->capture_default_str();
    la->add_option("--throughput", apply.effect.throughput_uplift_fraction, "throughput uplift fraction")
        ->capture_default_str();
    la->add_option("--lens-bearing", apply.lens_bearing, "bearing of the lens from the AP, deg");
    la->add_option("--shade-width", apply.effect.shading.width_deg, "shading sector width, deg");
    la->add_option("--shade-atten", apply.effect.shading.attenuation_db, "shading attenuation, dB")
        ->capture_default_str();
    la->add_option("--client-bearing", apply.client_bearings, "client bearing, deg (repeatable)");
    la->callback([&] { action = [&] { return lens_apply(apply); }; });

    auto* fr = app.add_subcommand("fresnel", "Fresnel zones, screens and diffraction field");
    fr->require_subcommand(1);
    PathArgs zones_path;
    int zone_count = 5;
    auto* fz = fr->add_subcommand("zones", "zone radii table");
    zones_path.attach(fz, true);
    fz->add_option("--count", zone_count, "number of zones")->capture_default_str();
    fz->callback([&] { action = [&] { return fresnel_zones(zones_path, zone_count); }; });

    PathArgs screen_path;
    int screen_zone = 2;
    std::optional<double> cone_distance;
    auto* fs = fr->add_subcommand("screen", "annular screen for one zone");
    screen_path.attach(fs, true);
    fs->add_option("--zone", screen_zone, "zone to block")->capture_default_str();
    fs->add_option("--cone-distance", cone_distance, "distance for the shading cone, m (default d1+d2)");
    fs->callback([&] { action = [&] { return fresnel_screen(screen_path, screen_zone, cone_distance); }; });

    FieldArgs field;
    auto* ff = fr->add_subcommand("field", "on-axis field ratio with blocked zone bands");
    field.path.attach(ff, false);
    ff->add_option("--block", field.blocks, "blocked band lo:hi in zone units (repeatable)");
    ff->add_option("--zone", field.zones, "block the whole zone n (repeatable)");
    ff->add_flag("--obliquity", field.obliquity, "apply the (1 + cos χ)/2 obliquity weight");
    ff->add_flag("--force-quadrature", field.force_quadrature, "integrate numerically even without obliquity");
    ff->add_option("--curve-end", field.curve_end, "also emit the partial-field curve up to this u");
    ff->add_option("--curve-step", field.curve_step, "partial-field curve step in u")->capture_default_str();
    ff->callback([&] { action = [&] { return fresnel_field(field); }; });

    auto* po = app.add_subcommand("polar", "polarization mismatch and 2x2 MIMO capacity");
    po->require_subcommand(1);
    PolarLossArgs ploss;
    auto* pl = po->add_subcommand("loss", "polarization mismatch and tilt");
    pl->add_option("--delta-psi", ploss.delta_psi, "polarization misalignment, deg")->capture_default_str();
    auto* o_diff = pl->add_option("--diffuse", ploss.diffuse, "diffuse fraction ε");
    auto* o_iso = pl->add_option("--isolation", ploss.isolation, "measured cross-polar isolation, dB")->excludes(o_diff);
    pl->add_option("--preset", ploss.preset, "environment preset: sparse-room, metal-rich")
        ->excludes(o_diff)
        ->excludes(o_iso);
    pl->add_option("--tilt-rad", ploss.tilt_rad, "forward (+) or backward (-) tilt, rad");
    pl->callback([&] { action = [&] { return polar_loss(ploss); }; });

    CapacityArgs cap;
    auto* pc = po->add_subcommand("capacity", "2x2 dual-polarized MIMO capacity");
    pc->add_option("--xpd", cap.xpd, "cross-polar leakage in [0, 1]")->capture_default_str();
    pc->add_option("--snr-db", cap.snr_db, "SNR, dB")->capture_default_str();
    pc->add_flag("--perturb", cap.perturb, "add seeded complex Gaussian perturbation (std 0.1)");
    pc->add_flag("--sweep", cap.sweep, "also tabulate capacity over xpd = 0, 0.1, ..., 1");
    pc->callback([&] { action = [&] { return polar_capacity(cap, g); }; });

    auto* sp = app.add_subcommand("spectrum", "sensor sweeps, aggregation and channel planning");
    sp->require_subcommand(1);
    SimulateArgs sim;
    auto* ss = sp->add_subcommand("simulate", "simulate one sweep per sensor position");
    ss->add_option("--scenario", sim.scenario, "scenario JSON file")->required();
    ss->add_option("--t", sim.t_ms, "timestamp, ms")->capture_default_str();
    ss->add_option("--sweeps-out", sim.sweeps_out, "write sweeps as line-delimited JSON");
    ss->add_option("--frames-out", sim.frames_out, "write sweeps as concatenated binary frames");
    ss->callback([&] { action = [&] { return spectrum_simulate(sim, g); }; });

    AggregateArgs agg;
    auto* sa = sp->add_subcommand("aggregate", "merge sweeps onto one spectrum");
    sa->add_option("--in", agg.in, "line-delimited JSON sweeps");
    sa->add_option("--frames-in", agg.frames_in, "concatenated binary frames");
    sa->add_option("--mode", agg.mode, "max-hold or ewma")->capture_default_str();
    sa->add_option("--alpha", agg.alpha, "EWMA weight of the newest sweep")->capture_default_str();
    sa->add_option("--position", agg.position, "position id of the result")->capture_default_str();
    sa->callback([&] { action = [&] { return spectrum_aggregate(agg); }; });

    PlanArgs plan;
    auto* spl = sp->add_subcommand("plan", "choose a channel, AP-only and client-aware");
    spl->add_option("--scenario", plan.scenario, "scenario JSON file")->required();
    spl->add_option("--t", plan.t_ms, "timestamp, ms")->capture_default_str();
    spl->add_option("--objective", plan.objective, "minimax or weighted-sum")->capture_default_str();
    spl->add_option("--weight", plan.weights, "client=weight for weighted-sum (repeatable)");
    spl->add_option("--candidates", plan.candidates, "candidate channels (default 1..14)")->delimiter(',');
    spl->callback([&] { action = [&] { return spectrum_plan(plan, g); }; });

    auto* gr = app.add_subcommand("growth", "doubling-period fit of count series");
    gr->require_subcommand(1);
    std::string growth_in;
    std::optional<double> growth_from;
    auto* gf = gr->add_subcommand("fit", "fit log2(count) against time");
    gf->add_option("--in", growth_in, "two-column text file (t_days, count)")->required();
    gf->add_option("--from", growth_from, "predict the next doubling after this t_days");
    gf->callback([&] { action = [&] { return growth_fit(growth_in, growth_from); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    g.format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::table;
    try {
        const Report report = action();
        if (g.out_path.empty()) {
            render(out, report, g.format);
        } else {
            auto os = open_output(g.out_path);
            render(os, report, g.format);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace wavail::cli
