// lorasat: batch front-end for the LoRa satellite-uplink Doppler toolkit.
// Subcommands: window | xcorr | sweep | ber | validate. Every CSV output gets
// a JSON sidecar with the fully resolved configuration that produced it.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lorasat/ber.hpp"
#include "lorasat/chirp_integrals.hpp"
#include "lorasat/link.hpp"
#include "lorasat/report.hpp"
#include "lorasat/validate.hpp"
#include "lorasat/xcorr.hpp"

namespace {

using nlohmann::json;
using namespace lorasat;

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int threads = 0;  // 0: resolve from LDS_THREADS, then hardware
    std::string domain = "disc";
    long long pair_budget = 1LL << 18;
};

void add_common(CLI::App* cmd, CommonOpts& o, std::uint64_t default_seed) {
    o.seed = default_seed;
    cmd->add_option("--config", o.config_path, "Scenario JSON file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--preset", o.preset,
                    "Scenario preset (default, ber-paper) or a named recipe for "
                    "this subcommand");
    cmd->add_option("--out", o.out_dir, "Output directory (created if missing)");
    cmd->add_option("--seed", o.seed, "RNG seed for subsampling / Monte Carlo");
    cmd->add_option("--threads", o.threads,
                    "Worker threads (0: LDS_THREADS env, then hardware)");
    cmd->add_option("--domain", o.domain, "Signal domain")
        ->check(CLI::IsMember({"cont", "disc"}));
    cmd->add_option("--pair-budget", o.pair_budget,
                    "Max (k1, k2) pairs per matrix cell before subsampling")
        ->check(CLI::PositiveNumber);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LDS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Domain resolve_domain(const std::string& d) {
    return d == "cont" ? Domain::Continuous : Domain::Discrete;
}

bool is_scenario_preset(const std::string& name) {
    return name == "default" || name == "ber-paper";
}

// Scenario resolution order: explicit --config file wins; otherwise a scenario
// preset name; otherwise the recipe's own default scenario.
ScenarioConfig resolve_scenario(const CommonOpts& o,
                                const std::string& recipe_default = "default") {
    if (!o.config_path.empty()) {
        if (is_scenario_preset(o.preset))
            throw std::invalid_argument(
                "--config and a scenario --preset are mutually exclusive");
        return load_scenario_file(o.config_path);
    }
    if (is_scenario_preset(o.preset)) return scenario_preset(o.preset);
    return scenario_preset(recipe_default);
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    std::filesystem::create_directories(o.out_dir);
    return (std::filesystem::path(o.out_dir) / name).string();
}

json base_sidecar(const std::string& subcommand, const ScenarioConfig& cfg,
                  const CommonOpts& o) {
    json j;
    j["tool"] = "lorasat";
    j["subcommand"] = subcommand;
    j["scenario"] = json::parse(scenario_to_json(cfg));
    j["preset"] = o.preset;
    j["seed"] = o.seed;
    j["domain"] = o.domain;
    j["pair_budget"] = o.pair_budget;
    return j;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = a + (b - a) * i / std::max(1, n - 1);
    return v;
}

void warn_if_straddles(const VisibilityWindow& w, double t0, double ts,
                       const std::string& what) {
    if (w.empty()) return;
    if (!w.contains(t0) || !w.contains(t0 + ts))
        std::cerr << "warning: " << what << " symbol spanning [" << t0 << ", "
                  << (t0 + ts)
                  << "] s leaves the visibility window; the pass model "
                     "extrapolates smoothly\n";
}

struct TagPoint {
    std::string tag;   // none | high-shift | high-rate
    double t0 = 0.0;   // transmission start (unused for none)
};

double tag_start_time(const LinkGeometry& link, const std::string& tag) {
    const OperatingPoints op = operating_points(link.shared);
    return tag == "high-shift" ? op.t_high_shift : op.t_high_rate;
}

// Per-signal linear Doppler model at the operating point. The model is fixed
// per matrix cell (k = 0 linearization); the segment-2 offset delta_f_k for
// k = 0 is representative of the few-Hz offsets of the other symbols.
LinearDoppler tag_doppler(const DevicePass& pass, const RadioConfig& radio,
                          const TagPoint& pt, Domain domain) {
    if (pt.tag == "none") return {};
    if (domain == Domain::Discrete) {
        const long long m0 = llround(pt.t0 / radio.sample_period());
        return linearize_discrete(pass, radio, 0, m0);
    }
    return linearize_continuous(pass, radio, 0, pt.t0);
}

// ---------------------------------------------------------------- window ----

int cmd_window(const CommonOpts& o, double step_s, double margin_s) {
    if (step_s <= 0.0)
        throw std::invalid_argument("--step must be positive");
    const ScenarioConfig cfg = resolve_scenario(o);
    const LinkGeometry link = build_link_geometry(cfg);

    CsvWriter windows(out_path(o, "windows.csv"));
    windows.header({"device", "part", "begin_s", "end_s", "duration_s"});
    const auto emit = [&windows](const std::string& dev, const VisibilityWindow& w) {
        int part = 0;
        for (const Interval& p : w.parts)
            windows.row_mixed({dev, std::to_string(part++), format_double(p.begin),
                               format_double(p.end), format_double(p.duration())});
    };
    emit("A", link.window_a);
    emit("B", link.window_b);
    emit("shared", link.shared);
    json wj = base_sidecar("window", cfg, o);
    wj["step_s"] = step_s;
    wj["margin_s"] = margin_s;
    wj["delta_t_ab_s"] = link.delta_t_ab_s;
    write_sidecar(windows.path(), wj.dump(2));

    if (link.shared.empty())
        std::cerr << "warning: shared visibility window is empty for this "
                     "scenario\n";

    std::cout << "window A total: " << link.window_a.total_duration() << " s ("
              << link.window_a.parts.size() << " part(s))\n";
    std::cout << "window B total: " << link.window_b.total_duration() << " s ("
              << link.window_b.parts.size() << " part(s))\n";
    std::cout << "shared total:   " << link.shared.total_duration() << " s ("
              << link.shared.parts.size() << " part(s))\n";
    std::cout << "t_cvB - t_cvA:  " << link.delta_t_ab_s << " s\n";

    if (link.window_a.empty() && link.window_b.empty()) return 0;

    double lo = 1e300, hi = -1e300;
    for (const VisibilityWindow* w : {&link.window_a, &link.window_b}) {
        for (const Interval& p : w->parts) {
            lo = std::min(lo, p.begin);
            hi = std::max(hi, p.end);
        }
    }
    lo -= margin_s;
    hi += margin_s;
    double norm0 = lo, norm_span = hi - lo;
    if (!link.shared.empty()) {
        norm0 = link.shared.parts.front().begin;
        norm_span = link.shared.parts.back().end - norm0;
    }

    const double f_ref = cfg.radio.fc_hz;
    CsvWriter series(out_path(o, "doppler_timeseries.csv"));
    series.header({"t_s", "t_norm", "fd_a_hz", "rate_a_hz_s", "fd_b_hz",
                   "rate_b_hz_s", "dd_hz"});
    double min_abs_fd = 1e300, max_abs_fd = 0, min_abs_rate = 1e300, max_abs_rate = 0;
    for (double t = lo; t <= hi + step_s / 2; t += step_s) {
        const double fa = link.pass_a.doppler_shift_at(t, f_ref);
        const double ra = link.pass_a.doppler_rate_at(t, f_ref, 0.1);
        const double fb = link.pass_b.doppler_shift_at(t, f_ref);
        const double rb = link.pass_b.doppler_rate_at(t, f_ref, 0.1);
        series.row({t, (t - norm0) / norm_span, fa, ra, fb, rb, fa - fb});
        if (link.window_a.contains(t)) {
            min_abs_fd = std::min(min_abs_fd, std::abs(fa));
            max_abs_fd = std::max(max_abs_fd, std::abs(fa));
            min_abs_rate = std::min(min_abs_rate, std::abs(ra));
            max_abs_rate = std::max(max_abs_rate, std::abs(ra));
        }
    }
    write_sidecar(series.path(), wj.dump(2));

    if (max_abs_fd > 0) {
        std::cout << "window A |f_d| range:   [" << min_abs_fd << ", " << max_abs_fd
                  << "] Hz\n";
        std::cout << "window A |df/dt| range: [" << min_abs_rate << ", "
                  << max_abs_rate << "] Hz/s\n";
    }
    if (!link.shared.empty()) {
        const OperatingPoints op = operating_points(link.shared);
        std::cout << "t_high_shift = " << op.t_high_shift
                  << " s, D_d = " << differential_doppler(link.pass_a, link.pass_b,
                                                          op.t_high_shift, f_ref)
                  << " Hz\n";
        std::cout << "t_high_rate  = " << op.t_high_rate
                  << " s, D_d = " << differential_doppler(link.pass_a, link.pass_b,
                                                          op.t_high_rate, f_ref)
                  << " Hz\n";
    }
    return 0;
}

// ----------------------------------------------------------------- xcorr ----

int cmd_xcorr(const CommonOpts& o, const std::string& doppler_flag, int sf_min,
              int sf_max) {
    const ScenarioConfig cfg = resolve_scenario(o);
    if (sf_min > sf_max)
        throw std::invalid_argument("--sf-min must not exceed --sf-max");

    std::vector<std::string> tags;
    if (o.preset == "xcorr-nodoppler")
        tags = {"none"};
    else if (o.preset == "xcorr-doppler")
        tags = {"high-shift", "high-rate"};
    else
        tags = {doppler_flag};

    const Domain domain = resolve_domain(o.domain);
    const int threads = resolve_threads(o.threads);

    std::optional<LinkGeometry> link;
    const bool needs_geometry =
        std::any_of(tags.begin(), tags.end(),
                    [](const std::string& t) { return t != "none"; });
    if (needs_geometry) link.emplace(build_link_geometry(cfg));

    for (const std::string& tag : tags) {
        TagPoint pt{tag, 0.0};
        if (tag != "none") pt.t0 = tag_start_time(*link, tag);

        CsvWriter csv(out_path(o, "xcorr_" + tag + "_" + o.domain + ".csv"));
        csv.header({"sf1", "sf2", "max_abs", "mean_abs", "pairs", "subsampled",
                    "domain", "doppler_tag"});
        for (int sf1 = sf_min; sf1 <= sf_max; ++sf1) {
            RadioConfig r1 = cfg.radio;
            r1.sf = sf1;
            XcorrSignal s1{r1, {}};
            if (tag != "none") {
                s1.doppler = tag_doppler(link->pass_a, r1, pt, domain);
                warn_if_straddles(link->shared, pt.t0, r1.symbol_period(),
                                  "device A");
            }
            for (int sf2 = sf_min; sf2 <= sf_max; ++sf2) {
                RadioConfig r2 = cfg.radio;
                r2.sf = sf2;
                XcorrSignal s2{r2, {}};
                if (tag != "none")
                    s2.doppler = tag_doppler(link->pass_b, r2, pt, domain);
                const XcorrAggregate agg =
                    aggregate_matrix({s1, s2}, domain, 0.0, 0, o.pair_budget,
                                     o.seed, threads);
                csv.row_mixed({std::to_string(sf1), std::to_string(sf2),
                               format_double(agg.max_abs),
                               format_double(agg.mean_abs),
                               std::to_string(agg.pair_count),
                               agg.subsampled ? "1" : "0", o.domain, tag});
            }
            std::cerr << "xcorr " << tag << ": sf1=" << sf1 << " done\n";
        }
        json j = base_sidecar("xcorr", cfg, o);
        j["doppler_tag"] = tag;
        j["sf_min"] = sf_min;
        j["sf_max"] = sf_max;
        j["tau"] = 0.0;
        j["threads"] = threads;
        if (tag != "none") j["t_start_s"] = pt.t0;
        write_sidecar(csv.path(), j.dump(2));
    }
    return 0;
}

// ----------------------------------------------------------------- sweep ----

ScenarioConfig scenario_with(const ScenarioConfig& base, const std::string& target,
                             double value) {
    ScenarioConfig cfg = base;
    if (target == "orbit_height") {
        if (value < 200.0 || value > 900.0)
            throw std::invalid_argument(
                "orbit_height grid values must lie in [200, 900] km");
        cfg.altitude_m = value * 1e3;
    } else if (target == "inclination") {
        cfg.inclination_deg = value;
    } else if (target == "device_distance") {
        cfg.device_distance_m = value * 1e3;
    }
    return cfg;
}

// Same-SF peak/mean correlation under the pure carrier-offset model at the
// given frequency difference; the discrete path reduces to a closed form.
XcorrAggregate corr_at_offset(const RadioConfig& radio, double delta_hz,
                              Domain domain, long long budget, std::uint64_t seed,
                              int threads) {
    const std::vector<CfoSweepPoint> pts =
        cfo_sweep(radio, radio, {delta_hz}, domain, budget, seed, threads);
    XcorrAggregate agg;
    agg.max_abs = pts.front().max_abs;
    agg.mean_abs = pts.front().mean_abs;
    return agg;
}

int cmd_sweep(const CommonOpts& o, std::string target, std::vector<double> grid) {
    if (o.preset == "param-H") target = "orbit_height";
    else if (o.preset == "param-i") target = "inclination";
    else if (o.preset == "param-d") target = "device_distance";
    else if (o.preset == "cfo-sweep") target = "cfo";
    if (target.empty())
        throw std::invalid_argument("sweep requires --target or a recipe preset");

    const ScenarioConfig base = resolve_scenario(o);
    const Domain domain = resolve_domain(o.domain);
    const int threads = resolve_threads(o.threads);
    const double f_ref = base.radio.fc_hz;

    json j = base_sidecar("sweep", base, o);
    j["target"] = target;
    j["threads"] = threads;

    if (target == "orbit_height" || target == "inclination" ||
        target == "device_distance") {
        if (grid.empty()) {
            if (target == "orbit_height") grid = {300, 450, 600, 750, 900};
            else if (target == "inclination") grid = {0, 15, 30, 45, 60, 75, 90};
            else grid = {10, 20, 30, 40, 50};
        }
        CsvWriter dd_csv(out_path(o, "sweep_" + target + "_dd.csv"));
        dd_csv.header({"value", "t_s", "t_norm", "dd_hz"});
        CsvWriter corr_csv(out_path(o, "sweep_" + target + "_corr.csv"));
        corr_csv.header({"value", "sf", "delta_hz", "max_abs", "mean_abs"});

        constexpr int kSeries = 201;
        std::vector<std::vector<double>> dd_curves;
        for (const double value : grid) {
            const ScenarioConfig cfg = scenario_with(base, target, value);
            const LinkGeometry link = build_link_geometry(cfg);
            if (link.shared.empty()) {
                std::cerr << "warning: " << target << " = " << value
                          << " leaves no shared window; skipped\n";
                continue;
            }
            const double t0 = link.shared.parts.front().begin;
            const double t1 = link.shared.parts.back().end;
            std::vector<double> curve;
            curve.reserve(kSeries);
            for (int i = 0; i < kSeries; ++i) {
                const double tn = double(i) / (kSeries - 1);
                const double t = t0 + tn * (t1 - t0);
                const double dd =
                    differential_doppler(link.pass_a, link.pass_b, t, f_ref);
                dd_csv.row({value, t, tn, dd});
                curve.push_back(dd);
            }
            dd_curves.push_back(curve);

            const double t_rate = operating_points(link.shared).t_high_rate;
            const double delta =
                differential_doppler(link.pass_a, link.pass_b, t_rate, f_ref);
            for (int sf = 5; sf <= 12; ++sf) {
                RadioConfig r = cfg.radio;
                r.sf = sf;
                const XcorrAggregate agg = corr_at_offset(
                    r, delta, domain, o.pair_budget, o.seed, threads);
                corr_csv.row({value, double(sf), delta, agg.max_abs, agg.mean_abs});
            }
            std::cerr << "sweep " << target << " = " << value
                      << ": D_d(high rate) = " << delta << " Hz\n";
        }
        if (target == "inclination" && dd_curves.size() > 1) {
            double spread = 0.0;
            for (int i = 0; i < kSeries; ++i) {
                double mn = 1e300, mx = -1e300;
                for (const auto& c : dd_curves) {
                    mn = std::min(mn, c[static_cast<size_t>(i)]);
                    mx = std::max(mx, c[static_cast<size_t>(i)]);
                }
                spread = std::max(spread, mx - mn);
            }
            std::cout << "max D_d spread across inclinations: " << spread
                      << " Hz\n";
            j["max_dd_spread_hz"] = spread;
        }
        j["grid"] = grid;
        write_sidecar(dd_csv.path(), j.dump(2));
        write_sidecar(corr_csv.path(), j.dump(2));
        return 0;
    }

    if (target == "start_time") {
        const LinkGeometry link = build_link_geometry(base);
        if (link.shared.empty())
            throw std::invalid_argument(
                "start_time sweep needs a non-empty shared window");
        const double t0 = link.shared.parts.front().begin;
        const double span = link.shared.parts.back().end - t0;
        if (grid.empty()) grid = linspace(0.0, span, 11);
        CsvWriter csv(out_path(o, "sweep_start_time.csv"));
        csv.header({"offset_s", "t_s", "dd_hz", "sf", "max_abs", "mean_abs"});
        for (const double off : grid) {
            if (off < 0.0 || off > span)
                throw std::invalid_argument(
                    "start_time offsets must lie inside the shared window");
            const double t = t0 + off;
            const double dd =
                differential_doppler(link.pass_a, link.pass_b, t, f_ref);
            for (int sf = 5; sf <= 12; ++sf) {
                RadioConfig r = base.radio;
                r.sf = sf;
                const XcorrAggregate agg =
                    corr_at_offset(r, dd, domain, o.pair_budget, o.seed, threads);
                csv.row({off, t, dd, double(sf), agg.max_abs, agg.mean_abs});
            }
        }
        j["grid"] = grid;
        write_sidecar(csv.path(), j.dump(2));
        return 0;
    }

    if (target == "cfo") {
        if (grid.empty()) grid = linspace(-2000.0, 2000.0, 801);
        CsvWriter csv(out_path(o, "sweep_cfo.csv"));
        csv.header({"sf1", "sf2", "delta_hz", "max_abs", "mean_abs"});
        for (const int sf : {7, 8, 9}) {
            RadioConfig r = base.radio;
            r.sf = sf;
            const std::vector<CfoSweepPoint> pts = cfo_sweep(
                r, r, grid, domain, o.pair_budget, o.seed, threads);
            for (const CfoSweepPoint& p : pts)
                csv.row({double(sf), double(sf), p.delta_hz, p.max_abs, p.mean_abs});
            std::cerr << "cfo sweep: sf=" << sf << " done (" << pts.size()
                      << " points)\n";
        }
        j["grid_size"] = grid.size();
        j["grid_min"] = grid.front();
        j["grid_max"] = grid.back();
        write_sidecar(csv.path(), j.dump(2));
        return 0;
    }

    if (target == "snr" || target == "sir") {
        if (grid.empty())
            grid = (target == "snr") ? linspace(-30.0, 0.0, 16)
                                     : linspace(-12.0, 12.0, 9);
        BerConfig bc;
        bc.radio = base.radio;
        bc.axis = (target == "snr") ? BerAxis::Snr : BerAxis::Sir;
        bc.axis_db = grid;
        bc.seed = o.seed;
        bc.threads = threads;
        if (target == "sir") {
            bc.fixed_snr_db = 0.0;
            bc.interferer = InterfererConfig{base.radio, {}};
        }
        const BerCurve curve = run_ber(bc);
        CsvWriter csv(out_path(o, "sweep_" + target + ".csv"));
        csv.header({"axis_db", "errors", "bits", "ber", "sf1", "sf2",
                    "doppler_tag", "seed"});
        for (const BerPoint& p : curve.points)
            csv.row_mixed({format_double(p.axis_db), std::to_string(p.bit_errors),
                           std::to_string(p.bits), format_double(p.ber()),
                           std::to_string(bc.radio.sf),
                           target == "sir" ? std::to_string(bc.radio.sf) : "",
                           "none", std::to_string(o.seed)});
        j["grid"] = grid;
        write_sidecar(csv.path(), j.dump(2));
        return 0;
    }

    throw std::invalid_argument("unknown sweep target: " + target);
}

// ------------------------------------------------------------------- ber ----

int cmd_ber(const CommonOpts& o, int sf1, int sf2, const std::string& doppler_flag,
            std::string axis_flag, std::vector<double> grid, double fixed_snr,
            double fixed_sir, int symbols) {
    const bool recipe_snr = o.preset == "ber-snr";
    const bool recipe_sir = o.preset == "ber-sir";
    const ScenarioConfig cfg =
        resolve_scenario(o, (recipe_snr || recipe_sir) ? "ber-paper" : "default");
    const int threads = resolve_threads(o.threads);

    struct Run {
        int sf1;
        int sf2;  // -1: no interferer
        std::string tag;
    };
    std::vector<Run> runs;
    if (recipe_snr) {
        axis_flag = "snr";
        if (grid.empty()) grid = linspace(-30.0, 0.0, 16);
        for (const std::string& tag : {"high-rate", "high-shift"})
            for (int sf = 5; sf <= 9; ++sf) runs.push_back({sf, -1, tag});
    } else if (recipe_sir) {
        axis_flag = "sir";
        if (grid.empty()) grid = linspace(-12.0, 12.0, 9);
        for (int s2 = 5; s2 <= 9; ++s2) runs.push_back({7, s2, "none"});
    } else {
        if (grid.empty())
            grid = (axis_flag == "snr") ? linspace(-30.0, 0.0, 16)
                                        : linspace(-12.0, 12.0, 9);
        runs.push_back({sf1 > 0 ? sf1 : cfg.radio.sf, sf2, doppler_flag});
    }

    std::optional<LinkGeometry> link;
    const bool needs_geometry =
        std::any_of(runs.begin(), runs.end(),
                    [](const Run& r) { return r.tag != "none"; });
    if (needs_geometry) link.emplace(build_link_geometry(cfg));

    CsvWriter csv(out_path(o, "ber.csv"));
    csv.header({"axis_db", "errors", "bits", "ber", "sf1", "sf2", "doppler_tag",
                "seed"});
    for (const Run& run : runs) {
        BerConfig bc;
        bc.radio = cfg.radio;
        bc.radio.sf = run.sf1;
        bc.axis = (axis_flag == "snr") ? BerAxis::Snr : BerAxis::Sir;
        bc.axis_db = grid;
        bc.fixed_snr_db = fixed_snr;
        bc.fixed_sir_db = fixed_sir;
        bc.symbols_per_point = symbols;
        bc.seed = o.seed;
        bc.threads = threads;
        if (run.tag != "none") {
            const TagPoint pt{run.tag, tag_start_time(*link, run.tag)};
            bc.doppler = tag_doppler(link->pass_a, bc.radio, pt, Domain::Discrete);
            warn_if_straddles(link->shared, pt.t0, bc.radio.symbol_period(),
                              "device A");
        }
        if (run.sf2 > 0) {
            InterfererConfig ic;
            ic.radio = cfg.radio;
            ic.radio.sf = run.sf2;
            if (run.tag != "none") {
                const TagPoint pt{run.tag, tag_start_time(*link, run.tag)};
                ic.doppler =
                    tag_doppler(link->pass_b, ic.radio, pt, Domain::Discrete);
            }
            bc.interferer = ic;
        }
        const BerCurve curve = run_ber(bc);
        for (const BerPoint& p : curve.points)
            csv.row_mixed({format_double(p.axis_db), std::to_string(p.bit_errors),
                           std::to_string(p.bits), format_double(p.ber()),
                           std::to_string(run.sf1),
                           run.sf2 > 0 ? std::to_string(run.sf2) : "", run.tag,
                           std::to_string(o.seed)});
        std::cerr << "ber: sf1=" << run.sf1
                  << (run.sf2 > 0 ? " sf2=" + std::to_string(run.sf2) : "")
                  << " tag=" << run.tag << " done\n";
    }
    json j = base_sidecar("ber", cfg, o);
    j["axis"] = axis_flag;
    j["grid"] = grid;
    j["symbols_per_point"] = symbols;
    j["fixed_snr_db"] = fixed_snr;
    j["fixed_sir_db"] = fixed_sir;
    j["threads"] = threads;
    write_sidecar(csv.path(), j.dump(2));
    return 0;
}

// -------------------------------------------------------------- validate ----

int cmd_validate(const CommonOpts& o, int draws, int osf, int min_case_hits,
                 bool inject_l4) {
    ValidateOptions vo;
    vo.draws = draws;
    vo.seed = o.seed;
    vo.osf = osf;
    vo.min_case_hits = min_case_hits;
    vo.inject_l4_sign_flip = inject_l4;
    vo.threads = resolve_threads(o.threads);
    try {
        const ValidateReport rep = run_validation(vo);
        std::cout << format_report(rep);
        return rep.passed ? 0 : 1;
    } catch (const NonConvergent& e) {
        std::cout << "validation: FAIL: continuous reference quadrature: "
                  << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LoRa satellite-uplink Doppler toolkit"};
    app.require_subcommand(1);

    CommonOpts wo, xo, so, bo, vo;

    CLI::App* win = app.add_subcommand(
        "window", "Visibility windows and Doppler/differential-Doppler series");
    add_common(win, wo, 0xC0FFEE);
    double step_s = 1.0, margin_s = 100.0;
    win->add_option("--step", step_s, "Time series step, s");
    win->add_option("--margin", margin_s, "Extra series margin beyond windows, s");

    CLI::App* xc = app.add_subcommand(
        "xcorr", "Max/mean cross-correlation matrices over an SF grid");
    add_common(xc, xo, 0xC0FFEE);
    std::string xc_doppler = "none";
    int sf_min = 5, sf_max = 9;
    xc->add_option("--doppler", xc_doppler, "Operating point")
        ->check(CLI::IsMember({"none", "high-shift", "high-rate"}));
    xc->add_option("--sf-min", sf_min)->check(CLI::Range(5, 12));
    xc->add_option("--sf-max", sf_max)->check(CLI::Range(5, 12));

    CLI::App* sw = app.add_subcommand(
        "sweep", "Parameter sweeps: geometry, start time, CFO, SNR, SIR");
    add_common(sw, so, 0xC0FFEE);
    std::string target;
    std::vector<double> grid;
    sw->add_option("--target", target, "Sweep target")
        ->check(CLI::IsMember({"orbit_height", "inclination", "device_distance",
                               "start_time", "cfo", "snr", "sir"}));
    sw->add_option("--grid", grid,
                   "Grid values (km / deg / s / Hz / dB depending on target)")
        ->delimiter(',');

    CLI::App* ber = app.add_subcommand("ber", "Monte Carlo bit error rate");
    add_common(ber, bo, 1);
    int sf1 = 0, sf2 = -1, symbols = 10000;
    std::string ber_doppler = "none", axis = "snr";
    double fixed_snr = 0.0, fixed_sir = 0.0;
    std::vector<double> ber_grid;
    ber->add_option("--sf1", sf1, "Desired signal SF")->check(CLI::Range(5, 12));
    ber->add_option("--sf2", sf2, "Interferer SF (-1: none)");
    ber->add_option("--doppler", ber_doppler, "Operating point")
        ->check(CLI::IsMember({"none", "high-shift", "high-rate"}));
    ber->add_option("--axis", axis)->check(CLI::IsMember({"snr", "sir"}));
    ber->add_option("--grid", ber_grid, "Axis grid, dB")->delimiter(',');
    ber->add_option("--fixed-snr", fixed_snr, "SNR when axis = sir, dB");
    ber->add_option("--fixed-sir", fixed_sir,
                    "SIR when axis = snr and an interferer is set, dB");
    ber->add_option("--symbols", symbols, "Monte Carlo symbols per grid point")
        ->check(CLI::PositiveNumber);

    CLI::App* val = app.add_subcommand(
        "validate", "Fuzz the analytic correlation tables against the defining "
                    "formulas and re-check model approximations");
    add_common(val, vo, 0x5EEDED);
    int draws = 10000, osf = 16, min_case_hits = 50;
    bool inject_l4 = false;
    val->add_option("--draws", draws, "Fuzz draws per domain")
        ->check(CLI::PositiveNumber);
    val->add_option("--osf", osf, "Reference quadrature oversampling factor");
    val->add_option("--min-case-hits", min_case_hits,
                    "Required evaluations per overlap case");
    val->add_flag("--inject-l4-flip", inject_l4,
                  "Mutation fixture: corrupt table case L4 (must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto allowed = [](const CommonOpts& o,
                                std::initializer_list<const char*> extra) {
            if (o.preset.empty() || is_scenario_preset(o.preset)) return;
            for (const char* name : extra)
                if (o.preset == name) return;
            throw std::invalid_argument("unknown preset for this subcommand: " +
                                        o.preset);
        };
        if (app.got_subcommand(win)) {
            allowed(wo, {"window", "dd-curve"});
            return cmd_window(wo, step_s, margin_s);
        }
        if (app.got_subcommand(xc)) {
            allowed(xo, {"xcorr-nodoppler", "xcorr-doppler"});
            return cmd_xcorr(xo, xc_doppler, sf_min, sf_max);
        }
        if (app.got_subcommand(sw)) {
            allowed(so, {"param-H", "param-i", "param-d", "cfo-sweep"});
            return cmd_sweep(so, target, grid);
        }
        if (app.got_subcommand(ber)) {
            allowed(bo, {"ber-snr", "ber-sir"});
            return cmd_ber(bo, sf1, sf2, ber_doppler, axis, ber_grid, fixed_snr,
                           fixed_sir, symbols);
        }
        if (app.got_subcommand(val)) {
            allowed(vo, {});
            return cmd_validate(vo, draws, osf, min_case_hits, inject_l4);
        }
    } catch (const InconsistentGeometry& e) {
        std::cerr << "error: inconsistent geometry: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
