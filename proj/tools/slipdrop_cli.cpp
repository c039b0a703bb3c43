// Command-line front end: reproducible coarsening experiments for the
// reduced droplet models and the exact absorption solver.
//
// Subcommands: simulate-ode, simulate-absorption, law, sample, fit,
// verify, integral-i. Structured inputs (droplet lists, family specs)
// come from a JSON config (--config); scalar flags mirror config keys and
// win over the file. Every output records the effective-config hash and
// the seed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slipdrop/absorption.hpp"
#include "slipdrop/coarsening.hpp"
#include "slipdrop/distributions.hpp"
#include "slipdrop/io.hpp"
#include "slipdrop/laws.hpp"
#include "slipdrop/verification.hpp"

using nlohmann::json;
using namespace slipdrop;

namespace {

std::string out_path(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / name).string();
}

void set_if(json& obj, const std::string& key, const std::optional<double>& v) {
    if (v) obj[key] = *v;
}

std::uint64_t seed_of(const json& cfg) {
    return cfg.contains("seed") ? cfg["seed"].get<std::uint64_t>() : 0;
}

DistanceDistribution distribution_from(const json& cfg, const std::string& where) {
    if (!cfg.contains("distances"))
        throw InvalidInput(where + ": missing 'distances' block");
    return parse_distribution(cfg["distances"]);
}

std::vector<double> positions_from_distances(const std::vector<double>& d) {
    std::vector<double> x(d.size() + 1);
    x[0] = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) x[i + 1] = x[i] + d[i];
    return x;
}

FamilySpec families_from(const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw InvalidInput("families: expected a non-empty array");
    FamilySpec spec;
    for (const auto& f : arr) {
        require_keys(f, {"distance", "count"}, "families[]");
        spec.families.push_back(
            {require_number(f, "distance", "families[]"),
             static_cast<std::size_t>(require_number(f, "count", "families[]"))});
    }
    spec.validate();
    return spec;
}

std::vector<FractionFamily> fraction_families_from(const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw InvalidInput("families: expected a non-empty array");
    std::vector<FractionFamily> fams;
    for (const auto& f : arr) {
        require_keys(f, {"distance", "fraction"}, "families[]");
        fams.push_back({require_number(f, "distance", "families[]"),
                        require_number(f, "fraction", "families[]")});
    }
    return fams;
}

CoarseningCurve read_curve_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open curve file: " + path);
    CoarseningCurve c;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true; // named column row
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected t,n");
        c.t.push_back(std::stod(line.substr(0, comma)));
        c.n.push_back(std::stod(line.substr(comma + 1)));
    }
    if (c.t.empty()) throw InvalidInput(path + ": no curve rows");
    return c;
}

TabulatedSurvivor read_survivor_csv(const std::string& path) {
    const CoarseningCurve c = read_curve_csv(path);
    TabulatedSurvivor t;
    t.x = c.t;
    t.n = c.n;
    t.validate();
    return t;
}

int cmd_simulate_ode(const json& cfg, const std::string& out_dir) {
    require_keys(cfg,
                 {"regime", "params", "droplets", "integrator", "t-max",
                  "snapshot-stride", "seed"},
                 "config");
    if (!cfg.contains("regime") || !cfg["regime"].is_string())
        throw InvalidInput("config: missing 'regime'");
    const std::string regime_name = cfg["regime"].get<std::string>();
    Regime regime;
    if (regime_name == "finite") regime = Regime::FiniteBeta;
    else if (regime_name == "infinite") regime = Regime::InfiniteBeta;
    else if (regime_name == "zero") regime = Regime::ZeroBeta;
    else throw InvalidInput("config: regime must be finite|infinite|zero");

    if (!cfg.contains("params")) throw InvalidInput("config: missing 'params'");
    const ModelParams params = parse_params(cfg["params"]);
    if (regime == Regime::InfiniteBeta && !params.infinite_slip())
        throw InvalidInput("config: infinite regime needs beta = \"inf\"");
    if (regime == Regime::FiniteBeta && params.infinite_slip())
        throw InvalidInput("config: finite regime needs a finite beta");

    if (!cfg.contains("droplets")) throw InvalidInput("config: missing 'droplets'");
    const json& dj = cfg["droplets"];
    DropletArray initial;
    const std::uint64_t seed = seed_of(cfg);
    if (dj.contains("positions")) {
        require_keys(dj, {"positions", "pressures"}, "droplets");
        initial = make_droplet_array(dj["positions"].get<std::vector<double>>(),
                                     dj["pressures"].get<std::vector<double>>());
    } else {
        require_keys(dj, {"count", "pressure", "last-pressure", "distances"}, "droplets");
        const auto count = static_cast<std::size_t>(require_number(dj, "count", "droplets"));
        if (count < 3) throw InvalidInput("droplets: count must be at least 3");
        const double p = require_number(dj, "pressure", "droplets");
        const double pbar = require_number(dj, "last-pressure", "droplets");
        const auto dist = parse_distribution(dj["distances"]);
        const auto distances = sample(dist, count - 1, seed, true);
        std::vector<double> pressures(count, p);
        pressures.back() = pbar;
        initial = make_droplet_array(positions_from_distances(distances), pressures);
    }
    validate_gaps(initial, params.sigma);

    const double thr = collapse_threshold(params.epsilon, params.collapse_factor);
    for (double p : initial.p)
        if (p >= thr)
            throw InvalidInput("initial pressures must stay below the collapse threshold");
    for (std::size_t k = 1; k < initial.size(); ++k)
        if (gap(initial, k, params.sigma) <= params.collision_delta)
            throw InvalidInput("initial gaps must exceed the collision threshold");

    RunOptions opts;
    if (cfg.contains("integrator")) opts.step = parse_step_control(cfg["integrator"]);
    opts.snapshot_stride =
        static_cast<std::size_t>(number_or(cfg, "snapshot-stride", 1.0));
    const double t_max = require_number(cfg, "t-max", "config");

    const std::uint64_t hash = fnv1a64(cfg.dump());
    const CoarseningRun run = run_coarsening(initial, params, regime, t_max, opts);

    write_trajectory_csv(out_path(out_dir, "trajectory.csv"), run, hash, seed);
    write_events_jsonl(out_path(out_dir, "events.jsonl"), run.events, hash, seed);
    write_curve_csv(out_path(out_dir, "curve.csv"), run.curve, hash, seed);

    std::cout << "status: " << to_string(run.status) << "\n"
              << "events: " << run.events.size() << "\n"
              << "t_end: " << run.t_end << "\n"
              << "droplets: " << run.final_state.size() << "\n"
              << "config_hash: " << std::hex << hash << std::dec << "\n";
    if (run.status == RunStatus::NumericalFailure) {
        std::cerr << "numerical failure, outputs are partial: " << run.failure << "\n";
        return 3;
    }
    return 0;
}

int cmd_simulate_absorption(const json& cfg, const std::string& out_dir) {
    require_keys(cfg,
                 {"gaps-file", "families", "distances", "count", "b", "pressure",
                  "last-pressure", "nu", "sorted", "stride", "seed"},
                 "config");
    const std::uint64_t seed = seed_of(cfg);

    double B;
    if (cfg.contains("b")) {
        B = require_number(cfg, "b", "config");
    } else if (cfg.contains("pressure") && cfg.contains("last-pressure")) {
        const double nu = number_or(cfg, "nu", 1.0);
        B = (require_number(cfg, "pressure", "config") -
             require_number(cfg, "last-pressure", "config")) /
            (nu * compute_integral_I());
    } else {
        throw InvalidInput("config: need 'b' or a pressure/last-pressure pair");
    }

    const bool sorted = !cfg.contains("sorted") || cfg["sorted"].get<bool>();
    std::vector<double> gaps;
    if (cfg.contains("gaps-file")) {
        gaps = read_gaps_file(cfg["gaps-file"].get<std::string>());
    } else if (cfg.contains("families")) {
        gaps = expand_families(families_from(cfg["families"]));
    } else if (cfg.contains("distances")) {
        const auto count = static_cast<std::size_t>(require_number(cfg, "count", "config"));
        gaps = sample(distribution_from(cfg, "config"), count, seed, sorted);
    } else {
        throw InvalidInput("config: need 'gaps-file', 'families', or 'distances'");
    }

    const std::uint64_t hash = fnv1a64(cfg.dump());
    const auto res = simulate_exact(std::move(gaps), B, sorted);
    const std::size_t default_stride =
        std::max<std::size_t>(1, res.collision_times.size() / 100000);
    const auto stride = static_cast<std::size_t>(
        number_or(cfg, "stride", static_cast<double>(default_stride)));

    write_times_csv(out_path(out_dir, "collision_times.csv"), res.collision_times,
                    hash, seed, stride);
    const auto curve = coarsening_curve(res);
    write_curve_csv(out_path(out_dir, "curve.csv"), curve, hash, seed, stride);

    std::cout << "collisions: " << res.collision_times.size() << "\n"
              << "span: " << res.initial_span << " -> " << res.final_gap << "\n"
              << "t_final: " << res.collision_times.back() << "\n"
              << "config_hash: " << std::hex << hash << std::dec << "\n";
    return 0;
}

int cmd_law(const json& cfg, const std::string& out_dir) {
    require_keys(cfg,
                 {"law", "b", "families", "n", "distances", "survivor-csv", "d-lo",
                  "d-hi", "t-lo", "t-hi", "points", "seed"},
                 "config");
    if (!cfg.contains("law") || !cfg["law"].is_string())
        throw InvalidInput("config: missing 'law'");
    const std::string kind = cfg["law"].get<std::string>();
    const double B = require_number(cfg, "b", "config");
    const std::uint64_t hash = fnv1a64(cfg.dump());
    const std::uint64_t seed = seed_of(cfg);
    const auto points = static_cast<std::size_t>(number_or(cfg, "points", 64.0));
    const std::string file = out_path(out_dir, "law.csv");

    if (kind == "discrete") {
        const FamilySpec spec = families_from(cfg["families"]);
        const auto N = static_cast<std::size_t>(
            number_or(cfg, "n", static_cast<double>(spec.absorbable() + 1)));
        const auto T = discrete_law(spec, N, B);
        std::vector<double> d;
        for (const auto& f : spec.families) d.push_back(f.distance);
        write_xy_csv(file, "d", "T", d, T, hash, seed);
    } else if (kind == "limit") {
        const auto fams = fraction_families_from(cfg["families"]);
        const auto res = limit_law(fams, B);
        std::vector<double> d;
        for (const auto& f : fams) d.push_back(f.distance);
        write_xy_csv(file, "d", "T", d, res.times, hash, seed);
        if (res.diverged)
            std::cout << "note: the last-absorbed family's time diverges\n";
    } else if (kind == "continuous") {
        SurvivorFn surv;
        double d_lo, d_hi;
        if (cfg.contains("survivor-csv")) {
            const auto tab = read_survivor_csv(cfg["survivor-csv"].get<std::string>());
            surv = tab.as_survivor();
            d_lo = number_or(cfg, "d-lo", tab.x.front());
            d_hi = number_or(cfg, "d-hi", tab.x.back());
        } else {
            const auto dist = distribution_from(cfg, "config");
            surv = survivor_of(dist);
            d_lo = number_or(cfg, "d-lo", dist.support_min());
            d_hi = require_number(cfg, "d-hi", "config");
        }
        std::vector<double> d, T;
        for (std::size_t i = 0; i <= points; ++i) {
            const double q = d_lo + (d_hi - d_lo) * static_cast<double>(i) /
                                        static_cast<double>(points);
            d.push_back(q);
            T.push_back(continuous_law(surv, q, B));
        }
        write_xy_csv(file, "d", "T", d, T, hash, seed);
    } else if (kind == "asymptote") {
        const auto dist = distribution_from(cfg, "config");
        const auto asym = asymptotic_curve(dist, B);
        const double t_lo = number_or(cfg, "t-lo", 0.0);
        const double t_hi = require_number(cfg, "t-hi", "config");
        std::vector<double> t, n;
        for (std::size_t i = 0; i <= points; ++i) {
            const double q = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                        static_cast<double>(points);
            t.push_back(q);
            n.push_back(asym.eval(q));
        }
        write_xy_csv(file, "t", "n", t, n, hash, seed);
    } else {
        throw InvalidInput("config: law must be discrete|limit|continuous|asymptote");
    }
    std::cout << "wrote " << file << "\n";
    return 0;
}

int cmd_sample(const json& cfg, const std::string& out_dir) {
    require_keys(cfg, {"distances", "count", "sorted", "seed"}, "config");
    const auto dist = distribution_from(cfg, "config");
    const auto count = static_cast<std::size_t>(require_number(cfg, "count", "config"));
    const bool sorted = cfg.contains("sorted") && cfg["sorted"].get<bool>();
    const std::uint64_t seed = seed_of(cfg);
    const std::uint64_t hash = fnv1a64(cfg.dump());
    const auto gaps = sample(dist, count, seed, sorted);
    const std::string file = out_path(out_dir, "gaps.txt");
    write_gaps_file(file, gaps, hash, seed);
    std::cout << "wrote " << file << " (" << count << " distances from "
              << dist.name() << ")\n";
    return 0;
}

int cmd_fit(const json& cfg) {
    require_keys(cfg, {"input", "model", "t-lo", "t-hi", "n-lo", "n-hi", "A", "B", "seed"},
                 "config");
    if (!cfg.contains("input")) throw InvalidInput("config: missing 'input'");
    const auto curve = read_curve_csv(cfg["input"].get<std::string>());
    const std::string model_name =
        cfg.contains("model") ? cfg["model"].get<std::string>() : "exp";
    FitModel model;
    if (model_name == "power") model = FitModel::Power;
    else if (model_name == "exp") model = FitModel::Exp;
    else if (model_name == "cr1") model = FitModel::CR1;
    else throw InvalidInput("config: model must be power|exp|cr1");

    FitWindow w;
    if (cfg.contains("n-lo") || cfg.contains("n-hi")) {
        w = window_from_survivor_range(curve, number_or(cfg, "n-lo", 0.0),
                                       number_or(cfg, "n-hi", 1.0));
    } else if (cfg.contains("t-lo") || cfg.contains("t-hi")) {
        w.t_lo = number_or(cfg, "t-lo", curve.t.front());
        w.t_hi = number_or(cfg, "t-hi", curve.t.back());
    } else {
        w = default_late_window(curve);
    }
    const auto fit = fit_rate(curve, model, w, number_or(cfg, "A", 1.0),
                              number_or(cfg, "B", 1.0));
    json out;
    out["model"] = model_name;
    out["slope"] = fit.slope;
    out["intercept"] = fit.intercept;
    out["max_rel_residual"] = fit.max_rel_residual;
    out["points"] = fit.points;
    out["window"] = {{"t-lo", w.t_lo}, {"t-hi", w.t_hi}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& json_path, const std::string& only) {
    auto results = run_acceptance();
    if (!only.empty()) {
        std::vector<CheckResult> filtered;
        for (auto& r : results)
            if (r.name.find(only) != std::string::npos) filtered.push_back(r);
        results = filtered;
    }
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %-28s (%.2f s)  %s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.passed) ++failures;
    }
    if (!json_path.empty()) {
        json out = json::array();
        for (const auto& r : results)
            out.push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        std::ofstream f(json_path);
        if (!f) throw InvalidInput("cannot open report file: " + json_path);
        f << out.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_integral_i() {
    const auto r = integrate([](double t) {
        return (5.0 * t * t * t - t * t - t) / std::sqrt(6.0 * t + 3.0);
    }, 0.0, 1.0, 1e-14, 1e-14);
    const double closed = (3.0 + std::sqrt(3.0)) / 35.0;
    std::printf("I (quadrature)  = %.15f\n", r.value);
    std::printf("error estimate  = %.3g over %zu panels\n", r.error_estimate, r.intervals);
    std::printf("(3+sqrt(3))/35  = %.15f\n", closed);
    std::printf("|difference|    = %.3g\n", std::fabs(r.value - closed));
    return std::fabs(r.value - closed) < 1e-10 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coarsening dynamics of slipping droplets: reduced ODE models, "
                 "the exact absorption solver, and coarsening-law evaluation"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    std::string config_path, out_dir = ".";
    std::optional<double> seed_flag;
    app.add_option("--config", config_path, "JSON config file")->group("Global");
    app.add_option("--out-dir", out_dir, "output directory")->group("Global");
    app.add_option("--seed", seed_flag, "RNG seed (overrides config)")->group("Global");

    auto* ode = app.add_subcommand("simulate-ode",
                                   "event-driven run of a reduced droplet model");
    ode->fallthrough();
    std::optional<std::string> regime_flag;
    std::optional<double> tmax_flag, stride_flag;
    ode->add_option("--regime", regime_flag, "finite|infinite|zero");
    ode->add_option("--t-max", tmax_flag, "time horizon");
    ode->add_option("--stride", stride_flag, "snapshot stride");

    auto* absim = app.add_subcommand("simulate-absorption",
                                     "exact collision/absorption run");
    absim->fallthrough();
    std::optional<std::string> gaps_file_flag, family_flag, dist_flag;
    std::optional<double> b_flag, count_flag, alpha_flag, scale_flag, stride2_flag;
    absim->add_option("--gaps-file", gaps_file_flag, "one distance per line");
    absim->add_option("--b", b_flag, "drift constant B");
    absim->add_option("--dist", dist_flag, "power|exponential|gaussian|bump|mixture");
    absim->add_option("--alpha", alpha_flag, "distribution exponent");
    absim->add_option("--scale", scale_flag, "power-family scale A");
    absim->add_option("--count", count_flag, "number of sampled distances");
    absim->add_option("--stride", stride2_flag, "output decimation stride");
    absim->add_option("--family", family_flag, "families as d:i,d:i,...");

    auto* law = app.add_subcommand("law", "evaluate a coarsening law to CSV");
    law->fallthrough();
    std::optional<std::string> law_kind_flag, law_dist_flag;
    std::optional<double> law_b_flag, law_alpha_flag, law_scale_flag, d_hi_flag,
        t_hi_flag, points_flag;
    law->add_option("--law", law_kind_flag, "discrete|limit|continuous|asymptote");
    law->add_option("--b", law_b_flag, "drift constant B");
    law->add_option("--dist", law_dist_flag, "distribution family");
    law->add_option("--alpha", law_alpha_flag, "distribution exponent");
    law->add_option("--scale", law_scale_flag, "power-family scale A");
    law->add_option("--d-hi", d_hi_flag, "largest distance for continuous laws");
    law->add_option("--t-hi", t_hi_flag, "largest time for asymptotes");
    law->add_option("--points", points_flag, "number of output points");

    auto* smp = app.add_subcommand("sample", "draw initial distances to a gap file");
    smp->fallthrough();
    std::optional<std::string> smp_dist_flag;
    std::optional<double> smp_count_flag, smp_alpha_flag, smp_scale_flag;
    bool smp_sorted = false;
    smp->add_option("--dist", smp_dist_flag, "distribution family");
    smp->add_option("--alpha", smp_alpha_flag, "distribution exponent");
    smp->add_option("--scale", smp_scale_flag, "power-family scale A");
    smp->add_option("--count", smp_count_flag, "number of distances");
    smp->add_flag("--sorted", smp_sorted, "sort non-increasing");

    auto* fit = app.add_subcommand("fit", "fit a rate model to a curve CSV");
    fit->fallthrough();
    std::optional<std::string> fit_input_flag, fit_model_flag;
    std::optional<double> fit_tlo, fit_thi, fit_nlo, fit_nhi, fit_A, fit_B;
    fit->add_option("--input", fit_input_flag, "curve CSV (t,n)");
    fit->add_option("--model", fit_model_flag, "power|exp|cr1");
    fit->add_option("--t-lo", fit_tlo, "window start");
    fit->add_option("--t-hi", fit_thi, "window end");
    fit->add_option("--n-lo", fit_nlo, "window by survivor range");
    fit->add_option("--n-hi", fit_nhi, "window by survivor range");
    fit->add_option("--A", fit_A, "CR1 scale A");
    fit->add_option("--B", fit_B, "CR1 drift B");

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->fallthrough();
    std::string verify_json, verify_only;
    verify->add_option("--json", verify_json, "write a machine-readable report");
    verify->add_option("--only", verify_only, "run checks whose name contains this");

    app.add_subcommand("integral-i", "evaluate the contact-line integral")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        json cfg = config_path.empty() ? json::object() : load_config_file(config_path);
        if (seed_flag) cfg["seed"] = static_cast<std::uint64_t>(*seed_flag);

        if (app.got_subcommand("simulate-ode")) {
            if (regime_flag) cfg["regime"] = *regime_flag;
            set_if(cfg, "t-max", tmax_flag);
            set_if(cfg, "snapshot-stride", stride_flag);
            return cmd_simulate_ode(cfg, out_dir);
        }
        if (app.got_subcommand("simulate-absorption")) {
            if (gaps_file_flag) cfg["gaps-file"] = *gaps_file_flag;
            set_if(cfg, "b", b_flag);
            set_if(cfg, "count", count_flag);
            set_if(cfg, "stride", stride2_flag);
            if (dist_flag) {
                cfg["distances"]["family"] = *dist_flag;
                set_if(cfg["distances"], "alpha", alpha_flag);
                set_if(cfg["distances"], "scale", scale_flag);
            }
            if (family_flag) {
                json fams = json::array();
                std::istringstream is(*family_flag);
                std::string item;
                while (std::getline(is, item, ',')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw InvalidInput("--family expects d:i,d:i,...");
                    fams.push_back({{"distance", std::stod(item.substr(0, colon))},
                                    {"count", std::stod(item.substr(colon + 1))}});
                }
                cfg["families"] = fams;
            }
            return cmd_simulate_absorption(cfg, out_dir);
        }
        if (app.got_subcommand("law")) {
            if (law_kind_flag) cfg["law"] = *law_kind_flag;
            set_if(cfg, "b", law_b_flag);
            set_if(cfg, "d-hi", d_hi_flag);
            set_if(cfg, "t-hi", t_hi_flag);
            set_if(cfg, "points", points_flag);
            if (law_dist_flag) {
                cfg["distances"]["family"] = *law_dist_flag;
                set_if(cfg["distances"], "alpha", law_alpha_flag);
                set_if(cfg["distances"], "scale", law_scale_flag);
            }
            return cmd_law(cfg, out_dir);
        }
        if (app.got_subcommand("sample")) {
            if (smp_dist_flag) {
                cfg["distances"]["family"] = *smp_dist_flag;
                set_if(cfg["distances"], "alpha", smp_alpha_flag);
                set_if(cfg["distances"], "scale", smp_scale_flag);
            }
            set_if(cfg, "count", smp_count_flag);
            if (smp_sorted) cfg["sorted"] = true;
            return cmd_sample(cfg, out_dir);
        }
        if (app.got_subcommand("fit")) {
            if (fit_input_flag) cfg["input"] = *fit_input_flag;
            if (fit_model_flag) cfg["model"] = *fit_model_flag;
            set_if(cfg, "t-lo", fit_tlo);
            set_if(cfg, "t-hi", fit_thi);
            set_if(cfg, "n-lo", fit_nlo);
            set_if(cfg, "n-hi", fit_nhi);
            set_if(cfg, "A", fit_A);
            set_if(cfg, "B", fit_B);
            return cmd_fit(cfg);
        }
        if (app.got_subcommand("verify")) return cmd_verify(verify_json, verify_only);
        if (app.got_subcommand("integral-i")) return cmd_integral_i();
    } catch (const InvalidInput& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
