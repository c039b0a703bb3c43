#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slipdrop/coarsening.hpp"
#include "slipdrop/curve.hpp"
#include "slipdrop/distributions.hpp"
#include "slipdrop/droplet_array.hpp"
#include "slipdrop/errors.hpp"

namespace slipdrop {

/// FNV-1a over the canonical config dump; recorded in every output file so
/// results can be traced back to their exact configuration.
inline std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string provenance_comment(std::uint64_t config_hash, std::uint64_t seed) {
    std::ostringstream os;
    os << "# config_hash=" << std::hex << config_hash << std::dec << " seed=" << seed;
    return os.str();
}

namespace detail {

inline std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot open output file: " + path);
    f.precision(17);
    return f;
}

} // namespace detail

/// Plain gap list: one decimal per line, ASCII; '#' lines are comments.
inline std::vector<double> read_gaps_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open gap file: " + path);
    std::vector<double> gaps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        double v;
        if (!(is >> v) || !(v > 0.0))
            throw InvalidInput(path + ":" + std::to_string(lineno) +
                               ": expected one positive decimal per line");
        std::string rest;
        if (is >> rest)
            throw InvalidInput(path + ":" + std::to_string(lineno) +
                               ": trailing characters after the value");
        gaps.push_back(v);
    }
    if (gaps.empty()) throw InvalidInput(path + ": no gap values found");
    return gaps;
}

inline void write_gaps_file(const std::string& path, const std::vector<double>& gaps,
                            std::uint64_t config_hash, std::uint64_t seed) {
    auto f = detail::open_out(path);
    f << provenance_comment(config_hash, seed) << "\n";
    for (double g : gaps) f << g << "\n";
}

inline void write_curve_csv(const std::string& path, const CoarseningCurve& curve,
                            std::uint64_t config_hash, std::uint64_t seed,
                            std::size_t stride = 1) {
    auto f = detail::open_out(path);
    f << provenance_comment(config_hash, seed) << "\n";
    f << "t,n\n";
    const std::size_t step = stride ? stride : 1;
    for (std::size_t i = 0; i < curve.size(); i += step)
        f << curve.t[i] << "," << curve.n[i] << "\n";
    if (curve.size() && (curve.size() - 1) % step != 0)
        f << curve.t.back() << "," << curve.n.back() << "\n";
}

inline void write_times_csv(const std::string& path, const std::vector<double>& times,
                            std::uint64_t config_hash, std::uint64_t seed,
                            std::size_t stride = 1) {
    auto f = detail::open_out(path);
    f << provenance_comment(config_hash, seed) << "\n";
    f << "collision,t\n";
    const std::size_t step = stride ? stride : 1;
    for (std::size_t i = 0; i < times.size(); i += step)
        f << (i + 1) << "," << times[i] << "\n";
    if (!times.empty() && (times.size() - 1) % step != 0)
        f << times.size() << "," << times.back() << "\n";
}

/// Law curve: abscissa/ordinate pairs with named columns.
inline void write_xy_csv(const std::string& path, const std::string& xname,
                         const std::string& yname, const std::vector<double>& xs,
                         const std::vector<double>& ys, std::uint64_t config_hash,
                         std::uint64_t seed) {
    if (xs.size() != ys.size()) throw InvalidInput("column length mismatch");
    auto f = detail::open_out(path);
    f << provenance_comment(config_hash, seed) << "\n";
    f << xname << "," << yname << "\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        f << xs[i] << "," << ys[i] << "\n";
}

/// Trajectory rows: t, event marker, then positions and pressures padded
/// to the initial droplet count (the array shrinks after events).
inline void write_trajectory_csv(const std::string& path, const CoarseningRun& run,
                                 std::uint64_t config_hash, std::uint64_t seed) {
    auto f = detail::open_out(path);
    f << provenance_comment(config_hash, seed) << "\n";
    std::size_t width = 0;
    for (const auto& s : run.samples) width = std::max(width, s.state.size());

    f << "t,event";
    for (std::size_t i = 0; i < width; ++i) f << ",x" << i;
    for (std::size_t i = 0; i < width; ++i) f << ",p" << i;
    f << "\n";

    std::size_t next_event = 0;
    for (const auto& s : run.samples) {
        std::string marker;
        if (next_event < run.events.size() &&
            s.t == run.events[next_event].time &&
            s.state.size() == static_cast<std::size_t>(run.events[next_event].count_after)) {
            marker = to_string(run.events[next_event].kind);
            ++next_event;
        }
        f << s.t << "," << marker;
        for (std::size_t i = 0; i < width; ++i) {
            f << ",";
            if (i < s.state.size()) f << s.state.x[i];
        }
        for (std::size_t i = 0; i < width; ++i) {
            f << ",";
            if (i < s.state.size()) f << s.state.p[i];
        }
        f << "\n";
    }
}

/// One JSON object per line: time, kind, indices, count_after.
inline void write_events_jsonl(const std::string& path, const std::vector<EventRecord>& events,
                               std::uint64_t config_hash, std::uint64_t seed) {
    auto f = detail::open_out(path);
    for (const auto& e : events) {
        nlohmann::json j;
        j["time"] = e.time;
        j["kind"] = to_string(e.kind);
        j["indices"] = e.kind == EventKind::Collision
            ? nlohmann::json::array({e.index, e.partner})
            : nlohmann::json::array({e.index});
        j["count_after"] = e.count_after;
        j["config_hash"] = config_hash;
        j["seed"] = seed;
        f << j.dump() << "\n";
    }
}

/// Rejects config keys that no schema node claims; typos must fail fast
/// rather than silently fall back to defaults.
inline void require_keys(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const auto& k : allowed)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw InvalidInput(where + ": unknown key '" + item.key() + "'");
    }
}

inline double require_number(const nlohmann::json& obj, const std::string& key,
                             const std::string& where) {
    if (!obj.contains(key))
        throw InvalidInput(where + ": missing key '" + key + "'");
    if (!obj[key].is_number())
        throw InvalidInput(where + ": key '" + key + "' must be a number");
    return obj[key].get<double>();
}

inline double number_or(const nlohmann::json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw InvalidInput("key '" + key + "' must be a number");
    return obj[key].get<double>();
}

/// Distribution sub-config: {"family": "power"|"exponential"|"gaussian"|
/// "bump"|"mixture", "alpha": ..., "scale": ...}.
inline DistanceDistribution parse_distribution(const nlohmann::json& j) {
    require_keys(j, {"family", "alpha", "scale"}, "distances");
    if (!j.contains("family") || !j["family"].is_string())
        throw InvalidInput("distances: missing 'family' string");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "power")
        return DistanceDistribution::power(require_number(j, "alpha", "distances"),
                                           number_or(j, "scale", 1.0));
    if (fam == "exponential") return DistanceDistribution::exponential();
    if (fam == "gaussian") return DistanceDistribution::gaussian();
    if (fam == "bump") return DistanceDistribution::bump();
    if (fam == "mixture")
        return DistanceDistribution::mixture(require_number(j, "alpha", "distances"));
    throw InvalidInput("distances: unknown family '" + fam + "'");
}

/// Model parameter block with optional overrides.
inline ModelParams parse_params(const nlohmann::json& j) {
    require_keys(j,
                 {"epsilon", "sigma", "nu", "beta", "collision-delta", "collapse-factor",
                  "pressure-rate-prefactor"},
                 "params");
    double beta;
    if (j.contains("beta") && j["beta"].is_string()) {
        const std::string b = j["beta"].get<std::string>();
        if (b != "inf" && b != "infinite")
            throw InvalidInput("params: beta string must be 'inf'");
        beta = kInfiniteSlip;
    } else {
        beta = require_number(j, "beta", "params");
    }
    return ModelParams::make(require_number(j, "epsilon", "params"),
                             require_number(j, "sigma", "params"),
                             require_number(j, "nu", "params"), beta,
                             number_or(j, "collision-delta", -1.0),
                             number_or(j, "collapse-factor", 0.5),
                             number_or(j, "pressure-rate-prefactor", -1.0));
}

inline StepControl parse_step_control(const nlohmann::json& j) {
    require_keys(j, {"rel-tol", "abs-tol", "dt-init", "dt-min", "dt-max", "safety"},
                 "integrator");
    StepControl c;
    c.rel_tol = number_or(j, "rel-tol", c.rel_tol);
    c.abs_tol = number_or(j, "abs-tol", c.abs_tol);
    c.dt_init = number_or(j, "dt-init", c.dt_init);
    c.dt_min = number_or(j, "dt-min", c.dt_min);
    c.dt_max = number_or(j, "dt-max", c.dt_max);
    c.safety = number_or(j, "safety", c.safety);
    c.validate();
    return c;
}

inline nlohmann::json load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open config file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("config parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace slipdrop
