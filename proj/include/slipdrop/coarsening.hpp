#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "slipdrop/curve.hpp"
#include "slipdrop/droplet_array.hpp"
#include "slipdrop/integrator.hpp"
#include "slipdrop/reduced_ode.hpp"

namespace slipdrop {

/// An event detected in (or imminent for) a state. For a collision the
/// index names the left droplet of the touching pair.
struct DetectedEvent {
    EventKind kind = EventKind::Collapse;
    std::size_t index = 0;
};

/// All currently violated thresholds: droplets whose pressure reached the
/// collapse fraction of the maximal pressure, and gaps at or below the
/// collision distance. Threshold comparisons are closed. Collapses come
/// first, then collisions, each by ascending droplet index.
inline std::vector<DetectedEvent> detect(const DropletArray& s, const ModelParams& params) {
    std::vector<DetectedEvent> out;
    const double thr = collapse_threshold(params.epsilon, params.collapse_factor);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.p[i] >= thr) out.push_back({EventKind::Collapse, i});
    for (std::size_t k = 1; k < s.size(); ++k)
        if (gap(s, k, params.sigma) <= params.collision_delta)
            out.push_back({EventKind::Collision, k - 1});
    return out;
}

/// Merges droplets i and i+1 into one. The merged pressure conserves the
/// mass proxy exactly, (P^-2 + Q^-2)^(-1/2); the merged center is the
/// midpoint of the pair's left edges. A pair containing a pinned end
/// droplet is absorbed into it instead: the position stays pinned and only
/// the pressure rule applies.
inline DropletArray apply_collision(const DropletArray& s, std::size_t i,
                                    const ModelParams& params) {
    if (i + 1 >= s.size()) throw InvalidInput("collision index out of range");
    const double pi = s.p[i], pj = s.p[i + 1];
    const double merged_p = pi * pj / std::sqrt(pi * pi + pj * pj);

    double merged_x;
    if (i == 0)
        merged_x = 0.0;
    else if (i + 1 == s.size() - 1)
        merged_x = s.length;
    else
        merged_x = 0.5 * (s.x[i + 1] - radius(s, i + 1, params.sigma) +
                          s.x[i] - radius(s, i, params.sigma));

    DropletArray out;
    out.length = s.length;
    out.x.reserve(s.size() - 1);
    out.p.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == i) {
            out.x.push_back(merged_x);
            out.p.push_back(merged_p);
        } else if (j != i + 1) {
            out.x.push_back(s.x[j]);
            out.p.push_back(s.p[j]);
        }
    }
    return out;
}

/// Removes a collapsed interior droplet; its mass has drained into the
/// ultra-thin layer, so the neighbors keep their pressures and simply face
/// each other across the widened gap. Pinned end droplets cannot collapse
/// (they are reflection images).
inline DropletArray apply_collapse(const DropletArray& s, std::size_t i) {
    if (i >= s.size()) throw InvalidInput("collapse index out of range");
    if (i == 0 || i == s.size() - 1)
        throw InvalidInput("pinned boundary droplets cannot collapse");
    DropletArray out;
    out.length = s.length;
    out.x.reserve(s.size() - 1);
    out.p.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == i) continue;
        out.x.push_back(s.x[j]);
        out.p.push_back(s.p[j]);
    }
    return out;
}

inline DropletArray apply_event(const DropletArray& s, const DetectedEvent& e,
                                const ModelParams& params) {
    return e.kind == EventKind::Collision ? apply_collision(s, e.index, params)
                                          : apply_collapse(s, e.index);
}

enum class RunStatus { Exhausted, Timeout, NumericalFailure, ModelBreakdown };

inline const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Exhausted: return "exhausted";
        case RunStatus::Timeout: return "timeout";
        case RunStatus::NumericalFailure: return "numerical-failure";
        default: return "model-breakdown";
    }
}

struct TrajectorySample {
    double t = 0.0;
    DropletArray state;
};

/// Snapshot pair around one event, for replay checks.
struct EventTransition {
    DropletArray before;
    DropletArray after;
};

struct RunOptions {
    std::size_t snapshot_stride = 1; ///< keep every k-th accepted step
    bool store_transitions = true;
    StepControl step;
};

struct CoarseningRun {
    std::vector<TrajectorySample> samples;
    std::vector<EventRecord> events;
    std::vector<EventTransition> transitions;
    CoarseningCurve curve;
    DropletArray final_state;
    double t_end = 0.0;
    RunStatus status = RunStatus::Timeout;
    std::string failure; ///< diagnostic when status is NumericalFailure
};

namespace detail {

inline std::vector<double> pack(const DropletArray& s) {
    std::vector<double> y;
    y.reserve(2 * s.size());
    y.insert(y.end(), s.x.begin(), s.x.end());
    y.insert(y.end(), s.p.begin(), s.p.end());
    return y;
}

inline DropletArray unpack(const std::vector<double>& y, double length) {
    DropletArray s;
    const std::size_t n = y.size() / 2;
    s.x.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    s.p.assign(y.begin() + static_cast<std::ptrdiff_t>(n), y.end());
    s.length = length;
    return s;
}

} // namespace detail

/// Event-driven coarsening: integrate the reduced model until a collapse
/// or collision threshold is crossed, apply the update rule, restart with
/// the smaller array, and repeat until only the pinned droplets survive or
/// t_max is reached. Cascades (an update leaving another threshold already
/// violated) are applied lowest-index-first before integration resumes.
inline CoarseningRun run_coarsening(DropletArray initial, const ModelParams& params,
                                    Regime regime, double t_max,
                                    const RunOptions& options = {}) {
    CoarseningRun run;
    const double n0 = static_cast<double>(initial.size());
    double t = 0.0;

    run.curve.source = CurveSource::Simulation;
    run.curve.t.push_back(0.0);
    run.curve.n.push_back(1.0);
    run.samples.push_back({0.0, initial});

    DropletArray state = std::move(initial);

    // A pinned droplet at the collapse threshold leaves the model's domain
    // of validity (pinned droplets are reflection images and cannot be
    // removed); the run stops there with what it has.
    auto pinned_collapse = [&](const DetectedEvent& e) {
        return e.kind == EventKind::Collapse &&
               (e.index == 0 || e.index + 1 == state.size());
    };

    auto log_event = [&](const DetectedEvent& e, double when) {
        DropletArray after = apply_event(state, e, params);
        EventRecord rec;
        rec.time = when;
        rec.kind = e.kind;
        rec.index = static_cast<int>(e.index);
        rec.partner = e.kind == EventKind::Collision ? static_cast<int>(e.index + 1) : -1;
        rec.count_after = static_cast<int>(after.size());
        run.events.push_back(rec);
        if (options.store_transitions)
            run.transitions.push_back({state, after});
        run.curve.t.push_back(when);
        run.curve.n.push_back(static_cast<double>(after.size()) / n0);
        state = std::move(after);
        run.samples.push_back({when, state});
    };

    while (t < t_max && state.size() > 2) {
        // Apply any threshold already violated before integrating.
        for (auto pending = detect(state, params); !pending.empty();
             pending = detect(state, params)) {
            if (pinned_collapse(pending.front())) {
                run.status = RunStatus::ModelBreakdown;
                run.failure = "pinned boundary droplet reached the collapse threshold";
                run.final_state = std::move(state);
                run.t_end = t;
                return run;
            }
            log_event(pending.front(), t);
            if (state.size() <= 2) break;
        }
        if (state.size() <= 2) break;

        // Margin functions: positive while no threshold is crossed.
        const double thr = collapse_threshold(params.epsilon, params.collapse_factor);
        const double sigma = params.sigma;
        const double delta = params.collision_delta;
        const double length = state.length;
        const std::size_t count = state.size();
        std::vector<EventFn> margins;
        margins.reserve(2 * count - 1);
        for (std::size_t i = 0; i < count; ++i)
            margins.push_back([i, thr, count](double, const std::vector<double>& y) {
                return thr - y[count + i];
            });
        for (std::size_t k = 1; k < count; ++k)
            margins.push_back([k, count, sigma, delta](double, const std::vector<double>& y) {
                const double r_left = radius_from_pressure(y[count + k - 1], sigma);
                const double r_right = radius_from_pressure(y[count + k], sigma);
                return y[k] - y[k - 1] - r_left - r_right - delta;
            });

        const RhsFn f = [&params, regime, count, length](
                            double, const std::vector<double>& y, std::vector<double>& dydt) {
            const DropletArray s = detail::unpack(y, length);
            const StateDerivative d = rhs(s, params, regime);
            dydt.resize(y.size());
            for (std::size_t i = 0; i < count; ++i) {
                dydt[i] = d.xdot[i];
                dydt[count + i] = d.pdot[i];
            }
        };

        std::size_t step_index = 0;
        const std::size_t stride = std::max<std::size_t>(1, options.snapshot_stride);
        ObserverFn observer = [&](double when, const std::vector<double>& y) {
            if (++step_index % stride == 0)
                run.samples.push_back({when, detail::unpack(y, length)});
        };

        EventOutcome out;
        try {
            out = integrate_until_event(f, detail::pack(state), t, margins,
                                        options.step, t_max, observer);
        } catch (const NumericalError& e) {
            run.status = RunStatus::NumericalFailure;
            run.failure = e.what();
            run.final_state = std::move(state);
            run.t_end = t;
            return run;
        }
        t = out.t;
        state = detail::unpack(out.y, length);
        if (out.reason == StopReason::Timeout) {
            run.status = RunStatus::Timeout;
            run.final_state = std::move(state);
            run.t_end = t;
            return run;
        }

        // Identify what tripped and apply it (plus cascades on re-entry).
        const auto tripped = detect(state, params);
        DetectedEvent ev;
        if (!tripped.empty()) {
            ev = tripped.front();
        } else if (out.event_index >= 0) {
            // Localization stopped a hair before the closed threshold;
            // translate the margin index directly.
            const std::size_t idx = static_cast<std::size_t>(out.event_index);
            ev = idx < count ? DetectedEvent{EventKind::Collapse, idx}
                             : DetectedEvent{EventKind::Collision, idx - count};
        } else {
            continue;
        }
        if (pinned_collapse(ev)) {
            run.status = RunStatus::ModelBreakdown;
            run.failure = "pinned boundary droplet reached the collapse threshold";
            run.final_state = std::move(state);
            run.t_end = t;
            return run;
        }
        log_event(ev, t);
    }

    run.status = t >= t_max ? RunStatus::Timeout : RunStatus::Exhausted;
    run.final_state = std::move(state);
    run.t_end = t;
    return run;
}

} // namespace slipdrop
