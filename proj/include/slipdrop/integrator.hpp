#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "slipdrop/errors.hpp"

namespace slipdrop {

using RhsFn = std::function<void(double t, const std::vector<double>& y,
                                 std::vector<double>& dydt)>;
using EventFn = std::function<double(double t, const std::vector<double>& y)>;
using ObserverFn = std::function<void(double t, const std::vector<double>& y)>;

struct StepControl {
    double rel_tol = 1e-8;
    double abs_tol = 1e-8;
    double dt_init = 1e-4;
    double dt_min = 1e-12;
    double dt_max = 1e8;
    double safety = 0.9;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw InvalidInput("step tolerances must be positive");
        if (!(0.0 < dt_min && dt_min <= dt_init && dt_init <= dt_max))
            throw InvalidInput("need 0 < dt_min <= dt_init <= dt_max");
        if (!(safety > 0.0 && safety < 1.0))
            throw InvalidInput("safety factor must lie in (0,1)");
    }
};

/// One classical RK4 step, fixed size.
inline void rk4_step(const RhsFn& rhs, double t, double dt, std::vector<double>& y) {
    const std::size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    rhs(t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    rhs(t + 0.5 * dt, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    rhs(t + 0.5 * dt, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
    rhs(t + dt, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

/// Several equal RK4 substeps from t_from to t_to (event localization helper).
inline std::vector<double> rk4_span(const RhsFn& rhs, std::vector<double> y,
                                    double t_from, double t_to, int substeps = 8) {
    const double h = (t_to - t_from) / substeps;
    for (int k = 0; k < substeps; ++k)
        rk4_step(rhs, t_from + k * h, h, y);
    return y;
}

struct StepOutcome {
    double t = 0.0;       ///< time after the accepted step
    double dt_used = 0.0;
    double dt_next = 0.0; ///< proposal for the next step
    double error = 0.0;   ///< scaled error estimate of the accepted step (<= 1)
};

namespace detail {

/// Mixed abs/rel max norm: per component |e| / (abs_tol + rel_tol * |y|),
/// which measures positions absolutely at small magnitude and pressures
/// relative to their own size.
inline double error_norm(const std::vector<double>& err,
                         const std::vector<double>& y_old,
                         const std::vector<double>& y_new,
                         const StepControl& ctrl) {
    double nrm = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double scale = ctrl.abs_tol +
            ctrl.rel_tol * std::max(std::fabs(y_old[i]), std::fabs(y_new[i]));
        nrm = std::max(nrm, std::fabs(err[i]) / scale);
    }
    return nrm;
}

} // namespace detail

/// One accepted adaptive step: RK4 with step doubling. The full-step and
/// two-half-step results differ by ~16x the local error of the latter, so
/// (y_half - y_full)/15 estimates it. Rejected steps halve dt; accepted
/// steps propose the next dt through the standard fifth-root controller.
/// `allow_landing` exempts a final, deliberately small landing step from
/// the dt_min check.
inline StepOutcome adaptive_step(const RhsFn& rhs, std::vector<double>& y, double t,
                                 double dt_try, const StepControl& ctrl,
                                 bool allow_landing = false) {
    ctrl.validate();
    const std::size_t n = y.size();
    double dt = std::min(dt_try, ctrl.dt_max);
    if (!allow_landing) dt = std::max(dt, ctrl.dt_min);
    if (!(dt > 0.0)) throw InvalidInput("step size must be positive");

    std::vector<double> y_full(n), y_half(n), err(n);
    for (;;) {
        // A trial step can drive the state somewhere the rhs rejects
        // (negative pressure, closed gap); treat that like an oversized
        // step and retry smaller.
        double nrm;
        try {
            y_full = y;
            rk4_step(rhs, t, dt, y_full);
            y_half = y;
            rk4_step(rhs, t, 0.5 * dt, y_half);
            rk4_step(rhs, t + 0.5 * dt, 0.5 * dt, y_half);
            for (std::size_t i = 0; i < n; ++i)
                err[i] = (y_half[i] - y_full[i]) / 15.0;
            nrm = detail::error_norm(err, y, y_half, ctrl);
        } catch (const InvalidInput&) {
            nrm = std::numeric_limits<double>::infinity();
        }
        if (std::isnan(nrm)) nrm = std::numeric_limits<double>::infinity();
        if (nrm <= 1.0) {
            y = y_half;
            double factor = nrm > 0.0
                ? std::min(5.0, std::max(0.2, ctrl.safety * std::pow(nrm, -0.2)))
                : 5.0;
            StepOutcome out;
            out.t = t + dt;
            out.dt_used = dt;
            out.dt_next = std::min(ctrl.dt_max, std::max(ctrl.dt_min, dt * factor));
            out.error = nrm;
            return out;
        }
        dt *= 0.5;
        if (dt < ctrl.dt_min)
            throw StiffnessError("step size underflow at t = " + std::to_string(t));
    }
}

/// Integrates to exactly t_target (no events), notifying the observer on
/// each accepted step.
inline double integrate_to(const RhsFn& rhs, std::vector<double>& y, double t,
                           double t_target, const StepControl& ctrl,
                           const ObserverFn& observer = nullptr) {
    ctrl.validate();
    if (t_target < t) throw InvalidInput("cannot integrate backwards");
    double dt_next = ctrl.dt_init;
    const double tiny = 1e-14 * std::max(1.0, std::fabs(t_target));
    while (t_target - t > tiny) {
        const double remaining = t_target - t;
        const bool landing = remaining <= dt_next;
        const StepOutcome s = adaptive_step(rhs, y, t, std::min(dt_next, remaining),
                                            ctrl, landing);
        t = s.t;
        dt_next = s.dt_next;
        if (observer) observer(t, y);
    }
    return t_target;
}

enum class StopReason { Event, Timeout };

struct EventOutcome {
    std::vector<double> y;
    double t = 0.0;
    int event_index = -1; ///< -1 on timeout
    StopReason reason = StopReason::Timeout;
};

/// Steps until some event function changes sign against its value at t0,
/// then localizes the crossing by bisection in time (re-integrating inside
/// the bracketing step) to |t - t*| <= 1e-10 * max(1, t). Threshold hits
/// count as crossings, so exact touches trigger. Simultaneous crossings
/// resolve to the lowest event index.
inline EventOutcome integrate_until_event(const RhsFn& rhs, std::vector<double> y,
                                          double t0, const std::vector<EventFn>& events,
                                          const StepControl& ctrl, double t_max,
                                          const ObserverFn& observer = nullptr) {
    ctrl.validate();
    if (t_max <= t0) throw InvalidInput("t_max must exceed the start time");

    std::vector<int> sign0(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        const double g = events[i](t0, y);
        if (g == 0.0)
            throw InvalidInput("event function " + std::to_string(i) +
                               " vanishes at the initial time");
        sign0[i] = g > 0.0 ? 1 : -1;
    }
    auto first_triggered = [&](double t, const std::vector<double>& state) {
        for (std::size_t i = 0; i < events.size(); ++i)
            if (sign0[i] * events[i](t, state) <= 0.0) return static_cast<int>(i);
        return -1;
    };

    double t = t0;
    double dt_next = ctrl.dt_init;
    const double tiny = 1e-14 * std::max(1.0, std::fabs(t_max));
    while (t_max - t > tiny) {
        const std::vector<double> y_prev = y;
        const double t_prev = t;
        const double remaining = t_max - t;
        const bool landing = remaining <= dt_next;
        const StepOutcome s = adaptive_step(rhs, y, t, std::min(dt_next, remaining),
                                            ctrl, landing);
        t = s.t;
        dt_next = s.dt_next;

        if (first_triggered(t, y) >= 0) {
            double lo_t = t_prev, hi_t = t;
            std::vector<double> lo_y = y_prev, hi_y = y;
            const double tol_loc = 1e-10 * std::max(1.0, std::fabs(hi_t));
            for (int it = 0; it < 200 && hi_t - lo_t > tol_loc; ++it) {
                const double mid_t = 0.5 * (lo_t + hi_t);
                std::vector<double> mid_y = rk4_span(rhs, lo_y, lo_t, mid_t);
                if (first_triggered(mid_t, mid_y) >= 0) {
                    hi_t = mid_t;
                    hi_y = std::move(mid_y);
                } else {
                    lo_t = mid_t;
                    lo_y = std::move(mid_y);
                }
            }
            if (observer) observer(hi_t, hi_y);
            EventOutcome out;
            out.event_index = first_triggered(hi_t, hi_y);
            out.y = std::move(hi_y);
            out.t = hi_t;
            out.reason = StopReason::Event;
            return out;
        }
        if (observer) observer(t, y);
    }

    EventOutcome out;
    out.y = std::move(y);
    out.t = t_max;
    out.reason = StopReason::Timeout;
    return out;
}

} // namespace slipdrop
