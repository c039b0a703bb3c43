#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>
#include <algorithm>

#include "slipdrop/errors.hpp"

namespace slipdrop {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]: {node, gauss weight, kronrod weight}.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
double gk15_panel(F&& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double g7 = gk15[0][1] * f0;
    double k15 = gk15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += gk15[i][1] * fi;
        k15 += gk15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;

    err = std::fabs(k15 - g7);
    return k15;
}

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]: split the worst
/// panel until the summed |K15 - G7| estimates meet the tolerance. The
/// estimate is kept unsharpened, which over-resolves smooth integrands a
/// little but stays honest at integrable singularities.
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           std::size_t max_intervals = 20000) {
    QuadratureResult out;
    if (a == b) return out;

    std::priority_queue<detail::Panel> heap;
    double total = 0.0, total_err = 0.0;
    auto push = [&](double lo, double hi) {
        detail::Panel p;
        p.a = lo;
        p.b = hi;
        p.value = detail::gk15_panel(f, lo, hi, p.err);
        if (!std::isfinite(p.value) || !std::isfinite(p.err))
            throw NumericalError("integrand produced a non-finite value");
        total += p.value;
        total_err += p.err;
        heap.push(p);
    };
    push(a, b);

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::fabs(b - a);
    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (heap.size() >= max_intervals)
            throw NumericalError("quadrature failed to converge: interval budget exhausted");
        const detail::Panel worst = heap.top();
        if (std::fabs(worst.b - worst.a) <= min_width)
            throw NumericalError("quadrature failed to converge: panel width underflow");
        heap.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }

    out.value = total;
    out.error_estimate = total_err;
    out.intervals = heap.size();
    return out;
}

/// Same, but splits [a, b] at the given interior knots first (distribution
/// support edges, survivor-function steps) so each piece is smooth.
template <class F>
QuadratureResult integrate_with_knots(F&& f, double a, double b,
                                      const std::vector<double>& knots,
                                      double abs_tol = 1e-12, double rel_tol = 1e-12) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    QuadratureResult out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] == pts[i + 1]) continue;
        const QuadratureResult r = integrate(f, pts[i], pts[i + 1], abs_tol, rel_tol);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.intervals += r.intervals;
    }
    return out;
}

/// Integrates f over [a, +inf) through the map x = a + t/(1-t). Suited to
/// integrands with exponential or faster-than-1/x^2 decay.
template <class F>
QuadratureResult integrate_to_infinity(F&& f, double a,
                                       double abs_tol = 1e-12, double rel_tol = 1e-12,
                                       const std::vector<double>& knots = {}) {
    auto g = [&f, a](double t) {
        const double u = 1.0 - t;
        const double x = a + t / u;
        return f(x) / (u * u);
    };
    std::vector<double> tknots;
    tknots.reserve(knots.size());
    for (double k : knots)
        if (k > a) tknots.push_back((k - a) / (1.0 + (k - a)));
    return integrate_with_knots(g, 0.0, 1.0, tknots, abs_tol, rel_tol);
}

/// Integrates f over [x0, +inf) for integrands decaying like x^(-1-alpha):
/// substituting x = x0 s^(-1/alpha) flattens the tail to an O(1) smooth
/// integrand on (0, 1], which the panel rule resolves to machine accuracy.
template <class F>
QuadratureResult integrate_algebraic_tail(F&& f, double x0, double alpha,
                                          double abs_tol = 1e-12, double rel_tol = 1e-12) {
    if (!(x0 > 0.0)) throw InvalidInput("tail start must be positive");
    if (!(alpha > 0.0)) throw InvalidInput("tail exponent must be positive");
    auto g = [&f, x0, alpha](double s) {
        const double x = x0 * std::pow(s, -1.0 / alpha);
        return f(x) * x0 / alpha * std::pow(s, -1.0 - 1.0 / alpha);
    };
    return integrate(g, 0.0, 1.0, abs_tol, rel_tol);
}

} // namespace slipdrop
