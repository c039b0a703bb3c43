#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "slipdrop/absorption.hpp"
#include "slipdrop/curve.hpp"
#include "slipdrop/distributions.hpp"
#include "slipdrop/errors.hpp"
#include "slipdrop/quadrature.hpp"

namespace slipdrop {

/// Completion time of each family under the discrete coarsening law:
/// with S_p the suffix count sum,
///   T(d_m) = sum_{p=m}^{k} (1/B) (N d_p + sum_{p'>=p} (d_p' - d_p) i_p')
///            * sum_{r=1}^{i_p} 1/(N - S_{p+1} - r).
/// N counts the distances in the array, one more than the absorbable
/// droplets, so the smallest denominator is N - S_1 >= 1.
inline std::vector<double> discrete_law(const FamilySpec& spec, std::size_t N, double B) {
    spec.validate();
    if (!(B > 0.0)) throw InvalidInput("drift constant B must be positive");
    const std::size_t k = spec.families.size();
    const std::size_t total = spec.absorbable();
    if (N < total + 1)
        throw InvalidInput("family counts must leave a surviving droplet: need N > sum of counts");

    std::vector<double> suffix_count(k + 1, 0.0), suffix_di(k + 1, 0.0);
    for (std::size_t p = k; p-- > 0;) {
        suffix_count[p] = suffix_count[p + 1] + static_cast<double>(spec.families[p].count);
        suffix_di[p] = suffix_di[p + 1] +
            spec.families[p].distance * static_cast<double>(spec.families[p].count);
    }

    std::vector<double> term(k, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
        const double dp = spec.families[p].distance;
        const double weight = static_cast<double>(N) * dp +
                              (suffix_di[p] - dp * suffix_count[p]);
        detail::KahanSum h;
        const double base = static_cast<double>(N) - suffix_count[p + 1];
        for (std::size_t r = 1; r <= spec.families[p].count; ++r)
            h.add(1.0 / (base - static_cast<double>(r)));
        term[p] = weight * h.value() / B;
    }

    std::vector<double> T(k, 0.0);
    double acc = 0.0;
    for (std::size_t m = k; m-- > 0;) {
        acc += term[m];
        T[m] = acc;
    }
    return T;
}

/// A family in the continuum limit: a distance and its number fraction.
struct FractionFamily {
    double distance = 0.0;
    double fraction = 0.0;
};

struct LimitLawResult {
    std::vector<double> times; ///< per family; +inf where the log diverges
    bool diverged = false;
};

/// N -> infinity limit of the discrete law in per-droplet time units:
///   T(d_m) = sum_{p=m}^{k} (1/B) (d_p + sum_{p'>=p} (d_p' - d_p) i'_p')
///            * ln[(1 - S_{p+1}) / (1 - S_p)],  S_p = sum_{p'>=p} i'_p'.
/// When the fractions sum to one the first (last-absorbed) family's time
/// diverges; it is reported as +inf with the flag set.
inline LimitLawResult limit_law(const std::vector<FractionFamily>& families, double B) {
    if (families.empty()) throw InvalidInput("family list is empty");
    if (!(B > 0.0)) throw InvalidInput("drift constant B must be positive");
    const std::size_t k = families.size();
    double total = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        if (!(families[m].distance > 0.0) || !(families[m].fraction > 0.0))
            throw InvalidInput("family distances and fractions must be positive");
        if (m > 0 && families[m].distance > families[m - 1].distance)
            throw InvalidInput("family distances must be non-increasing");
        total += families[m].fraction;
    }
    if (total > 1.0 + 1e-12)
        throw InvalidInput("fractions must sum to at most one");

    std::vector<double> suffix_frac(k + 1, 0.0), suffix_df(k + 1, 0.0);
    for (std::size_t p = k; p-- > 0;) {
        suffix_frac[p] = suffix_frac[p + 1] + families[p].fraction;
        suffix_df[p] = suffix_df[p + 1] + families[p].distance * families[p].fraction;
    }

    LimitLawResult out;
    out.times.assign(k, 0.0);
    double acc = 0.0;
    for (std::size_t m = k; m-- > 0;) {
        const double dp = families[m].distance;
        const double weight = dp + (suffix_df[m] - dp * suffix_frac[m]);
        const double num = 1.0 - suffix_frac[m + 1];
        const double den = 1.0 - suffix_frac[m];
        if (den <= 0.0) {
            acc = std::numeric_limits<double>::infinity();
            out.diverged = true;
        } else {
            acc += weight * std::log(num / den) / B;
        }
        out.times[m] = acc;
    }
    return out;
}

/// Survivor of a pure family mixture (sum of point masses at the family
/// distances); steps down at each distance, post-drop value at the knot.
inline SurvivorFn delta_mixture_survivor(const std::vector<FractionFamily>& families) {
    std::vector<double> knots;
    for (const auto& f : families) knots.push_back(f.distance);
    return {[families](double x) {
                double n = 1.0;
                for (const auto& f : families)
                    if (f.distance <= x) n -= f.fraction;
                return n;
            },
            knots};
}

/// Continuous coarsening law
///   T(d) = (1/B) integral_0^d n(x) ln[n(x)/n(d)] dx
/// by knot-aware adaptive quadrature. Returns +inf when n(d) = 0 (total
/// absorption of everything closer than d takes forever per droplet).
inline double continuous_law(const SurvivorFn& surv, double d, double B,
                             double rel_tol = 1e-9) {
    if (!(B > 0.0)) throw InvalidInput("drift constant B must be positive");
    if (d < 0.0) throw InvalidInput("distance must be non-negative");
    if (d == 0.0) return 0.0;
    if (std::fabs(surv.n(0.0) - 1.0) > 1e-9)
        throw InvalidInput("survivor must start at one");
    // Coarse monotonicity check over the evaluation range.
    double prev = surv.n(0.0);
    for (int i = 1; i <= 64; ++i) {
        const double q = d * i / 64.0;
        const double v = surv.n(q);
        if (v > prev + 1e-12) throw InvalidInput("survivor function must not increase");
        prev = v;
    }

    const double nd = surv.n(d);
    if (!(nd > 0.0)) return std::numeric_limits<double>::infinity();
    const double log_nd = std::log(nd);
    const auto r = integrate_with_knots(
        [&surv, log_nd](double x) {
            const double nx = surv.n(x);
            return nx > 0.0 ? nx * (std::log(nx) - log_nd) : 0.0;
        },
        0.0, d, surv.knots, 1e-14, rel_tol);
    return r.value / B;
}

/// Constant in the Gaussian late-time law n(t) ~ exp(-C - B sqrt(pi) t),
/// evaluated by quadrature: C = (2/sqrt(pi)) int_0^inf e^{-2x^2}/erfc(x) dx - 1.
inline double gaussian_intercept_constant() {
    const auto r = integrate_to_infinity([](double x) {
        if (x > 26.0) return 0.0; // erfc underflow; integrand ~ x sqrt(pi) e^{-x^2}
        return std::exp(-2.0 * x * x) / std::erfc(x);
    }, 0.0, 1e-12, 1e-12);
    return 2.0 / std::sqrt(M_PI) * r.value - 1.0;
}

/// Late-time asymptote classes for n(t).
struct AsymptoteSpec {
    enum class Kind { Power, Exp, CR1, Gauss };
    Kind kind = Kind::Exp;
    double exponent = 0.0;      ///< Power: alpha/(alpha-1) < 0
    double time_scale = 1.0;    ///< Power: n = (time_scale * t)^exponent
    double rate = 0.0;          ///< Exp/Gauss: decay rate
    double log_intercept = 0.0; ///< Exp: ln n = log_intercept - rate t
    double A = 1.0, B = 1.0;    ///< CR1 parameters

    double eval(double t) const {
        switch (kind) {
        case Kind::Power: return std::pow(time_scale * t, exponent);
        case Kind::CR1: return std::exp(1.0 - std::sqrt(1.0 + 2.0 * B * t / A));
        default: return std::exp(log_intercept - rate * t);
        }
    }
};

/// Late-time coarsening asymptote of a catalogued initial distribution.
///
/// Distributions with an integrable survivor decay exponentially at rate
/// B / mean-distance with log-intercept (int n ln n)/mean; for the power
/// family this reduces to rate B(alpha-1)/(alpha A), for the Gaussian to
/// rate B sqrt(pi) and intercept -C. Power-type tails with alpha < 1 give
/// the algebraic law n = (t B (alpha-1)^2/(alpha A))^(alpha/(alpha-1)),
/// and alpha = 1 the exact square-root-exponential law. The mixture family
/// follows its power tail up to multiplicative constants.
inline AsymptoteSpec asymptotic_curve(const DistanceDistribution& dist, double B) {
    if (!(B > 0.0)) throw InvalidInput("drift constant B must be positive");
    AsymptoteSpec a;
    const double alpha = dist.alpha();
    switch (dist.id()) {
    case DistId::Power: {
        const double A = dist.scale();
        if (alpha < 1.0) {
            a.kind = AsymptoteSpec::Kind::Power;
            a.exponent = alpha / (alpha - 1.0);
            a.time_scale = B * (alpha - 1.0) * (alpha - 1.0) / (alpha * A);
        } else if (alpha == 1.0) {
            a.kind = AsymptoteSpec::Kind::CR1;
            a.A = A;
            a.B = B;
        } else {
            a.kind = AsymptoteSpec::Kind::Exp;
            a.rate = B * (alpha - 1.0) / (alpha * A);
            a.log_intercept = -1.0 / (alpha - 1.0);
        }
        break;
    }
    case DistId::Exponential:
        a.kind = AsymptoteSpec::Kind::Exp;
        a.rate = B;
        a.log_intercept = -1.0;
        break;
    case DistId::Gaussian:
        a.kind = AsymptoteSpec::Kind::Gauss;
        a.rate = B * std::sqrt(M_PI);
        a.log_intercept = -gaussian_intercept_constant();
        break;
    case DistId::Bump: {
        // Integrable survivor: rate B/mean, intercept (int n ln n)/mean.
        a.kind = AsymptoteSpec::Kind::Exp;
        a.rate = B / dist.mean();
        const auto c1 = integrate_to_infinity([&dist](double x) {
            const double n = dist.survivor(x);
            return n > 0.0 ? n * std::log(n) : 0.0;
        }, 0.0, 1e-12, 1e-10);
        a.log_intercept = c1.value / dist.mean();
        break;
    }
    case DistId::Mixture: {
        if (alpha == 1.0)
            throw InvalidInput("mixture asymptote is not catalogued at the threshold alpha = 1");
        if (alpha < 1.0) {
            // Tail n ~ (1+x)^-alpha/(1+alpha): power class with an
            // effective scale, valid up to multiplicative constants.
            const double A_eff = std::pow(1.0 / (1.0 + alpha), 1.0 / alpha);
            a.kind = AsymptoteSpec::Kind::Power;
            a.exponent = alpha / (alpha - 1.0);
            a.time_scale = B * (alpha - 1.0) * (alpha - 1.0) / (alpha * A_eff);
        } else {
            a.kind = AsymptoteSpec::Kind::Exp;
            a.rate = B / dist.mean();
            // The survivor tail decays like x^(-alpha); flatten it.
            const auto nlogn = [&dist](double x) {
                const double n = dist.survivor(x);
                return n > 0.0 ? n * std::log(n) : 0.0;
            };
            const auto head = integrate(nlogn, 0.0, 10.0, 1e-12, 1e-10);
            const auto tail = integrate_algebraic_tail(nlogn, 10.0, alpha - 1.0,
                                                       1e-12, 1e-10);
            a.log_intercept = (head.value + tail.value) / dist.mean();
        }
        break;
    }
    }
    return a;
}

enum class FitModel { Power, Exp, CR1 };

struct FitWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double max_rel_residual = 0.0;
    std::size_t points = 0;
};

/// Time window covering survivor levels [n_lo, n_hi].
inline FitWindow window_from_survivor_range(const CoarseningCurve& c,
                                            double n_lo, double n_hi) {
    if (!(n_lo < n_hi)) throw InvalidInput("need n_lo < n_hi");
    FitWindow w{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.n[i] >= n_lo && c.n[i] <= n_hi) {
            w.t_lo = std::min(w.t_lo, c.t[i]);
            w.t_hi = std::max(w.t_hi, c.t[i]);
        }
    }
    if (!(w.t_lo < w.t_hi)) throw InvalidInput("no curve points in the survivor range");
    return w;
}

/// The last decade of n: [n_final, 10 n_final].
inline FitWindow default_late_window(const CoarseningCurve& c) {
    if (c.size() < 2) throw InvalidInput("curve too short");
    const double n_final = c.n.back();
    return window_from_survivor_range(c, n_final, std::min(1.0, 10.0 * n_final));
}

/// Joint estimate of the square-root-exponential scale when A and B are
/// not known: on a curve of that class, (1 - ln n)^2 = 1 + (2B/A) t, so a
/// straight-line fit of (1 - ln n)^2 against t recovers the only
/// identifiable combination B/A (slope/2) and checks intercept ~ 1.
struct Cr1ScaleFit {
    double B_over_A = 0.0;
    double intercept = 0.0;
    double max_rel_residual = 0.0;
    std::size_t points = 0;
};

inline Cr1ScaleFit fit_cr1_scale(const CoarseningCurve& curve, const FitWindow& window) {
    std::vector<double> X, Y;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double t = curve.t[i], n = curve.n[i];
        if (t < window.t_lo || t > window.t_hi || !(n > 0.0)) continue;
        const double s = 1.0 - std::log(n);
        X.push_back(t);
        Y.push_back(s * s);
    }
    if (X.size() < 20)
        throw InvalidInput("degenerate fit window: fewer than 20 usable points");
    const double npts = static_cast<double>(X.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        sx += X[i];
        sy += Y[i];
        sxx += X[i] * X[i];
        sxy += X[i] * Y[i];
    }
    const double det = npts * sxx - sx * sx;
    if (det == 0.0) throw InvalidInput("degenerate fit window: no abscissa spread");
    Cr1ScaleFit r;
    const double slope = (npts * sxy - sx * sy) / det;
    r.intercept = (sy * sxx - sx * sxy) / det;
    r.B_over_A = 0.5 * slope;
    r.points = X.size();
    double ylo = Y[0], yhi = Y[0];
    for (double y : Y) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    const double yscale = std::max(yhi - ylo, 1e-300);
    for (std::size_t i = 0; i < X.size(); ++i)
        r.max_rel_residual = std::max(
            r.max_rel_residual, std::fabs(Y[i] - (r.intercept + slope * X[i])) / yscale);
    return r;
}

/// Least squares in the linearizing coordinates of the chosen model:
///   Power: ln n vs ln t;  Exp: ln n vs t;  CR1: ln n vs sqrt(1 + 2Bt/A)
/// (a CR1 curve has slope -1 and intercept 1 there). The residual is the
/// worst ordinate misfit relative to the ordinate range.
inline FitResult fit_rate(const CoarseningCurve& curve, FitModel model,
                          const FitWindow& window, double A = 1.0, double B = 1.0) {
    std::vector<double> X, Y;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double t = curve.t[i], n = curve.n[i];
        if (t < window.t_lo || t > window.t_hi || !(n > 0.0)) continue;
        switch (model) {
        case FitModel::Power:
            if (!(t > 0.0)) continue;
            X.push_back(std::log(t));
            break;
        case FitModel::Exp:
            X.push_back(t);
            break;
        case FitModel::CR1:
            X.push_back(std::sqrt(1.0 + 2.0 * B * t / A));
            break;
        }
        Y.push_back(std::log(n));
    }
    if (X.size() < 20)
        throw InvalidInput("degenerate fit window: fewer than 20 usable points");

    const double npts = static_cast<double>(X.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        sx += X[i];
        sy += Y[i];
        sxx += X[i] * X[i];
        sxy += X[i] * Y[i];
    }
    const double det = npts * sxx - sx * sx;
    if (det == 0.0) throw InvalidInput("degenerate fit window: no abscissa spread");

    FitResult r;
    r.slope = (npts * sxy - sx * sy) / det;
    r.intercept = (sy * sxx - sx * sxy) / det;
    r.points = X.size();

    double ylo = Y[0], yhi = Y[0];
    for (double y : Y) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    const double yscale = std::max(yhi - ylo, 1e-300);
    for (std::size_t i = 0; i < X.size(); ++i)
        r.max_rel_residual = std::max(
            r.max_rel_residual,
            std::fabs(Y[i] - (r.intercept + r.slope * X[i])) / yscale);
    return r;
}

} // namespace slipdrop
