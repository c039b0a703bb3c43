#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "slipdrop/errors.hpp"
#include "slipdrop/quadrature.hpp"

namespace slipdrop {

enum class DistId { Power, Exponential, Gaussian, Bump, Mixture };

inline const char* to_string(DistId id) {
    switch (id) {
        case DistId::Power: return "power";
        case DistId::Exponential: return "exponential";
        case DistId::Gaussian: return "gaussian";
        case DistId::Bump: return "bump";
        default: return "mixture";
    }
}

/// The catalogue of initial-distance distributions: density f, survivor
/// n(x) = 1 - integral of f, and exact inverse-survivor sampling.
///
///   power(alpha, A):  f = alpha A^alpha / x^(1+alpha) on (A, inf)
///   exponential:      f = exp(-x)
///   gaussian:         f = 2/sqrt(pi) exp(-x^2),    n = erfc(x)
///   bump:             f = (1-x)^2 exp(-x),         n = (1+x^2) exp(-x)
///   mixture(alpha):   f = a/(a+1) [(1-x)^2 e^-x + (1+x)^-(1+a)]
class DistanceDistribution {
public:
    static DistanceDistribution power(double alpha, double scale = 1.0) {
        if (!(alpha > 0.0)) throw InvalidInput("power exponent must be positive");
        if (!(scale > 0.0)) throw InvalidInput("power scale must be positive");
        return {DistId::Power, alpha, scale};
    }
    static DistanceDistribution exponential() { return {DistId::Exponential, 0.0, 1.0}; }
    static DistanceDistribution gaussian() { return {DistId::Gaussian, 0.0, 1.0}; }
    static DistanceDistribution bump() { return {DistId::Bump, 0.0, 1.0}; }
    static DistanceDistribution mixture(double alpha) {
        if (!(alpha > 0.0)) throw InvalidInput("mixture exponent must be positive");
        return {DistId::Mixture, alpha, 1.0};
    }

    DistId id() const { return id_; }
    double alpha() const { return alpha_; }
    double scale() const { return scale_; }

    double support_min() const { return id_ == DistId::Power ? scale_ : 0.0; }

    /// Points where the density is not smooth; quadrature splits there.
    std::vector<double> knots() const {
        return id_ == DistId::Power ? std::vector<double>{scale_} : std::vector<double>{};
    }

    double density(double x) const {
        switch (id_) {
        case DistId::Power:
            return x < scale_ ? 0.0
                              : alpha_ * std::pow(scale_, alpha_) / std::pow(x, 1.0 + alpha_);
        case DistId::Exponential:
            return x < 0.0 ? 0.0 : std::exp(-x);
        case DistId::Gaussian:
            return x < 0.0 ? 0.0 : 2.0 / std::sqrt(M_PI) * std::exp(-x * x);
        case DistId::Bump:
            return x < 0.0 ? 0.0 : (1.0 - x) * (1.0 - x) * std::exp(-x);
        default: {
            if (x < 0.0) return 0.0;
            const double a = alpha_;
            return a / (a + 1.0) *
                   ((1.0 - x) * (1.0 - x) * std::exp(-x) + std::pow(1.0 + x, -1.0 - a));
        }
        }
    }

    /// Survivor n(x): fraction of distances exceeding x; 1 below support.
    double survivor(double x) const {
        if (x <= support_min()) return 1.0;
        switch (id_) {
        case DistId::Power:
            return std::pow(scale_ / x, alpha_);
        case DistId::Exponential:
            return std::exp(-x);
        case DistId::Gaussian:
            return std::erfc(x);
        case DistId::Bump:
            return (1.0 + x * x) * std::exp(-x);
        default: {
            const double a = alpha_;
            return (std::pow(1.0 + x, -a) + a * std::exp(-x) * (1.0 + x * x)) / (1.0 + a);
        }
        }
    }

    /// Mean distance: integral of the survivor over the support. Finite for
    /// every catalogued family except power/mixture with alpha <= 1.
    double mean() const {
        switch (id_) {
        case DistId::Power:
            if (alpha_ <= 1.0) throw InvalidInput("power mean diverges for alpha <= 1");
            return scale_ * alpha_ / (alpha_ - 1.0);
        case DistId::Exponential: return 1.0;
        case DistId::Gaussian: return 1.0 / std::sqrt(M_PI);
        case DistId::Bump: return 3.0;
        default:
            if (alpha_ <= 1.0) throw InvalidInput("mixture mean diverges for alpha <= 1");
            return (1.0 / (alpha_ - 1.0) + 3.0 * alpha_) / (1.0 + alpha_);
        }
    }

    /// Solves n(x) = u for x. Closed form where available, otherwise
    /// bracketed Newton/bisection to |n(x) - u| <= 1e-12 u.
    double inverse_survivor(double u) const {
        if (!(u > 0.0 && u <= 1.0))
            throw InvalidInput("survivor level must lie in (0, 1]");
        switch (id_) {
        case DistId::Power:
            return scale_ * std::pow(u, -1.0 / alpha_);
        case DistId::Exponential:
            return -std::log(u);
        default:
            return invert_numeric(u);
        }
    }

    std::string name() const {
        std::string s = to_string(id_);
        if (id_ == DistId::Power || id_ == DistId::Mixture)
            s += "(alpha=" + std::to_string(alpha_) + ")";
        return s;
    }

private:
    DistanceDistribution(DistId id, double alpha, double scale)
        : id_(id), alpha_(alpha), scale_(scale) {}

    double invert_numeric(double u) const {
        double lo = support_min();
        if (u == 1.0) return lo;
        double hi = std::max(1.0, 2.0 * lo);
        while (survivor(hi) >= u) {
            hi *= 2.0;
            if (hi > 1e300) throw NumericalError("survivor never drops below target");
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            const double fx = survivor(x) - u;
            if (std::fabs(fx) <= 1e-12 * u) return x;
            if (fx > 0.0) lo = x; else hi = x;
            const double slope = density(x); // -n'
            double xn = slope > 0.0 ? x + fx / slope : x;
            if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
            if (hi - lo <= 1e-15 * std::max(1.0, hi)) return 0.5 * (lo + hi);
            x = xn;
        }
        return x;
    }

    DistId id_;
    double alpha_;
    double scale_;
};

/// Inverse-survivor sampling, deterministic for a given seed; optionally
/// sorted non-increasing, ready for the ordered absorption model.
inline std::vector<double> sample(const DistanceDistribution& dist, std::size_t count,
                                  std::uint64_t seed, bool sort_descending = false) {
    if (count == 0) throw InvalidInput("sample count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> out(count);
    for (double& v : out) {
        double u;
        do { u = uni(rng); } while (u <= 0.0);
        v = dist.inverse_survivor(u);
    }
    if (sort_descending) std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

/// |integral of f - 1| by adaptive quadrature over the support. Heavy
/// algebraic tails get the flattening substitution; the rest use the
/// rational map to infinity.
inline double normalization_check(const DistanceDistribution& dist) {
    const auto f = [&dist](double x) { return dist.density(x); };
    const double x0 = dist.support_min();
    const double mid = x0 + 8.0;
    const auto head = integrate_with_knots(f, x0, mid, dist.knots(), 1e-13, 1e-13);
    const bool algebraic = dist.id() == DistId::Power || dist.id() == DistId::Mixture;
    const auto tail = algebraic
        ? integrate_algebraic_tail(f, mid, dist.alpha(), 1e-13, 1e-13)
        : integrate_to_infinity(f, mid, 1e-13, 1e-13);
    return std::fabs(head.value + tail.value - 1.0);
}

/// A survivor function handed to the continuous coarsening law: callable
/// plus the points where it is allowed to be non-smooth.
struct SurvivorFn {
    std::function<double(double)> n;
    std::vector<double> knots;
};

inline SurvivorFn survivor_of(const DistanceDistribution& dist) {
    return {[dist](double x) { return dist.survivor(x); }, dist.knots()};
}

/// Piecewise-linear survivor loaded from tabulated (x, n) pairs; exists to
/// run the continuous law on custom data.
struct TabulatedSurvivor {
    std::vector<double> x, n;

    void validate() const {
        if (x.size() != n.size() || x.size() < 2)
            throw InvalidInput("tabulated survivor needs at least two (x, n) pairs");
        for (std::size_t i = 1; i < x.size(); ++i) {
            if (!(x[i] > x[i - 1])) throw InvalidInput("tabulated x must increase");
            if (n[i] > n[i - 1]) throw InvalidInput("tabulated survivor must not increase");
        }
        if (n.front() > 1.0 + 1e-12) throw InvalidInput("survivor cannot exceed one");
    }

    double operator()(double q) const {
        if (q <= x.front()) return 1.0;
        if (q >= x.back()) return n.back();
        const auto it = std::upper_bound(x.begin(), x.end(), q);
        const std::size_t i = static_cast<std::size_t>(it - x.begin());
        const double w = (q - x[i - 1]) / (x[i] - x[i - 1]);
        return n[i - 1] + w * (n[i] - n[i - 1]);
    }

    SurvivorFn as_survivor() const {
        validate();
        return {[table = *this](double q) { return table(q); }, x};
    }
};

} // namespace slipdrop
