#pragma once

#include <cmath>
#include <limits>

#include "slipdrop/errors.hpp"
#include "slipdrop/quadrature.hpp"

namespace slipdrop {

inline constexpr double kInfiniteSlip = std::numeric_limits<double>::infinity();

/// Value of the contact-line integral obtained by adaptive quadrature of
///   I = integral_0^1 (5t^3 - t^2 - t) / sqrt(6t + 3) dt,
/// absolute error at most 1e-12. Substituting u = 6t + 3 integrates it in
/// closed form to (3 + sqrt 3)/35; that value is kept out of the runtime
/// path on purpose and serves as the test oracle.
inline double compute_integral_I() {
    const auto r = integrate([](double t) {
        return (5.0 * t * t * t - t * t - t) / std::sqrt(6.0 * t + 3.0);
    }, 0.0, 1.0, 1e-14, 1e-14);
    if (r.error_estimate > 1e-12)
        throw NumericalError("contact-line integral did not reach 1e-12");
    return r.value;
}

/// Physical and regularization constants of the reduced droplet models.
///
/// beta is the slip length; kInfiniteSlip selects the free-film limit.
/// collision_delta is the gap threshold below which two droplets merge,
/// defaulting to 2*epsilon. collapse_factor is the fraction of the maximal
/// admissible pressure at which a droplet is declared collapsed (0.5 unless
/// overridden). pressure_rate_prefactor is the free constant kappa in the
/// pressure-rate coefficient C(P) = kappa * epsilon * P^3; the default comes
/// from the parabolic-cap volume V(P) = 4/(9 sigma sqrt(12 sigma)) P^-2.
struct ModelParams {
    double epsilon = 0.0;
    double sigma = 0.0;
    double nu = 0.0;
    double beta = 0.0;
    double collision_delta = 0.0;
    double collapse_factor = 0.5;
    double pressure_rate_prefactor = 0.0;
    double integral_I = 0.0;

    static ModelParams make(double epsilon, double sigma, double nu, double beta,
                            double collision_delta = -1.0,
                            double collapse_factor = 0.5,
                            double pressure_rate_prefactor = -1.0) {
        if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
        if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
        if (!(nu > 0.0)) throw InvalidInput("nu must be positive");
        if (!(beta > 0.0)) throw InvalidInput("beta must be positive or infinite");

        ModelParams p;
        p.epsilon = epsilon;
        p.sigma = sigma;
        p.nu = nu;
        p.beta = beta;
        p.collision_delta = collision_delta > 0.0 ? collision_delta : 2.0 * epsilon;
        p.collapse_factor = collapse_factor;
        p.pressure_rate_prefactor = pressure_rate_prefactor > 0.0
            ? pressure_rate_prefactor
            : 9.0 * sigma * std::sqrt(12.0 * sigma) / 8.0;
        p.integral_I = compute_integral_I();

        const double closed = (3.0 + std::sqrt(3.0)) / 35.0;
        if (std::fabs(p.integral_I - closed) > 1e-12)
            throw NumericalError("cached contact-line integral disagrees with closed form");
        return p;
    }

    bool infinite_slip() const { return std::isinf(beta); }
};

/// P = 1 / (sqrt(3 sigma) R) and its inverse; the parabolic-cap relation
/// between droplet pressure and radius.
inline double radius_from_pressure(double pressure, double sigma) {
    if (!(pressure > 0.0)) throw InvalidInput("pressure must be positive");
    if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
    return 1.0 / (std::sqrt(3.0 * sigma) * pressure);
}

inline double pressure_from_radius(double radius, double sigma) {
    if (!(radius > 0.0)) throw InvalidInput("radius must be positive");
    if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
    return 1.0 / (std::sqrt(3.0 * sigma) * radius);
}

/// Largest pressure a quasistationary droplet can carry before the
/// intermolecular potential no longer supports it.
inline double max_pressure(double epsilon) {
    if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
    return 27.0 / (256.0 * epsilon);
}

/// Collapse trigger: a configurable fraction of max_pressure, 0.5 by default.
inline double collapse_threshold(double epsilon, double factor = 0.5) {
    return factor * max_pressure(epsilon);
}

/// Pressure-rate coefficient C(P) = kappa * epsilon * P^3.
inline double pressure_rate_coefficient(const ModelParams& params, double pressure) {
    return params.pressure_rate_prefactor * params.epsilon *
           pressure * pressure * pressure;
}

} // namespace slipdrop
