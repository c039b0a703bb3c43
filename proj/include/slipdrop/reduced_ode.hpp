#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "slipdrop/core.hpp"
#include "slipdrop/droplet_array.hpp"
#include "slipdrop/tridiagonal.hpp"

namespace slipdrop {

/// The three slip regimes of the reduced models. FiniteBeta is the full
/// strong-slip system; InfiniteBeta the free-film limit; ZeroBeta the
/// intermediate-slip limit, stated in its own rescaled time with raw gaps
/// in place of the finite-beta rescaled ones.
enum class Regime { FiniteBeta, InfiniteBeta, ZeroBeta };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::FiniteBeta: return "finite";
        case Regime::InfiniteBeta: return "infinite";
        default: return "zero";
    }
}

struct StateDerivative {
    std::vector<double> xdot, pdot;
};

/// Gap distances divided by I*nu*beta; only meaningful at finite slip.
inline std::vector<double> rescaled_gaps(const DropletArray& s, const ModelParams& params) {
    if (params.infinite_slip())
        throw RegimeError("rescaled gaps are defined for finite slip length only");
    const double scale = params.integral_I * params.nu * params.beta;
    std::vector<double> d = gaps(s, params.sigma);
    for (double& v : d) v /= scale;
    return d;
}

/// Builds the linear system for the interior velocities.
///
/// FiniteBeta: the velocity equation couples each interior droplet to its
/// neighbors through the precursor fluxes; collecting the velocity terms on
/// the left gives, with K_i = P_i / (2/(sqrt(3 sigma) beta) + 2 I nu P_i)
/// and D = dtilde + 2,
///   (1 - K_i I nu (1/D+ + 1/D-)) v_i - (K_i I nu / D+) v_{i+1}
///                                    - (K_i I nu / D-) v_{i-1}
///     = -K_i ((P_{i+1}-P_i)/D+ + (P_i-P_{i-1})/D-).
/// Since K_i I nu < 1/2 and D >= 2 the matrix is strictly diagonally
/// dominant for every admissible state.
///
/// InfiniteBeta: discrete Laplacian rows
///   v_{i+1} - 2 v_i + v_{i-1} = (P_{i+1} - P_{i-1})/(nu I).
///
/// ZeroBeta: velocities are explicit; returns an identity system whose
/// right-hand side already holds them.
inline TridiagonalSystem assemble_velocity_system(const DropletArray& s,
                                                  const ModelParams& params,
                                                  Regime regime) {
    const std::size_t n_droplets = s.size();
    if (n_droplets < 3)
        throw InvalidInput("velocity system needs at least one interior droplet");
    const std::size_t n = n_droplets - 2;

    TridiagonalSystem sys;
    sys.sub.assign(n, 0.0);
    sys.diag.assign(n, 0.0);
    sys.super.assign(n, 0.0);
    sys.rhs.assign(n, 0.0);

    const double I = params.integral_I;
    const double nu = params.nu;

    switch (regime) {
    case Regime::FiniteBeta: {
        if (params.infinite_slip())
            throw RegimeError("finite-beta assembly requires finite beta");
        const std::vector<double> dt = rescaled_gaps(s, params);
        const double wall = 2.0 / (std::sqrt(3.0 * params.sigma) * params.beta);
        for (std::size_t i = 1; i + 1 < n_droplets; ++i) {
            const std::size_t r = i - 1;
            const double K = s.p[i] / (wall + 2.0 * I * nu * s.p[i]);
            const double a = K * I * nu;
            const double Dm = dt[i - 1] + 2.0; // gap i
            const double Dp = dt[i] + 2.0;     // gap i+1
            sys.diag[r] = 1.0 - a * (1.0 / Dp + 1.0 / Dm);
            sys.super[r] = -a / Dp;
            sys.sub[r] = -a / Dm;
            sys.rhs[r] = -K * ((s.p[i + 1] - s.p[i]) / Dp + (s.p[i] - s.p[i - 1]) / Dm);
        }
        break;
    }
    case Regime::InfiniteBeta: {
        for (std::size_t i = 1; i + 1 < n_droplets; ++i) {
            const std::size_t r = i - 1;
            sys.sub[r] = 1.0;
            sys.diag[r] = -2.0;
            sys.super[r] = 1.0;
            sys.rhs[r] = (s.p[i + 1] - s.p[i - 1]) / (nu * I);
        }
        break;
    }
    case Regime::ZeroBeta: {
        const std::vector<double> d = gaps(s, params.sigma);
        const double c = std::sqrt(3.0 * params.sigma) * I / 2.0;
        for (std::size_t i = 1; i + 1 < n_droplets; ++i) {
            const std::size_t r = i - 1;
            sys.diag[r] = 1.0;
            sys.rhs[r] = -c * s.p[i] *
                ((s.p[i + 1] - s.p[i]) / d[i] + (s.p[i] - s.p[i - 1]) / d[i - 1]);
        }
        break;
    }
    }
    return sys;
}

/// Solves the assembled system and pads the pinned boundary velocities.
inline std::vector<double> solve_velocities(const TridiagonalSystem& sys) {
    const std::vector<double> interior = solve_tridiagonal(sys);
    std::vector<double> v(interior.size() + 2, 0.0);
    for (std::size_t i = 0; i < interior.size(); ++i) v[i + 1] = interior[i];
    return v;
}

/// Precursor-layer fluxes J_1..J_N between neighboring droplets, oriented
/// so J_k > 0 when droplet k carries the higher pressure. At finite slip
/// the migration velocities feed back into the flux; in the
/// intermediate-slip limit that correction has already vanished.
inline std::vector<double> precursor_fluxes(const DropletArray& s,
                                            const std::vector<double>& velocities,
                                            const ModelParams& params,
                                            Regime regime) {
    const std::size_t n_gaps = s.size() - 1;
    std::vector<double> J(n_gaps);
    const double Inu = params.integral_I * params.nu;

    switch (regime) {
    case Regime::FiniteBeta: {
        const std::vector<double> dt = rescaled_gaps(s, params);
        for (std::size_t k = 1; k <= n_gaps; ++k) {
            const double dp = s.p[k] - s.p[k - 1];
            const double vsum = velocities[k] + velocities[k - 1];
            J[k - 1] = (dp - Inu * vsum) / (Inu * (dt[k - 1] + 2.0));
        }
        break;
    }
    case Regime::InfiniteBeta: {
        for (std::size_t k = 1; k <= n_gaps; ++k) {
            const double dp = s.p[k] - s.p[k - 1];
            const double vsum = velocities[k] + velocities[k - 1];
            J[k - 1] = (dp - Inu * vsum) / (2.0 * Inu);
        }
        break;
    }
    case Regime::ZeroBeta: {
        const std::vector<double> d = gaps(s, params.sigma);
        for (std::size_t k = 1; k <= n_gaps; ++k)
            J[k - 1] = (s.p[k] - s.p[k - 1]) / d[k - 1];
        break;
    }
    }
    return J;
}

/// Pressure rates from the flux balance. A droplet gaining mass grows and
/// its pressure drops, so with C_i = kappa eps P_i^3 > 0:
///   interior:  pdot_i = C_i (J_i - J_{i+1})
///   boundary:  pdot_0 = -C_0 J_1,   pdot_N = +C_N J_N
/// (the pinned droplets exchange mass through their single inner gap).
/// These rows telescope: sum of P_i^-2 is conserved by the flow exactly.
inline std::vector<double> pressure_rates(const DropletArray& s,
                                          const std::vector<double>& velocities,
                                          const ModelParams& params,
                                          Regime regime) {
    const std::size_t n = s.size();
    std::vector<double> pdot(n, 0.0);
    if (n < 3) return pdot;

    const std::vector<double> J = precursor_fluxes(s, velocities, params, regime);
    for (std::size_t i = 1; i + 1 < n; ++i)
        pdot[i] = pressure_rate_coefficient(params, s.p[i]) * (J[i - 1] - J[i]);
    pdot[0] = -pressure_rate_coefficient(params, s.p[0]) * J[0];
    pdot[n - 1] = pressure_rate_coefficient(params, s.p[n - 1]) * J[n - 2];
    return pdot;
}

/// Full right-hand side: assemble, solve, then close the pressure rows.
/// Two pinned droplets alone are a frozen terminal state.
inline StateDerivative rhs(const DropletArray& s, const ModelParams& params, Regime regime) {
    StateDerivative d;
    if (s.size() < 3) {
        d.xdot.assign(s.size(), 0.0);
        d.pdot.assign(s.size(), 0.0);
        return d;
    }
    d.xdot = solve_velocities(assemble_velocity_system(s, params, regime));
    d.pdot = pressure_rates(s, d.xdot, params, regime);
    return d;
}

} // namespace slipdrop
