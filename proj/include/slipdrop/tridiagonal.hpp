#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "slipdrop/errors.hpp"

namespace slipdrop {

/// Banded system for the interior velocity unknowns. Row r couples
/// unknowns r-1, r, r+1; sub[0] and super[n-1] are ignored.
struct TridiagonalSystem {
    std::vector<double> sub, diag, super, rhs;

    std::size_t size() const { return diag.size(); }

    static TridiagonalSystem identity(std::vector<double> rhs_values) {
        TridiagonalSystem s;
        const std::size_t n = rhs_values.size();
        s.sub.assign(n, 0.0);
        s.diag.assign(n, 1.0);
        s.super.assign(n, 0.0);
        s.rhs = std::move(rhs_values);
        return s;
    }
};

/// Thomas elimination. No pivoting; intended for the diagonally dominant
/// (or discrete-Laplacian) systems produced by the velocity assembly.
inline std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0) return {};
    if (sys.sub.size() != n || sys.super.size() != n || sys.rhs.size() != n)
        throw InvalidInput("tridiagonal bands must share one length");

    std::vector<double> c(n), d(n);
    double piv = sys.diag[0];
    if (piv == 0.0) throw NumericalError("zero pivot in tridiagonal solve");
    c[0] = sys.super[0] / piv;
    d[0] = sys.rhs[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = sys.diag[i] - sys.sub[i] * c[i - 1];
        if (piv == 0.0) throw NumericalError("zero pivot in tridiagonal solve");
        c[i] = sys.super[i] / piv;
        d[i] = (sys.rhs[i] - sys.sub[i] * d[i - 1]) / piv;
    }
    std::vector<double> xv(n);
    xv[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        xv[i] = d[i] - c[i] * xv[i + 1];
    return xv;
}

/// Max-norm residual ||A x - rhs||_inf, for solution checks.
inline double tridiagonal_residual(const TridiagonalSystem& sys,
                                   const std::vector<double>& xv) {
    const std::size_t n = sys.size();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = sys.diag[i] * xv[i];
        if (i > 0) ax += sys.sub[i] * xv[i - 1];
        if (i + 1 < n) ax += sys.super[i] * xv[i + 1];
        r = std::max(r, std::fabs(ax - sys.rhs[i]));
    }
    return r;
}

} // namespace slipdrop
