#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "slipdrop/errors.hpp"

namespace slipdrop {

enum class CurveSource { Simulation, Law, Asymptote };

/// Step function n(t): relative droplet count against time. Points are
/// (t_j, n_j) with n right-continuous, so n(t) = n_j for t in [t_j, t_{j+1}).
struct CoarseningCurve {
    std::vector<double> t;
    std::vector<double> n;
    CurveSource source = CurveSource::Simulation;

    std::size_t size() const { return t.size(); }

    double eval(double time) const {
        if (t.empty() || time < t.front())
            throw InvalidInput("time before the first curve point");
        const auto it = std::upper_bound(t.begin(), t.end(), time);
        return n[static_cast<std::size_t>(it - t.begin()) - 1];
    }

    void validate() const {
        if (t.size() != n.size()) throw InvalidInput("curve arrays differ in length");
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (t[i] < t[i - 1]) throw InvalidInput("curve times must be non-decreasing");
            if (n[i] > n[i - 1]) throw InvalidInput("droplet count cannot grow");
        }
        if (!n.empty() && n.front() > 1.0 + 1e-15)
            throw InvalidInput("relative count starts above one");
    }
};

} // namespace slipdrop
