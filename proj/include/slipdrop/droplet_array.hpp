#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slipdrop/core.hpp"
#include "slipdrop/errors.hpp"

namespace slipdrop {

/// Positions and pressures of N+1 quasistationary droplets on [0, L].
/// Droplets are indexed 0..N; droplets 0 and N are pinned at the interval
/// ends (the array continues by reflection there). Radii and inter-droplet
/// gaps are derived quantities, not stored.
struct DropletArray {
    std::vector<double> x; ///< centers, strictly increasing, x[0]=0, x[N]=L
    std::vector<double> p; ///< pressures, all positive
    double length = 0.0;   ///< L

    std::size_t size() const { return x.size(); }
    std::size_t last() const { return x.size() - 1; }
    std::size_t interior_count() const { return x.size() >= 2 ? x.size() - 2 : 0; }
};

inline DropletArray make_droplet_array(std::vector<double> positions,
                                       std::vector<double> pressures) {
    if (positions.size() != pressures.size())
        throw InvalidInput("positions and pressures must have equal length");
    if (positions.size() < 2)
        throw InvalidInput("need at least the two pinned droplets");
    DropletArray s;
    s.x = std::move(positions);
    s.p = std::move(pressures);
    s.length = s.x.back();
    if (s.x.front() != 0.0)
        throw InvalidInput("first droplet must sit at x = 0");
    for (std::size_t i = 0; i + 1 < s.x.size(); ++i)
        if (!(s.x[i] < s.x[i + 1]))
            throw InvalidInput("droplet centers must be strictly increasing");
    for (double pi : s.p)
        if (!(pi > 0.0))
            throw InvalidInput("droplet pressures must be positive");
    return s;
}

inline double radius(const DropletArray& s, std::size_t i, double sigma) {
    return radius_from_pressure(s.p[i], sigma);
}

/// Gap k (k = 1..N) between the facing edges of droplets k-1 and k.
inline double gap(const DropletArray& s, std::size_t k, double sigma) {
    return s.x[k] - s.x[k - 1] - radius(s, k, sigma) - radius(s, k - 1, sigma);
}

inline std::vector<double> gaps(const DropletArray& s, double sigma) {
    std::vector<double> g(s.size() - 1);
    for (std::size_t k = 1; k < s.size(); ++k)
        g[k - 1] = gap(s, k, sigma);
    return g;
}

/// Throws unless all inter-droplet gaps are open. Collisions and their
/// cascades legitimately pass through states that fail this.
inline void validate_gaps(const DropletArray& s, double sigma) {
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!(gap(s, k, sigma) > 0.0))
            throw InvalidInput("droplet cores overlap at gap " + std::to_string(k));
}

/// Leading-order mass proxy: sum of P_i^-2 (each droplet's volume is
/// proportional to 1/P^2). Collisions conserve it; collapses remove
/// exactly the collapsed droplet's term.
inline double mass_proxy(const DropletArray& s) {
    double m = 0.0;
    for (double pi : s.p) m += 1.0 / (pi * pi);
    return m;
}

enum class EventKind { Collapse, Collision };

inline const char* to_string(EventKind k) {
    return k == EventKind::Collapse ? "COLLAPSE" : "COLLISION";
}

/// One coarsening event. For a collision, `index` is the left droplet of
/// the merged pair and `partner` the right one; for a collapse, `index` is
/// the removed droplet and `partner` is -1.
struct EventRecord {
    double time = 0.0;
    EventKind kind = EventKind::Collapse;
    int index = -1;
    int partner = -1;
    int count_after = 0;
};

} // namespace slipdrop
