#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "slipdrop/curve.hpp"
#include "slipdrop/droplet_array.hpp"
#include "slipdrop/errors.hpp"

namespace slipdrop {

namespace detail {

/// Kahan compensated accumulator; keeps span/time bookkeeping at 1e-12
/// across 1e7 additions.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace detail

/// State of the exactly solvable absorption model: the distances of the
/// droplets still in play, with a lazy additive offset so a collision
/// updates every surviving distance in O(1). Actual distance i is
/// base[i] + offset; the last entry is the one adjacent to the absorbing
/// droplet and the only one that shrinks.
struct GapArray {
    std::vector<double> base;
    double offset = 0.0;
    double B = 0.0; ///< drift constant (p - pbar)/(nu I)
    double elapsed = 0.0;
    std::size_t absorbed = 0;
    bool ordered = false; ///< non-increasing actual distances

    std::size_t size() const { return base.size(); }
    double actual(std::size_t i) const { return base[i] + offset; }

    std::vector<double> actual_gaps() const {
        std::vector<double> g(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) g[i] = base[i] + offset;
        return g;
    }

    double span() const {
        detail::KahanSum s;
        for (double b : base) s.add(b);
        return s.value() + static_cast<double>(base.size()) * offset;
    }
};

inline GapArray make_gap_array(std::vector<double> gaps, double B,
                               bool sort_descending = true) {
    if (gaps.empty()) throw InvalidInput("need at least one distance");
    if (!(B > 0.0)) throw InvalidInput("drift constant B must be positive");
    for (double g : gaps)
        if (!(g > 0.0)) throw InvalidInput("distances must be positive");
    GapArray a;
    a.base = std::move(gaps);
    a.B = B;
    if (sort_descending)
        std::sort(a.base.begin(), a.base.end(), std::greater<double>());
    a.ordered = std::is_sorted(a.base.rbegin(), a.base.rend());
    return a;
}

/// k families of equal distances, non-increasing, covering the absorbable
/// droplets (one fewer than the number of distances in the array).
struct FamilySpec {
    struct Family {
        double distance = 0.0;
        std::size_t count = 0;
    };
    std::vector<Family> families;

    std::size_t absorbable() const {
        std::size_t n = 0;
        for (const Family& f : families) n += f.count;
        return n;
    }

    void validate() const {
        if (families.empty()) throw InvalidInput("family spec is empty");
        for (std::size_t m = 0; m < families.size(); ++m) {
            if (!(families[m].distance > 0.0))
                throw InvalidInput("family distances must be positive");
            if (families[m].count == 0)
                throw InvalidInput("family counts must be positive");
            if (m > 0 && families[m].distance > families[m - 1].distance)
                throw InvalidInput("family distances must be non-increasing");
        }
    }
};

/// Expands a family spec into the distance array it describes. The first
/// distance belongs to the pinned end droplet and never takes part in a
/// collision; it is set to the largest family value so the array stays
/// ordered. Total size is absorbable() + 1.
inline std::vector<double> expand_families(const FamilySpec& spec) {
    spec.validate();
    std::vector<double> gaps;
    gaps.reserve(spec.absorbable() + 1);
    gaps.push_back(spec.families.front().distance);
    for (const auto& f : spec.families)
        gaps.insert(gaps.end(), f.count, f.distance);
    return gaps;
}

/// Time until the droplet next to the absorber makes contact, from the
/// drift solution: the near distance shrinks at rate B(N-1)/N.
inline double next_collision_time(const GapArray& a) {
    const std::size_t n = a.size();
    if (n < 2) throw InvalidInput("no absorbable droplet left");
    return a.actual(n - 1) * static_cast<double>(n) /
           (static_cast<double>(n - 1) * a.B);
}

/// Drift solution between collisions: every distance except the last grows
/// by B t / N, the last shrinks by B (N-1) t / N. Rejects t beyond the next
/// contact. The result is materialized (offset folded in).
inline GapArray drift_solution(const GapArray& a, double t) {
    if (t < 0.0) throw InvalidInput("drift time must be non-negative");
    const std::size_t n = a.size();
    if (n >= 2 && t > next_collision_time(a) * (1.0 + 1e-12))
        throw InvalidInput("drift time crosses the next collision");

    GapArray out = a;
    const double gain = a.B * t / static_cast<double>(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.base[i] = a.actual(i) + gain;
    out.base[n - 1] = a.actual(n - 1) -
        a.B * static_cast<double>(n - 1) * t / static_cast<double>(n);
    out.offset = 0.0;
    out.elapsed = a.elapsed + t;
    return out;
}

struct AbsorptionResult {
    std::vector<double> collision_times; ///< cumulative, strictly increasing
    std::size_t initial_gap_count = 0;
    double initial_span = 0.0;
    double final_gap = 0.0; ///< equals initial_span up to rounding
    double B = 0.0;
};

/// Runs the absorption model to the end: with n distances left and near
/// distance g, contact happens after g n / ((n-1) B) and the freed distance
/// spreads evenly over the survivors, i.e. offset += g/(n-1). O(N) after
/// the initial sort.
inline AbsorptionResult simulate_exact(GapArray a) {
    const std::size_t N = a.size();
    if (N < 2) throw InvalidInput("need at least two distances to coarsen");

    AbsorptionResult res;
    res.initial_gap_count = N;
    res.B = a.B;
    res.initial_span = a.span();
    res.collision_times.reserve(N - 1);

    detail::KahanSum time;
    time.add(a.elapsed);
    detail::KahanSum offset;
    offset.add(a.offset);

    for (std::size_t n = N; n >= 2; --n) {
        const double g = a.base[n - 1] + offset.value();
        const double dt = g * static_cast<double>(n) /
                          (static_cast<double>(n - 1) * a.B);
        time.add(dt);
        offset.add(g / static_cast<double>(n - 1));
        a.base.pop_back();
        res.collision_times.push_back(time.value());
    }

    a.offset = offset.value();
    a.elapsed = time.value();
    a.absorbed = N - 1;
    res.final_gap = a.base.front() + a.offset;
    return res;
}

inline AbsorptionResult simulate_exact(std::vector<double> gaps, double B,
                                       bool sort_descending = true) {
    return simulate_exact(make_gap_array(std::move(gaps), B, sort_descending));
}

inline AbsorptionResult simulate_exact(const FamilySpec& spec, double B) {
    return simulate_exact(make_gap_array(expand_families(spec), B, false));
}

/// Relative droplet count after each collision: n(t_j) = (N - j)/N.
inline CoarseningCurve coarsening_curve(const AbsorptionResult& res) {
    CoarseningCurve c;
    c.source = CurveSource::Simulation;
    const double N = static_cast<double>(res.initial_gap_count);
    c.t.reserve(res.collision_times.size() + 1);
    c.n.reserve(res.collision_times.size() + 1);
    c.t.push_back(0.0);
    c.n.push_back(1.0);
    for (std::size_t j = 0; j < res.collision_times.size(); ++j) {
        c.t.push_back(res.collision_times[j]);
        c.n.push_back((N - static_cast<double>(j + 1)) / N);
    }
    return c;
}

/// Droplet distances in the convention of the migration analysis: plain
/// center distances, except the absorber-adjacent one which is measured
/// between droplet edges (it is the one that must close for a collision).
inline std::vector<double> absorption_distances(const DropletArray& s, double sigma) {
    if (s.size() < 2) throw InvalidInput("need at least two droplets");
    std::vector<double> d(s.size() - 1);
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        d[i - 1] = s.x[i] - s.x[i - 1];
    const std::size_t n = s.size() - 1;
    d[n - 1] = s.x[n] - s.x[n - 1] - radius(s, n, sigma) - radius(s, n - 1, sigma);
    return d;
}

} // namespace slipdrop
