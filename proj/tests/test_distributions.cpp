#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "slipdrop/distributions.hpp"

using namespace slipdrop;

namespace {

std::vector<DistanceDistribution> catalogue() {
    return {DistanceDistribution::power(0.5), DistanceDistribution::power(2.0, 1.5),
            DistanceDistribution::exponential(), DistanceDistribution::gaussian(),
            DistanceDistribution::bump(), DistanceDistribution::mixture(2.0),
            DistanceDistribution::mixture(0.5)};
}

// Kolmogorov-Smirnov sup distance of a sample against the exact CDF.
double ks_distance(std::vector<double> xs, const DistanceDistribution& dist) {
    std::sort(xs.begin(), xs.end());
    const double N = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double F = 1.0 - dist.survivor(xs[i]);
        d = std::max(d, std::fabs(F - static_cast<double>(i) / N));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / N - F));
    }
    return d;
}

} // namespace

TEST_CASE("survivor pin values") {
    CHECK(DistanceDistribution::power(0.7, 2.0).survivor(2.0) == 1.0);
    CHECK(DistanceDistribution::power(0.7, 2.0).survivor(1.0) == 1.0);
    CHECK(DistanceDistribution::bump().survivor(0.0) == 1.0);
    CHECK(DistanceDistribution::gaussian().survivor(0.0) == 1.0);
    const double a = 2.0;
    CHECK(DistanceDistribution::mixture(a).survivor(0.0) == doctest::Approx(1.0));
}

TEST_CASE("survivor derivative is minus the density (finite differences)") {
    const double h = 1e-6;
    for (const auto& dist : catalogue()) {
        for (double x : {0.3, 0.9, 1.7, 3.1}) {
            const double q = dist.support_min() + x;
            const double fd = (dist.survivor(q + h) - dist.survivor(q - h)) / (2.0 * h);
            CHECK(std::fabs(fd + dist.density(q)) < 1e-6);
        }
    }
}

TEST_CASE("mixture tail follows its power part") {
    const double a = 2.0;
    const auto dist = DistanceDistribution::mixture(a);
    for (double x : {30.0, 60.0, 120.0}) {
        const double ratio = dist.survivor(x) * (1.0 + a) * std::pow(1.0 + x, a);
        CHECK(std::fabs(ratio - 1.0) < 1e-6);
    }
}

TEST_CASE("densities are normalized") {
    for (const auto& dist : catalogue())
        CHECK(normalization_check(dist) < 1e-10);
}

TEST_CASE("survivor equals one minus the density integral on a log grid") {
    for (const auto& dist : catalogue()) {
        const double lo = dist.support_min();
        for (double x = 0.05; x <= 40.0; x *= 3.0) {
            const auto cdf = integrate_with_knots(
                [&dist](double q) { return dist.density(q); }, lo, lo + x,
                dist.knots(), 1e-13, 1e-13);
            CHECK(std::fabs(dist.survivor(lo + x) - (1.0 - cdf.value)) < 1e-10);
        }
    }
}

TEST_CASE("numeric inverse survivor hits its target") {
    for (const auto& dist : {DistanceDistribution::gaussian(), DistanceDistribution::bump(),
                             DistanceDistribution::mixture(2.0)}) {
        for (double u : {0.999, 0.7358, 0.5, 0.1, 1e-3, 1e-6}) {
            const double x = dist.inverse_survivor(u);
            CHECK(std::fabs(dist.survivor(x) - u) <= 1e-11 * u);
        }
    }
    CHECK(DistanceDistribution::exponential().inverse_survivor(1.0) == 0.0);
    CHECK_THROWS_AS(DistanceDistribution::exponential().inverse_survivor(0.0), InvalidInput);
    CHECK_THROWS_AS(DistanceDistribution::exponential().inverse_survivor(1.5), InvalidInput);
}

TEST_CASE("sampling is deterministic and reproducible per seed") {
    const auto dist = DistanceDistribution::power(0.5);
    const auto a = sample(dist, 1000, 42);
    const auto b = sample(dist, 1000, 42);
    const auto c = sample(dist, 1000, 43);
    CHECK(a == b);
    CHECK(a != c);
    CHECK_THROWS_AS(sample(dist, 0, 1), InvalidInput);
}

TEST_CASE("power sampler: empirical survivor at 2A matches (1/2)^alpha") {
    const double alpha = 0.5, A = 1.0;
    const std::size_t N = 1000000;
    const auto xs = sample(DistanceDistribution::power(alpha, A), N, 7);
    std::size_t above = 0;
    for (double x : xs)
        if (x > 2.0 * A) ++above;
    const double p = std::pow(0.5, alpha);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(N));
    CHECK(std::fabs(static_cast<double>(above) / static_cast<double>(N) - p) < 3.0 * sigma);
}

TEST_CASE("exponential sampler: unit mean within three sigma") {
    const std::size_t N = 1000000;
    const auto xs = sample(DistanceDistribution::exponential(), N, 11);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(N);
    CHECK(std::fabs(mean - 1.0) < 3.0 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("samplers pass a KS check against the exact CDF") {
    const std::size_t N = 100000;
    const double bound = 1.63 / std::sqrt(static_cast<double>(N));
    std::uint64_t seed = 100;
    for (const auto& dist : catalogue())
        CHECK(ks_distance(sample(dist, N, seed++), dist) < bound);
}

TEST_CASE("sorted sampling is ordered for the absorption model") {
    const auto xs = sample(DistanceDistribution::gaussian(), 500, 3, true);
    CHECK(std::is_sorted(xs.rbegin(), xs.rend()));
}

TEST_CASE("mixture density dips then peaks (alpha = 2)") {
    const auto dist = DistanceDistribution::mixture(2.0);
    CHECK(dist.density(0.05) < dist.density(0.0));
    // The density falls into a dip and recovers to an interior local
    // maximum before its final decay.
    double dip_x = 0.0, dip_f = dist.density(0.0);
    for (double x = 0.0; x <= 2.5; x += 1e-3) {
        const double f = dist.density(x);
        if (f < dip_f) {
            dip_f = f;
            dip_x = x;
        }
    }
    double peak_x = dip_x, peak_f = dip_f;
    for (double x = dip_x; x <= 10.0; x += 1e-3) {
        const double f = dist.density(x);
        if (f > peak_f) {
            peak_f = f;
            peak_x = x;
        }
    }
    CHECK(dip_x > 0.1);
    CHECK(peak_x > dip_x);
    CHECK(peak_x < 9.0);
    CHECK(peak_f > 1.05 * dip_f);
    // Exactly one slope sign change from the start up to the peak.
    int changes = 0;
    double prev = dist.density(0.011) - dist.density(0.01);
    for (double x = 0.02; x < peak_x - 0.02; x += 0.01) {
        const double slope = dist.density(x + 1e-3) - dist.density(x);
        if (slope * prev < 0.0) ++changes;
        if (slope != 0.0) prev = slope;
    }
    CHECK(changes == 1);
}

TEST_CASE("mean distances") {
    CHECK(DistanceDistribution::exponential().mean() == 1.0);
    CHECK(DistanceDistribution::gaussian().mean() == doctest::Approx(1.0 / std::sqrt(M_PI)));
    CHECK(DistanceDistribution::bump().mean() == 3.0);
    CHECK(DistanceDistribution::power(2.0, 1.0).mean() == doctest::Approx(2.0));
    CHECK_THROWS_AS(DistanceDistribution::power(0.5).mean(), InvalidInput);
}

TEST_CASE("tabulated survivor adapter") {
    TabulatedSurvivor tab;
    tab.x = {0.0, 1.0, 2.0};
    tab.n = {1.0, 0.6, 0.2};
    const auto s = tab.as_survivor();
    CHECK(s.n(0.5) == doctest::Approx(0.8));
    CHECK(s.n(2.5) == doctest::Approx(0.2));
    CHECK(s.n(-1.0) == 1.0);

    TabulatedSurvivor bad;
    bad.x = {0.0, 1.0};
    bad.n = {0.5, 0.9};
    CHECK_THROWS_AS(bad.as_survivor(), InvalidInput);
}
