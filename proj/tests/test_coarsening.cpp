#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "slipdrop/absorption.hpp"
#include "slipdrop/coarsening.hpp"

using namespace slipdrop;

namespace {

DropletArray state_from_gaps(const std::vector<double>& gap_values,
                             const std::vector<double>& pressures, double sigma) {
    std::vector<double> x(pressures.size());
    x[0] = 0.0;
    for (std::size_t k = 1; k < pressures.size(); ++k)
        x[k] = x[k - 1] + radius_from_pressure(pressures[k - 1], sigma) +
               radius_from_pressure(pressures[k], sigma) + gap_values[k - 1];
    return make_droplet_array(std::move(x), pressures);
}

} // namespace

TEST_CASE("detect: quiet state reports nothing") {
    const ModelParams p = ModelParams::make(0.1, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({1.0, 1.0}, {0.3, 0.35, 0.3}, 1.0);
    CHECK(detect(s, p).empty());
}

TEST_CASE("detect: pressure above half the maximal pressure collapses") {
    const ModelParams p = ModelParams::make(0.1, 1.0, 1.0, 1.0);
    CHECK(collapse_threshold(p.epsilon, p.collapse_factor) ==
          doctest::Approx(0.52734375));
    const DropletArray s = state_from_gaps({1.0, 1.0}, {0.3, 0.6, 0.3}, 1.0);
    const auto events = detect(s, p);
    REQUIRE(events.size() == 1);
    CHECK(events[0].kind == EventKind::Collapse);
    CHECK(events[0].index == 1);
}

TEST_CASE("detect: collision threshold is closed") {
    ModelParams p = ModelParams::make(0.1, 1.0, 1.0, 1.0);
    DropletArray s = state_from_gaps({0.2, 1.0}, {0.4, 0.4, 0.4}, 1.0);
    // Set the threshold to the representable gap value; <= must trigger.
    p.collision_delta = gap(s, 1, p.sigma);
    const auto events = detect(s, p);
    REQUIRE(events.size() == 1);
    CHECK(events[0].kind == EventKind::Collision);
    CHECK(events[0].index == 0);
}

TEST_CASE("collision of equal pressures gives p over sqrt 2") {
    const ModelParams p = ModelParams::make(0.1, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({0.1, 1.0, 1.0}, {0.5, 0.7, 0.7, 0.6}, 1.0);
    const DropletArray merged = apply_collision(s, 1, p);
    REQUIRE(merged.size() == 3);
    CHECK(merged.p[1] == doctest::Approx(0.7 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("collision pressures: (3,4) merge to 12/5") {
    const ModelParams p = ModelParams::make(0.001, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({1.0, 1.0, 1.0}, {1.0, 3.0, 4.0, 1.0}, 1.0);
    const DropletArray merged = apply_collision(s, 1, p);
    CHECK(merged.p[1] == 2.4);
    // Merged center: midpoint of the pair's left edges.
    const double expected_x = 0.5 * (s.x[2] - radius(s, 2, p.sigma) +
                                     s.x[1] - radius(s, 1, p.sigma));
    CHECK(merged.x[1] == doctest::Approx(expected_x).epsilon(1e-15));
}

TEST_CASE("collision conserves the mass proxy; collapse removes one term") {
    const ModelParams prm = ModelParams::make(0.05, 1.0, 1.0, 1.0);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> pd(0.2, 3.0);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> p(6), g(5, 1.5);
        for (double& v : p) v = pd(rng);
        const DropletArray s = state_from_gaps(g, p, 1.0);

        const std::size_t i = 1 + rep % 4;
        const double before = mass_proxy(s);
        const DropletArray merged = apply_collision(s, i, prm);
        CHECK(std::fabs(mass_proxy(merged) - before) <= 1e-14 * before);

        const DropletArray removed = apply_collapse(s, i);
        const double expected = before - 1.0 / (s.p[i] * s.p[i]);
        CHECK(std::fabs(mass_proxy(removed) - expected) <= 1e-14 * before);
    }
}

TEST_CASE("collision with a pinned droplet absorbs into it") {
    const ModelParams p = ModelParams::make(0.05, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({0.4, 1.0, 0.4}, {1.0, 1.0, 0.8, 1.2}, 1.0);

    const DropletArray left = apply_collision(s, 0, p);
    CHECK(left.x[0] == 0.0);
    CHECK(left.p[0] == doctest::Approx(1.0 / std::sqrt(2.0)));

    const DropletArray right = apply_collision(s, 2, p);
    CHECK(right.x.back() == s.length);
    CHECK(right.size() == 3);
}

TEST_CASE("collapse bookkeeping: the freed space joins the two gaps") {
    const ModelParams p = ModelParams::make(0.05, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({1.0, 2.0, 0.7}, {0.9, 1.1, 0.8, 1.0}, 1.0);
    const double d1 = gap(s, 2, p.sigma), d2 = gap(s, 3, p.sigma);
    const double r = radius(s, 2, p.sigma);
    const DropletArray out = apply_collapse(s, 2);
    const double widened = gap(out, 2, p.sigma);
    CHECK(std::fabs(widened - (d1 + d2 + 2.0 * r)) <= 1e-14 * widened);

    CHECK_THROWS_AS(apply_collapse(s, 0), InvalidInput);
    CHECK_THROWS_AS(apply_collapse(s, 3), InvalidInput);
}

TEST_CASE("three droplets, middle collapses, dynamics freezes") {
    const ModelParams p = ModelParams::make(0.1, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({1.0, 1.0}, {0.5, 0.6, 0.5}, 1.0);
    const DropletArray out = apply_collapse(s, 1);
    CHECK(out.size() == 2);
    const StateDerivative d = rhs(out, p, Regime::ZeroBeta);
    for (double v : d.xdot) CHECK(v == 0.0);
    for (double v : d.pdot) CHECK(v == 0.0);
}

TEST_CASE("uniform pressures: run times out with a flat trajectory") {
    const ModelParams p = ModelParams::make(0.05, 1.0, 1.0, kInfiniteSlip);
    const DropletArray s = state_from_gaps({1.0, 1.0, 1.0}, {0.5, 0.5, 0.5, 0.5}, 1.0);
    const CoarseningRun run = run_coarsening(s, p, Regime::InfiniteBeta, 5.0);
    CHECK(run.status == RunStatus::Timeout);
    CHECK(run.events.empty());
    CHECK(run.t_end == doctest::Approx(5.0));
    for (std::size_t i = 0; i < run.final_state.size(); ++i) {
        CHECK(run.final_state.x[i] == s.x[i]);
        CHECK(run.final_state.p[i] == s.p[i]);
    }
}

TEST_CASE("free film with a large slow end droplet: collision at the drift time") {
    // Two mobile droplets plus the pinned absorber; the migration analysis
    // predicts contact of the near pair once the closing distance is gone.
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, kInfiniteSlip);
    const double p_small = 0.01, p_big = 0.001;
    std::vector<double> pressures{p_small, p_small, p_small, p_big};
    std::vector<double> x{0.0, 150.0, 300.0, 1000.0};
    const DropletArray s = make_droplet_array(x, pressures);

    const auto dists = absorption_distances(s, prm.sigma);
    REQUIRE(dists.size() == 3);
    const double B = (p_small - p_big) / (prm.nu * prm.integral_I);
    const double predicted =
        (dists.back() - prm.collision_delta) * 3.0 / (2.0 * B);

    const CoarseningRun run = run_coarsening(s, prm, Regime::InfiniteBeta, 3.0 * predicted);
    REQUIRE(!run.events.empty());
    CHECK(run.events[0].kind == EventKind::Collision);
    CHECK(run.events[0].index == 2);
    CHECK(std::fabs(run.events[0].time / predicted - 1.0) < 0.05);
}

TEST_CASE("free film: the whole absorption sequence matches the exact model") {
    // Starting from four equal small droplets and a large slow one, the
    // reduced model absorbs them one by one; every collision time should
    // track the exact solver's prediction.
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, kInfiniteSlip);
    const DropletArray s = make_droplet_array({0.0, 150.0, 300.0, 450.0, 1200.0},
                                              {0.01, 0.01, 0.01, 0.01, 0.001});
    const CoarseningRun run = run_coarsening(s, prm, Regime::InfiniteBeta, 1e5);
    REQUIRE(run.events.size() == 3);

    const double B = (0.01 - 0.001) / (prm.nu * prm.integral_I);
    const auto res = simulate_exact(absorption_distances(s, prm.sigma), B, false);
    for (std::size_t e = 0; e < run.events.size(); ++e) {
        CHECK(run.events[e].kind == EventKind::Collision);
        CHECK(run.events[e].partner == static_cast<int>(4 - e)); // always the absorber
        CHECK(std::fabs(run.events[e].time / res.collision_times[e] - 1.0) < 0.05);
    }
}

TEST_CASE("free film before any event: positions follow the linear ramp") {
    // With equal small pressures ahead of a large slow droplet, droplet i
    // moves at B i / N; the full model should track that ramp closely
    // until the first collision.
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, kInfiniteSlip);
    const DropletArray s = make_droplet_array({0.0, 150.0, 300.0, 450.0, 1200.0},
                                              {0.01, 0.01, 0.01, 0.01, 0.001});
    const double B = (0.01 - 0.001) / (prm.nu * prm.integral_I);
    const CoarseningRun run = run_coarsening(s, prm, Regime::InfiniteBeta, 1000.0);
    CHECK(run.status == RunStatus::Timeout);
    for (const auto& sample : run.samples) {
        for (std::size_t i = 1; i + 1 < sample.state.size(); ++i) {
            const double ramp = s.x[i] + B * static_cast<double>(i) / 4.0 * sample.t;
            CHECK(std::fabs(sample.state.x[i] - ramp) <=
                  0.01 * std::max(1.0, B * sample.t));
        }
    }
}

TEST_CASE("intermediate slip with one small droplet: collapse comes first") {
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({2.0, 2.0, 2.0}, {0.5, 1.5, 0.5, 0.5}, 1.0);
    const CoarseningRun run = run_coarsening(s, prm, Regime::ZeroBeta, 50.0);
    REQUIRE(!run.events.empty());
    CHECK(run.events[0].kind == EventKind::Collapse);
    CHECK(run.events[0].index == 1);
    // The collapsing droplet's pressure sits at the threshold at the event.
    const double thr = collapse_threshold(prm.epsilon, prm.collapse_factor);
    CHECK(run.transitions[0].before.p[1] == doctest::Approx(thr).epsilon(1e-6));
}

TEST_CASE("slip length selects the first coarsening mechanism") {
    // Same four-droplet profile: at intermediate slip the small second
    // droplet collapses first; at beta = 5 migration wins and a pair
    // collides first.
    const DropletArray s = state_from_gaps({0.12, 0.12, 0.12},
                                           {0.9, 1.7, 0.9, 0.9}, 1.0);

    const ModelParams p_zero = ModelParams::make(0.025, 1.0, 1.0, 1.0);
    const CoarseningRun zero = run_coarsening(s, p_zero, Regime::ZeroBeta, 0.1);
    REQUIRE(!zero.events.empty());
    CHECK(zero.events[0].kind == EventKind::Collapse);
    CHECK(zero.events[0].index == 1);

    const ModelParams p_strong = ModelParams::make(0.025, 1.0, 1.0, 5.0);
    const CoarseningRun strong = run_coarsening(s, p_strong, Regime::FiniteBeta, 0.1);
    REQUIRE(!strong.events.empty());
    CHECK(strong.events[0].kind == EventKind::Collision);
}

TEST_CASE("no threshold is violated between events") {
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, 5.0);
    const DropletArray s = state_from_gaps({0.12, 0.12, 0.12},
                                           {0.9, 1.7, 0.9, 0.9}, 1.0);
    const CoarseningRun run = run_coarsening(s, prm, Regime::FiniteBeta, 0.1);
    REQUIRE(!run.events.empty());
    const double t_first = run.events[0].time;
    const double thr = collapse_threshold(prm.epsilon, prm.collapse_factor);
    for (const auto& sample : run.samples) {
        if (sample.t >= t_first) break;
        for (double p : sample.state.p) CHECK(p < thr);
        for (std::size_t k = 1; k < sample.state.size(); ++k)
            CHECK(gap(sample.state, k, prm.sigma) > prm.collision_delta);
    }
}

TEST_CASE("a pinned droplet at the collapse threshold stops the run cleanly") {
    // Near-uniform pressures with the highest at a pinned end: the
    // amplifying pressure dynamics drives it to the threshold, which the
    // model cannot resolve (pinned droplets are reflection images).
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, 1.0);
    const DropletArray s = state_from_gaps({2.0, 2.0}, {0.88, 0.9, 0.95}, 1.0);
    const CoarseningRun run = run_coarsening(s, prm, Regime::ZeroBeta, 1e5);
    CHECK(run.status == RunStatus::ModelBreakdown);
    CHECK(!run.failure.empty());
    CHECK(run.final_state.size() == 3);
}

TEST_CASE("curve structure and event accounting") {
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, 1.0);
    const DropletArray s =
        state_from_gaps({2.0, 2.0, 2.0, 2.0}, {0.5, 1.5, 0.5, 1.4, 0.5}, 1.0);
    const CoarseningRun run = run_coarsening(s, prm, Regime::ZeroBeta, 400.0);
    run.curve.validate();
    CHECK(run.curve.n.front() == 1.0);
    CHECK(run.events.size() == s.size() - run.final_state.size());
    CHECK(run.final_state.size() >= 2);
    for (std::size_t i = 1; i < run.samples.size(); ++i)
        CHECK(run.samples[i].t >= run.samples[i - 1].t);
    // Event log invariants: times never go back, one droplet lost apiece.
    for (std::size_t e = 0; e < run.events.size(); ++e) {
        if (e > 0) CHECK(run.events[e].time >= run.events[e - 1].time);
        CHECK(run.events[e].count_after ==
              static_cast<int>(s.size()) - static_cast<int>(e) - 1);
    }
}

TEST_CASE("replaying the event log reproduces every post-event state bit for bit") {
    const ModelParams prm = ModelParams::make(0.025, 1.0, 1.0, 1.0);
    const DropletArray s =
        state_from_gaps({2.0, 2.0, 2.0, 2.0}, {0.5, 1.5, 0.5, 1.4, 0.5}, 1.0);
    const CoarseningRun run = run_coarsening(s, prm, Regime::ZeroBeta, 400.0);
    REQUIRE(run.events.size() == run.transitions.size());
    for (std::size_t e = 0; e < run.events.size(); ++e) {
        const EventRecord& rec = run.events[e];
        const DetectedEvent ev{rec.kind, static_cast<std::size_t>(rec.index)};
        const DropletArray replay = apply_event(run.transitions[e].before, ev, prm);
        CHECK(replay.x == run.transitions[e].after.x);
        CHECK(replay.p == run.transitions[e].after.p);
        CHECK(static_cast<int>(replay.size()) == rec.count_after);
    }
}
