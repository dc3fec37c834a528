// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "riscov/deployment.hpp"
#include "riscov/metrics.hpp"
#include "riscov/propagation.hpp"
#include "riscov/scene.hpp"

using namespace riscov;

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
};

std::vector<double> random_snrs(Rng& rng, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(rng.uniform(-40.0, 60.0));
    return v;
}

CandidateSite site_facing_bs(Point3 pos, Point3 normal) {
    CandidateSite s;
    s.position = pos;
    s.normal = normal;
    s.mount = MountKind::Wall;
    s.feeding_bs = 0;
    return s;
}

SceneMap open_scene(double carrier_hz) {
    BandConfig band;
    band.carrier_hz = carrier_hz;
    return make_scene(200, 100, {}, {BsSite{Point3{0, 50, 10}, "bs0"}}, band);
}

}  // namespace

TEST_CASE("percentile_snr interpolates between closest ranks") {
    CHECK(percentile_snr(make_distribution({0.0, 10.0}), 50.0) == doctest::Approx(5.0));
    std::vector<double> ramp;
    for (int i = 1; i <= 100; ++i) ramp.push_back(static_cast<double>(i));
    const SNRDistribution dist = make_distribution(ramp);
    CHECK(percentile_snr(dist, 5.0) == doctest::Approx(5.95));
    CHECK(percentile_snr(dist, 50.0) == doctest::Approx(50.5));
    CHECK(percentile_snr(dist, 95.0) == doctest::Approx(95.05));
    CHECK(percentile_snr(make_distribution({7.0, 7.0, 7.0}), 30.0) == 7.0);
}

TEST_CASE("percentile_snr rejects out-of-range p and empty input") {
    const SNRDistribution dist = make_distribution({1.0, 2.0});
    CHECK_THROWS_AS(percentile_snr(dist, 0.0), ValidationError);
    CHECK_THROWS_AS(percentile_snr(dist, 100.0), ValidationError);
    CHECK_THROWS_AS(percentile_snr(dist, -5.0), ValidationError);
    CHECK_THROWS_AS(percentile_snr(dist, 120.0), ValidationError);
    CHECK_THROWS_AS(make_distribution({}), ValidationError);
}

TEST_CASE("property: percentile_snr is monotone in p and bounded by the data") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const SNRDistribution dist = make_distribution(random_snrs(rng, 31));
        double pa = rng.uniform(1.0, 99.0);
        double pb = rng.uniform(1.0, 99.0);
        if (pa > pb) std::swap(pa, pb);
        const double qa = percentile_snr(dist, pa);
        const double qb = percentile_snr(dist, pb);
        CHECK(qa <= qb + 1e-12);
        CHECK(qa >= dist.samples.front() - 1e-12);
        CHECK(qb <= dist.samples.back() + 1e-12);
    }
}

TEST_CASE("ccdf_at matches coverage_fraction bit for bit") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> raw = random_snrs(rng, 41);
        const SNRDistribution dist = make_distribution(raw);
        const double t = rng.uniform(-50.0, 70.0);
        CHECK(ccdf_at(dist, t) == coverage_fraction(raw, t));
    }
    const SNRDistribution dist = make_distribution({-5.0, 0.0, 5.0});
    CHECK(ccdf_at(dist, -10.0) == 1.0);
    CHECK(ccdf_at(dist, 10.0) == 0.0);
    CHECK(ccdf_at(dist, 0.0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("property: ccdf and strict cdf partition the samples") {
    Rng rng(29);
    const std::vector<double> raw = random_snrs(rng, 37);
    const SNRDistribution dist = make_distribution(raw);
    for (int trial = 0; trial < 40; ++trial) {
        const double t = rng.uniform(-50.0, 70.0);
        int below = 0;
        for (double v : raw)
            if (v < t) ++below;
        CHECK(ccdf_at(dist, t) ==
              doctest::Approx(1.0 - static_cast<double>(below) / raw.size()));
    }
}

TEST_CASE("shannon_rate anchors") {
    CHECK(shannon_rate(10.0) == doctest::Approx(3.4594).epsilon(1e-4));
    CHECK(shannon_rate(0.0) == 1.0);
    CHECK(shannon_rate(kUnreachableDb) == 0.0);
    CHECK(shannon_rate(20.0) == doctest::Approx(std::log2(101.0)));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double a = rng.uniform(-60.0, 60.0);
        double b = rng.uniform(-60.0, 60.0);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-9) continue;
        CHECK(shannon_rate(a) < shannon_rate(b));
    }
}

TEST_CASE("improvement_pct is (factor - 1) * 100") {
    CHECK(improvement_pct(1.0) == 0.0);
    CHECK(improvement_pct(3.6) == doctest::Approx(260.0));
    CHECK(improvement_pct(26.6) == doctest::Approx(2560.0));
    CHECK(improvement_pct(0.5) == doctest::Approx(-50.0));
}

TEST_CASE("rate_report on identical maps reports factor 1 everywhere") {
    Rng rng(11);
    const std::vector<double> snr = random_snrs(rng, 25);
    const RateReport rep = rate_report(snr, snr);
    CHECK(rep.cell_edge_factor == 1.0);
    CHECK(rep.median_factor == 1.0);
    CHECK(rep.mean_factor == 1.0);
    CHECK_FALSE(rep.cell_edge_infinite);
    CHECK_FALSE(rep.median_infinite);
    CHECK_FALSE(rep.mean_infinite);
}

TEST_CASE("rate_report evaluates Shannon at the percentile SNR") {
    std::vector<double> before, after;
    for (int i = 0; i < 21; ++i) {
        before.push_back(-10.0 + i);         // p5: -9, p50: 0
        after.push_back(5.0 + i);            // p5: 6, p50: 15
    }
    const RateReport rep = rate_report(before, after);
    CHECK(rep.cell_edge_before == doctest::Approx(shannon_rate(-9.0)));
    CHECK(rep.cell_edge_after == doctest::Approx(shannon_rate(6.0)));
    CHECK(rep.median_before == doctest::Approx(shannon_rate(0.0)));
    CHECK(rep.median_after == doctest::Approx(shannon_rate(15.0)));
    double mean_before = 0.0;
    for (double v : before) mean_before += shannon_rate(v);
    mean_before /= static_cast<double>(before.size());
    CHECK(rep.mean_before == doctest::Approx(mean_before).epsilon(1e-12));
    CHECK(rep.cell_edge_factor ==
          doctest::Approx(shannon_rate(6.0) / shannon_rate(-9.0)));
    CHECK(improvement_pct(rep.median_factor) > 0.0);
}

TEST_CASE("rate_report is order independent and rejects mismatched maps") {
    Rng rng(13);
    std::vector<double> a = random_snrs(rng, 30);
    std::vector<double> shuffled = a;
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.next() % i]);
    const RateReport rep = rate_report(shuffled, a);
    CHECK(rep.mean_factor == doctest::Approx(1.0));
    CHECK(rep.median_factor == doctest::Approx(1.0));
    CHECK_THROWS_AS(rate_report({1.0, 2.0}, {1.0}), ValidationError);
}

TEST_CASE("rate_report flags an unreachable before-state as infinite gain") {
    const std::vector<double> dead(10, kUnreachableDb);
    const std::vector<double> alive(10, 10.0);
    const RateReport rep = rate_report(dead, alive);
    CHECK(rep.cell_edge_infinite);
    CHECK(rep.median_infinite);
    CHECK(rep.mean_infinite);
    CHECK(rep.cell_edge_before == 0.0);
}

TEST_CASE("fresnel_distribution bins one active pair per reflector-UE link") {
    const SceneMap scene = open_scene(3.5e9);
    const RISUnit unit(site_facing_bs(Point3{100, 50, 10}, Point3{-1, 0, 0}), 5.3);
    const std::vector<UESample> ues{
        UESample{Point3{50, 50, 10}, false, 0},    // active, d2 = 50
        UESample{Point3{150, 50, 10}, false, 0},   // behind the surface
    };
    const FresnelHistogram hist = fresnel_distribution(scene, {unit}, ues);
    CHECK(hist.total_pairs == 1);
    // 2*sqrt(lambda * 100*50/150) / 5.3 = 0.6376
    CHECK(fresnel_ratio(100.0, 50.0, 3.5e9, 5.3) == doctest::Approx(0.6376).epsilon(1e-3));
    REQUIRE(hist.counts.size() == 41);
    CHECK(hist.counts[6] == 1);
    CHECK(hist.near_field_fraction == 1.0);
}

TEST_CASE("fresnel_distribution: mmWave small panel lands in the far field") {
    const SceneMap scene = open_scene(28e9);
    const RISUnit unit(site_facing_bs(Point3{100, 50, 10}, Point3{-1, 0, 0}), 0.67);
    const std::vector<UESample> ues{UESample{Point3{50, 50, 10}, false, 0}};
    const FresnelHistogram hist = fresnel_distribution(scene, {unit}, ues);
    CHECK(hist.total_pairs == 1);
    // 2*sqrt(0.0107*33.33)/0.67 = 1.7833
    CHECK(hist.counts[17] == 1);
    CHECK(hist.near_field_fraction == 0.0);
}

TEST_CASE("fresnel_distribution sends extreme ratios to the overflow bin") {
    const SceneMap scene = open_scene(3.5e9);
    const RISUnit unit(site_facing_bs(Point3{100, 50, 10}, Point3{-1, 0, 0}), 0.1);
    const std::vector<UESample> ues{UESample{Point3{50, 50, 10}, false, 0}};
    const FresnelHistogram hist = fresnel_distribution(scene, {unit}, ues);
    CHECK(hist.counts[40] == 1);
    CHECK(hist.total_pairs == 1);
}

TEST_CASE("fresnel_distribution counts pairs across multiple reflectors") {
    const SceneMap scene = open_scene(3.5e9);
    const RISUnit a(site_facing_bs(Point3{100, 50, 10}, Point3{-1, 0, 0}), 5.3);
    const RISUnit b(site_facing_bs(Point3{100, 20, 10}, Point3{-1, 0, 0}), 2.7);
    const std::vector<UESample> ues{
        UESample{Point3{50, 50, 1.5}, false, 0},
        UESample{Point3{60, 30, 1.5}, false, 0},
        UESample{Point3{199, 50, 1.5}, false, 0},  // behind both surfaces
    };
    const FresnelHistogram hist = fresnel_distribution(scene, {a, b}, ues);
    CHECK(hist.total_pairs == 4);
    int binned = 0;
    for (int c : hist.counts) binned += c;
    CHECK(binned == hist.total_pairs);
    CHECK_THROWS_AS(fresnel_distribution(scene, {}, ues), ValidationError);
}
