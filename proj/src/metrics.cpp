// SPDX-License-Identifier: Apache-2.0
#include "riscov/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "riscov/deployment.hpp"

namespace riscov {

SNRDistribution make_distribution(std::vector<double> snr_db) {
    if (snr_db.empty())
        throw ValidationError("make_distribution: empty SNR map");
    std::sort(snr_db.begin(), snr_db.end());
    return SNRDistribution{std::move(snr_db)};
}

double percentile_snr(const SNRDistribution& dist, double p) {
    const std::size_t n = dist.samples.size();
    if (n == 0)
        throw ValidationError("percentile_snr: empty distribution");
    if (!(p > 0.0) || !(p < 100.0))
        throw ValidationError("percentile_snr: p in (0, 100) violated");
    const double h = static_cast<double>(n - 1) * p / 100.0;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = h - static_cast<double>(lo);
    // equal endpoints interpolate to themselves, even at -inf
    if (dist.samples[lo] == dist.samples[hi]) return dist.samples[lo];
    return dist.samples[lo] + frac * (dist.samples[hi] - dist.samples[lo]);
}

double ccdf_at(const SNRDistribution& dist, double threshold_db) {
    return coverage_fraction(dist.samples, threshold_db);
}

double shannon_rate(double snr_db) {
    if (snr_db == kUnreachableDb) return 0.0;
    return std::log2(1.0 + db_to_linear(snr_db));
}

double improvement_pct(double factor) { return (factor - 1.0) * 100.0; }

namespace {

void fill_factor(double before, double after, double& factor, bool& infinite) {
    if (before > 0.0) {
        factor = after / before;
        infinite = false;
    } else {
        factor = 0.0;
        infinite = after > 0.0;
    }
}

}  // namespace

RateReport rate_report(const std::vector<double>& before_snr_db,
                       const std::vector<double>& after_snr_db) {
    if (before_snr_db.size() != after_snr_db.size())
        throw ValidationError("rate_report: SNR maps cover different UE sets");
    const SNRDistribution before = make_distribution(before_snr_db);
    const SNRDistribution after = make_distribution(after_snr_db);

    RateReport rep;
    rep.cell_edge_before = shannon_rate(percentile_snr(before, 5.0));
    rep.cell_edge_after = shannon_rate(percentile_snr(after, 5.0));
    rep.median_before = shannon_rate(percentile_snr(before, 50.0));
    rep.median_after = shannon_rate(percentile_snr(after, 50.0));

    double sum_before = 0.0, sum_after = 0.0;
    for (double v : before.samples) sum_before += shannon_rate(v);
    for (double v : after.samples) sum_after += shannon_rate(v);
    rep.mean_before = sum_before / static_cast<double>(before.samples.size());
    rep.mean_after = sum_after / static_cast<double>(after.samples.size());

    fill_factor(rep.cell_edge_before, rep.cell_edge_after, rep.cell_edge_factor,
                rep.cell_edge_infinite);
    fill_factor(rep.median_before, rep.median_after, rep.median_factor, rep.median_infinite);
    fill_factor(rep.mean_before, rep.mean_after, rep.mean_factor, rep.mean_infinite);
    return rep;
}

FresnelHistogram fresnel_distribution(const SceneMap& scene,
                                      const std::vector<RISUnit>& deployment,
                                      const std::vector<UESample>& ues) {
    if (deployment.empty())
        throw ValidationError("fresnel_distribution: empty deployment");
    FresnelHistogram hist;
    hist.counts.assign(FresnelHistogram::kBins + 1, 0);
    int near_field = 0;
    for (const RISUnit& ris : deployment) {
        const Point3 bs =
            scene.bs_sites[static_cast<std::size_t>(ris.site.feeding_bs)].position;
        const double d1 = std::max(distance(bs, ris.site.position), 1.0);
        for (const UESample& ue : ues) {
            if (!ris_link_dbm(scene, ris, ue.position)) continue;
            const double d2 = std::max(distance(ris.site.position, ue.position), 1.0);
            const double ratio = fresnel_ratio(d1, d2, scene.band.carrier_hz, ris.width_m);
            const int bin = std::min(static_cast<int>(ratio / FresnelHistogram::kBinWidth),
                                     FresnelHistogram::kBins);
            ++hist.counts[static_cast<std::size_t>(bin)];
            ++hist.total_pairs;
            if (ratio < 1.0) ++near_field;
        }
    }
    hist.near_field_fraction =
        hist.total_pairs > 0
            ? static_cast<double>(near_field) / static_cast<double>(hist.total_pairs)
            : 0.0;
    return hist;
}

}  // namespace riscov
