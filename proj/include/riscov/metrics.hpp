// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "riscov/propagation.hpp"
#include "riscov/scene.hpp"

namespace riscov {

struct SNRDistribution {
    std::vector<double> samples;  // sorted ascending
};

// Sorts a copy of the samples. Throws on empty input.
SNRDistribution make_distribution(std::vector<double> snr_db);

// Empirical quantile, linear interpolation between closest ranks:
// rank h = (n-1)*p/100. Throws on empty input or p outside (0, 100).
double percentile_snr(const SNRDistribution& dist, double p);

// Fraction of samples >= threshold; same inclusive rule as coverage_fraction.
double ccdf_at(const SNRDistribution& dist, double threshold_db);

// log2(1 + 10^(snr/10)); the unreachable marker maps to 0.
double shannon_rate(double snr_db);

struct RateReport {
    double cell_edge_before = 0.0;  // Shannon rate at the 5th-percentile SNR
    double cell_edge_after = 0.0;
    double median_before = 0.0;
    double median_after = 0.0;
    double mean_before = 0.0;       // mean of per-UE rates
    double mean_after = 0.0;
    double cell_edge_factor = 0.0;  // after/before; meaningless when *_infinite
    double median_factor = 0.0;
    double mean_factor = 0.0;
    bool cell_edge_infinite = false;  // before-rate was 0
    bool median_infinite = false;
    bool mean_infinite = false;
};

// Improvement as a percentage: (factor - 1) * 100.
double improvement_pct(double factor);

// Cell-edge and median rates evaluate Shannon at the percentile SNR; the mean
// averages per-UE rates. Throws when the maps differ in size.
RateReport rate_report(const std::vector<double>& before_snr_db,
                       const std::vector<double>& after_snr_db);

struct FresnelHistogram {
    static constexpr int kBins = 40;      // uniform over [0, 4)
    static constexpr double kBinWidth = 0.1;
    std::vector<int> counts;              // kBins + 1, last is overflow >= 4
    int total_pairs = 0;
    double near_field_fraction = 0.0;     // pairs with ratio < 1
};

// One fresnel_ratio sample per active (RIS, UE) pair, i.e. pairs where the
// RIS path contributes power. Throws on an empty deployment.
FresnelHistogram fresnel_distribution(const SceneMap& scene,
                                      const std::vector<RISUnit>& deployment,
                                      const std::vector<UESample>& ues);

}  // namespace riscov
