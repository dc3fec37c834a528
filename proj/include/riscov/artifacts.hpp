// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "riscov/deployment.hpp"
#include "riscov/metrics.hpp"
#include "riscov/scene.hpp"

namespace riscov {

// Shortest round-trip decimal form (to_chars); infinities print as inf/-inf.
std::string fmt_double(double v);

// FNV-1a over the formatted UE coordinates; identifies the measurement grid
// so reports can refuse to merge artifacts from different grids.
std::string grid_hash(const std::vector<UESample>& ues);

// CSV: x,y,z,snr_db,covered@<low>dB,covered@<high>dB
void write_grid_csv(const std::string& path, const std::vector<UESample>& ues,
                    const std::vector<double>& snr_db, double low_threshold_db,
                    double high_threshold_db);

// CSV: snr_db,cdf,ccdf — one row per sorted sample.
void write_snr_cdf_csv(const std::string& path, const std::vector<double>& snr_db);

void write_baseline_metrics_json(const std::string& path, const SceneMap& scene,
                                 const std::vector<UESample>& ues,
                                 const std::vector<double>& snr_db, double low_threshold_db,
                                 double high_threshold_db);

// JSON lines: one meta record, then one record per greedy iteration.
void write_placement_log_jsonl(const std::string& path, const SceneMap& scene,
                               const std::vector<UESample>& ues,
                               const DeploymentResult& result, double width_m,
                               std::uint64_t seed);

void write_placement_summary_json(const std::string& path, const SceneMap& scene,
                                  const std::vector<UESample>& ues,
                                  const DeploymentResult& result, double width_m,
                                  double near_field_fraction);

void write_rate_report_json(const std::string& path, const std::vector<UESample>& ues,
                            const RateReport& report);

// CSV: bin_lo,bin_hi,count with a final overflow row (bin_hi = inf).
void write_fresnel_histogram_csv(const std::string& path, const FresnelHistogram& hist);

struct SweepRow {
    double width_m = 0.0;
    int ris_count = 0;
    double per_bs_average = 0.0;
    std::string stop_reason;
    double baseline_coverage = 0.0;
    double final_coverage = 0.0;
    double cell_edge_rate_before = 0.0;
    double cell_edge_rate_after = 0.0;
    double cell_edge_improvement_pct = 0.0;
    double near_field_fraction = 0.0;
};

void write_sweep_summary_json(const std::string& path, const SceneMap& scene,
                              const std::vector<UESample>& ues,
                              const std::vector<SweepRow>& rows);

// Parses any artifact JSON produced above and prints a human-readable table;
// used by the report command. Throws ParseError on malformed artifacts or
// when the inputs carry different grid hashes.
std::string render_report(const std::vector<std::string>& artifact_paths);

}  // namespace riscov
