// SPDX-License-Identifier: Apache-2.0
#include "riscov/commands.hpp"

#include <filesystem>
#include <iostream>

#include "riscov/artifacts.hpp"
#include "riscov/deployment.hpp"
#include "riscov/metrics.hpp"
#include "riscov/scene_io.hpp"

namespace riscov {

namespace {

namespace fs = std::filesystem;

struct RunSetup {
    SceneMap scene;
    std::vector<UESample> ues;
    std::vector<CandidateSite> candidates;
    bool generated = false;
    fs::path out;
    int workers = 1;
    std::uint64_t seed = 0;
    double low_threshold_db = 0.0;
};

RunSetup prepare(const RunConfig& config, bool need_candidates) {
    RunSetup setup;
    setup.scene = resolve_scene(config, &setup.generated);
    setup.ues = ue_grid(setup.scene);
    if (need_candidates) {
        const double spacing = get_double(config, "candidate_spacing_m", 10.0);
        const std::vector<double> heights =
            get_double_list(config, "candidate_wall_heights_m", {3.0, 6.0});
        setup.candidates = ris_candidates(setup.scene, spacing, heights);
    }
    setup.out = get_string(config, "out_dir", "out");
    setup.workers = get_int(config, "workers", 1);
    setup.seed = static_cast<std::uint64_t>(get_int(config, "seed", 0));
    setup.low_threshold_db = get_double(config, "low_threshold_db", 0.0);
    fs::create_directories(setup.out);
    if (setup.generated) save_scene(setup.scene, (setup.out / "scene.json").string());
    return setup;
}

void write_baseline_artifacts(const RunSetup& setup, const std::vector<double>& snr_db,
                              const fs::path& dir) {
    const double high = setup.scene.band.snr_threshold_db;
    write_grid_csv((dir / "baseline_grid.csv").string(), setup.ues, snr_db,
                   setup.low_threshold_db, high);
    write_baseline_metrics_json((dir / "baseline_metrics.json").string(), setup.scene,
                                setup.ues, snr_db, setup.low_threshold_db, high);
    write_snr_cdf_csv((dir / "snr_cdf.csv").string(), snr_db);
}

FresnelHistogram placement_fresnel(const RunSetup& setup, const DeploymentResult& result) {
    if (result.state.placed.empty()) {
        FresnelHistogram empty;
        empty.counts.assign(FresnelHistogram::kBins + 1, 0);
        return empty;
    }
    return fresnel_distribution(setup.scene, result.state.placed, setup.ues);
}

void write_placement_artifacts(const RunSetup& setup, const DeploymentResult& result,
                               double width, const fs::path& dir) {
    fs::create_directories(dir);
    const double high = setup.scene.band.snr_threshold_db;
    const FresnelHistogram hist = placement_fresnel(setup, result);
    write_placement_log_jsonl((dir / "placement_log.jsonl").string(), setup.scene, setup.ues,
                              result, width, setup.seed);
    write_grid_csv((dir / "placement_grid.csv").string(), setup.ues, result.state.snr_db,
                   setup.low_threshold_db, high);
    write_rate_report_json((dir / "rate_report.json").string(), setup.ues,
                           rate_report(result.state.baseline_snr_db, result.state.snr_db));
    write_fresnel_histogram_csv((dir / "fresnel_histogram.csv").string(), hist);
    write_placement_summary_json((dir / "placement_summary.json").string(), setup.scene,
                                 setup.ues, result, width, hist.near_field_fraction);
}

SweepRow sweep_row(const DeploymentResult& result, double width, double near_field_fraction) {
    const RateReport rates = rate_report(result.state.baseline_snr_db, result.state.snr_db);
    SweepRow row;
    row.width_m = width;
    row.ris_count = result.ris_count;
    row.per_bs_average = result.per_bs_average;
    row.stop_reason = to_string(result.stop_reason);
    row.baseline_coverage = result.baseline_coverage;
    row.final_coverage = result.final_coverage;
    row.cell_edge_rate_before = rates.cell_edge_before;
    row.cell_edge_rate_after = rates.cell_edge_after;
    row.cell_edge_improvement_pct =
        rates.cell_edge_infinite ? 0.0 : improvement_pct(rates.cell_edge_factor);
    row.near_field_fraction = near_field_fraction;
    return row;
}

double resolved_width(const RunConfig& config, const SceneMap& scene) {
    return get_double(config, "width_m", scene.band.ris_widths_m.front());
}

}  // namespace

int cmd_baseline(const RunConfig& config) {
    RunSetup setup = prepare(config, false);
    const LinksPtr links = build_candidate_links(setup.scene, setup.ues, setup.candidates,
                                                 setup.workers);
    const PlacementState state = init_placement_state(setup.scene, setup.ues, setup.candidates,
                                                      links, setup.workers);
    write_baseline_artifacts(setup, state.snr_db, setup.out);
    const double high = setup.scene.band.snr_threshold_db;
    std::cout << "baseline: " << setup.ues.size() << " UEs, coverage "
              << fmt_double(coverage_fraction(state.snr_db, setup.low_threshold_db)) << " @ "
              << fmt_double(setup.low_threshold_db) << " dB, "
              << fmt_double(coverage_fraction(state.snr_db, high)) << " @ " << fmt_double(high)
              << " dB -> " << setup.out.string() << "\n";
    return 0;
}

int cmd_place(const RunConfig& config) {
    RunSetup setup = prepare(config, true);
    const double width = resolved_width(config, setup.scene);
    GreedyOptions options;
    options.width_m = width;
    options.max_ris = get_int(config, "max_ris", 1 << 30);
    options.workers = setup.workers;
    const DeploymentResult result =
        run_greedy(setup.scene, setup.ues, setup.candidates, options);
    write_baseline_artifacts(setup, result.state.baseline_snr_db, setup.out);
    write_placement_artifacts(setup, result, width, setup.out);
    std::cout << "place: width " << fmt_double(width) << " m, " << result.ris_count
              << " RIS, coverage " << fmt_double(result.baseline_coverage) << " -> "
              << fmt_double(result.final_coverage) << " @ "
              << fmt_double(setup.scene.band.snr_threshold_db) << " dB ("
              << to_string(result.stop_reason) << ") -> " << setup.out.string() << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& config) {
    RunSetup setup = prepare(config, true);
    const int max_ris = get_int(config, "max_ris", 1 << 30);
    const std::vector<DeploymentResult> results =
        sweep_sizes(setup.scene, setup.ues, setup.candidates, max_ris, setup.workers);
    const std::vector<double>& widths = setup.scene.band.ris_widths_m;
    if (!results.empty())
        write_baseline_artifacts(setup, results.front().state.baseline_snr_db, setup.out);
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const fs::path dir = setup.out / ("width_" + fmt_double(widths[i]));
        write_placement_artifacts(setup, results[i], widths[i], dir);
        const FresnelHistogram hist = placement_fresnel(setup, results[i]);
        rows.push_back(sweep_row(results[i], widths[i], hist.near_field_fraction));
        std::cout << "sweep: width " << fmt_double(widths[i]) << " m -> "
                  << results[i].ris_count << " RIS, coverage "
                  << fmt_double(results[i].final_coverage) << " ("
                  << to_string(results[i].stop_reason) << ")\n";
    }
    write_sweep_summary_json((setup.out / "sweep_summary.json").string(), setup.scene,
                             setup.ues, rows);
    return 0;
}

int cmd_report(const std::vector<std::string>& artifact_paths) {
    std::cout << render_report(artifact_paths);
    return 0;
}

}  // namespace riscov
