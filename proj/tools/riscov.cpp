// SPDX-License-Identifier: Apache-2.0
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riscov/commands.hpp"
#include "riscov/config.hpp"

namespace {

struct CliFlags {
    std::string scene;
    std::string config;
    std::string out;
    double width = 0.0;
    int max_ris = -1;
    double threshold_db = 0.0;
    int seed = -1;
    int workers = 0;
    bool has_width = false;
    bool has_threshold = false;
};

void add_common_flags(CLI::App* app, CliFlags& flags) {
    app->add_option("--scene", flags.scene, "Scene JSON file (omit to generate a scene)");
    app->add_option("--config", flags.config, "Flat key=value config file");
    app->add_option("--out", flags.out, "Output directory");
    app->add_option("--seed", flags.seed, "Scene generator seed");
    app->add_option("--workers", flags.workers, "Worker threads for candidate scoring");
    app->add_option("--threshold-db", flags.threshold_db, "Coverage SNR threshold (dB)")
        ->each([&flags](const std::string&) { flags.has_threshold = true; });
    app->add_option("--max-ris", flags.max_ris, "Placement budget");
    app->add_option("--width", flags.width, "RIS width in meters")
        ->each([&flags](const std::string&) { flags.has_width = true; });
}

riscov::RunConfig merge_config(const CliFlags& flags) {
    riscov::RunConfig config;
    if (!flags.config.empty()) config = riscov::parse_config_file(flags.config);
    if (!flags.scene.empty()) riscov::set_config_value(config, "scene", flags.scene);
    if (!flags.out.empty()) riscov::set_config_value(config, "out_dir", flags.out);
    if (flags.seed >= 0) riscov::set_config_value(config, "seed", std::to_string(flags.seed));
    if (flags.workers > 0)
        riscov::set_config_value(config, "workers", std::to_string(flags.workers));
    if (flags.has_threshold)
        riscov::set_config_value(config, "snr_threshold_db", std::to_string(flags.threshold_db));
    if (flags.max_ris >= 0)
        riscov::set_config_value(config, "max_ris", std::to_string(flags.max_ris));
    if (flags.has_width)
        riscov::set_config_value(config, "width_m", std::to_string(flags.width));
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS coverage simulator and deployment planner"};
    app.require_subcommand(1);

    CliFlags baseline_flags, place_flags, sweep_flags;
    CLI::App* baseline = app.add_subcommand("baseline", "SNR map and coverage without RIS");
    add_common_flags(baseline, baseline_flags);
    CLI::App* place = app.add_subcommand("place", "Greedy RIS placement for one width");
    add_common_flags(place, place_flags);
    CLI::App* sweep = app.add_subcommand("sweep", "Greedy placement per configured width");
    add_common_flags(sweep, sweep_flags);

    std::vector<std::string> report_paths;
    CLI::App* report = app.add_subcommand("report", "Summarize artifacts");
    report->add_option("paths", report_paths, "Artifact JSON/JSONL files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (baseline->parsed()) return riscov::cmd_baseline(merge_config(baseline_flags));
        if (place->parsed()) return riscov::cmd_place(merge_config(place_flags));
        if (sweep->parsed()) return riscov::cmd_sweep(merge_config(sweep_flags));
        if (report->parsed()) return riscov::cmd_report(report_paths);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
