// SPDX-License-Identifier: Apache-2.0
#include "riscov/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "riscov/manhattan.hpp"
#include "riscov/scene_io.hpp"

namespace riscov {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        // scene source
        "scene",
        // manhattan generator
        "extent_m", "block_m", "street_m", "building_height_m", "height_jitter_frac",
        "wall_loss_db", "bs_count", "bs_height_min_m", "bs_height_max_m",
        // band parameters (override the scene file's band block)
        "carrier_hz", "bandwidth_hz", "bs_tx_power_dbm", "bs_array_gain_dbi",
        "ue_array_gain_dbi", "ue_noise_figure_db", "ue_placement", "ris_widths_m",
        "ris_reflection_loss_db", "snr_threshold_db", "coverage_target_fraction",
        "nlos_excess_db", "ue_height_m", "floor_height_m",
        // run parameters
        "candidate_spacing_m", "candidate_wall_heights_m", "width_m", "max_ris", "out_dir",
        "seed", "workers", "low_threshold_db",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: key \"" + key + "\" has non-numeric value \"" + value + "\"");
    }
}

}  // namespace

bool is_known_config_key(const std::string& key) { return known_keys().count(key) > 0; }

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("config: cannot open " + path);
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("config: " + path + ":" + std::to_string(line_no) +
                             ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (!is_known_config_key(key))
            throw ParseError("config: " + path + ":" + std::to_string(line_no) +
                             ": unknown key \"" + key + "\"");
        config.values[key] = value;
    }
    // relative scene paths resolve against the config file's directory
    const auto scene_it = config.values.find("scene");
    if (scene_it != config.values.end()) {
        const std::filesystem::path scene_path = scene_it->second;
        if (scene_path.is_relative()) {
            const auto base = std::filesystem::path(path).parent_path();
            if (!base.empty()) scene_it->second = (base / scene_path).string();
        }
    }
    return config;
}

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
    if (!is_known_config_key(key))
        throw ParseError("config: unknown key \"" + key + "\"");
    config.values[key] = value;
}

bool has_key(const RunConfig& config, const std::string& key) {
    return config.values.count(key) > 0;
}

std::string get_string(const RunConfig& config, const std::string& key,
                       const std::string& fallback) {
    const auto it = config.values.find(key);
    return it == config.values.end() ? fallback : it->second;
}

double get_double(const RunConfig& config, const std::string& key, double fallback) {
    const auto it = config.values.find(key);
    return it == config.values.end() ? fallback : parse_double(key, it->second);
}

int get_int(const RunConfig& config, const std::string& key, int fallback) {
    const double v = get_double(config, key, static_cast<double>(fallback));
    return static_cast<int>(v);
}

std::vector<double> get_double_list(const RunConfig& config, const std::string& key,
                                    const std::vector<double>& fallback) {
    const auto it = config.values.find(key);
    if (it == config.values.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const std::string stripped = trim(part);
        if (stripped.empty()) continue;
        out.push_back(parse_double(key, stripped));
    }
    if (out.empty())
        throw ParseError("config: key \"" + key + "\" has an empty list value");
    return out;
}

namespace {

BandConfig apply_band_overrides(const RunConfig& config, BandConfig band) {
    band.carrier_hz = get_double(config, "carrier_hz", band.carrier_hz);
    band.bandwidth_hz = get_double(config, "bandwidth_hz", band.bandwidth_hz);
    band.bs_tx_power_dbm = get_double(config, "bs_tx_power_dbm", band.bs_tx_power_dbm);
    band.bs_array_gain_dbi = get_double(config, "bs_array_gain_dbi", band.bs_array_gain_dbi);
    band.ue_array_gain_dbi = get_double(config, "ue_array_gain_dbi", band.ue_array_gain_dbi);
    band.ue_noise_figure_db =
        get_double(config, "ue_noise_figure_db", band.ue_noise_figure_db);
    band.ris_reflection_loss_db =
        get_double(config, "ris_reflection_loss_db", band.ris_reflection_loss_db);
    band.snr_threshold_db = get_double(config, "snr_threshold_db", band.snr_threshold_db);
    band.coverage_target_fraction =
        get_double(config, "coverage_target_fraction", band.coverage_target_fraction);
    band.nlos_excess_db = get_double(config, "nlos_excess_db", band.nlos_excess_db);
    band.ue_height_m = get_double(config, "ue_height_m", band.ue_height_m);
    band.floor_height_m = get_double(config, "floor_height_m", band.floor_height_m);
    band.ris_widths_m = get_double_list(config, "ris_widths_m", band.ris_widths_m);
    if (has_key(config, "ue_placement")) {
        const std::string mode = config.values.at("ue_placement");
        if (mode == "outdoor_only") {
            band.ue_placement = UePlacement::OutdoorOnly;
        } else if (mode == "indoor_and_outdoor") {
            band.ue_placement = UePlacement::IndoorAndOutdoor;
        } else {
            throw ParseError("config: ue_placement must be \"outdoor_only\" or "
                             "\"indoor_and_outdoor\"");
        }
    }
    return band;
}

}  // namespace

SceneMap resolve_scene(const RunConfig& config, bool* generated) {
    if (generated) *generated = false;
    if (has_key(config, "scene")) {
        SceneMap scene = load_scene(config.values.at("scene"));
        const BandConfig band = apply_band_overrides(config, scene.band);
        return make_scene(scene.width_m, scene.depth_m, std::move(scene.buildings),
                          std::move(scene.bs_sites), band);
    }
    ManhattanParams params;
    params.extent_m = get_double(config, "extent_m", params.extent_m);
    params.block_m = get_double(config, "block_m", params.block_m);
    params.street_m = get_double(config, "street_m", params.street_m);
    params.building_height_m =
        get_double(config, "building_height_m", params.building_height_m);
    params.height_jitter_frac =
        get_double(config, "height_jitter_frac", params.height_jitter_frac);
    params.wall_loss_db = get_double(config, "wall_loss_db", params.wall_loss_db);
    params.bs_count = get_int(config, "bs_count", params.bs_count);
    params.bs_height_min_m = get_double(config, "bs_height_min_m", params.bs_height_min_m);
    params.bs_height_max_m = get_double(config, "bs_height_max_m", params.bs_height_max_m);
    params.seed = static_cast<std::uint64_t>(get_int(config, "seed", 0));
    params.band = apply_band_overrides(config, params.band);
    if (generated) *generated = true;
    return generate_manhattan(params);
}

}  // namespace riscov
