// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "riscov/scene.hpp"

namespace riscov {

// Flat key=value run configuration. Values arrive from an optional config
// file plus CLI overrides (CLI wins); resolve_scene() folds band keys over
// the scene file's band block, so precedence is CLI > config file > scene.
struct RunConfig {
    std::map<std::string, std::string> values;
};

// True for every key the parser accepts; unknown keys are rejected.
bool is_known_config_key(const std::string& key);

// Parses `key = value` lines; '#' starts a comment. Throws ParseError on
// syntax errors or unknown keys.
RunConfig parse_config_file(const std::string& path);

// CLI-side override; validates the key.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

bool has_key(const RunConfig& config, const std::string& key);
std::string get_string(const RunConfig& config, const std::string& key,
                       const std::string& fallback);
double get_double(const RunConfig& config, const std::string& key, double fallback);
int get_int(const RunConfig& config, const std::string& key, int fallback);
std::vector<double> get_double_list(const RunConfig& config, const std::string& key,
                                    const std::vector<double>& fallback);

// Loads the scene file or generates the Manhattan grid, then applies any
// band-parameter overrides present in the config. `generated` reports which
// path was taken so callers can persist synthetic scenes.
SceneMap resolve_scene(const RunConfig& config, bool* generated = nullptr);

}  // namespace riscov
