// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "riscov/scene.hpp"

namespace riscov {

// Reads a scene JSON file (see README for the schema). Throws ParseError on
// malformed input or unknown keys, ValidationError on invariant violations.
SceneMap load_scene(const std::string& path);

// Serializes a scene to the same schema, deterministically.
std::string scene_to_json(const SceneMap& scene);
void save_scene(const SceneMap& scene, const std::string& path);

}  // namespace riscov
