// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "riscov/scene.hpp"

namespace riscov {

// Synthetic regular city: square blocks separated by streets, building
// heights jittered around the nominal, base stations snapped to street
// intersections. Deterministic for a fixed parameter set.
struct ManhattanParams {
    double extent_m = 800.0;
    double block_m = 80.0;
    double street_m = 20.0;
    double building_height_m = 20.0;
    double height_jitter_frac = 0.25;  // heights drawn in +/- this fraction
    double wall_loss_db = 20.0;
    int bs_count = 1;
    double bs_height_min_m = 30.0;
    double bs_height_max_m = 30.0;
    std::uint64_t seed = 0;
    BandConfig band;
};

SceneMap generate_manhattan(const ManhattanParams& params);

// Contract shorthand with default band, wall loss and a single centred BS.
SceneMap generate_manhattan(double extent_m, double block_m, double street_m,
                            double building_height_m, std::uint64_t seed);

}  // namespace riscov
