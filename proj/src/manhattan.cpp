// SPDX-License-Identifier: Apache-2.0
#include "riscov/manhattan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace riscov {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_symmetric(std::uint64_t& state) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * u - 1.0;
}

// Fixed BS layout as fractions of the extent; snapped to the street lattice.
constexpr double kBsLayout[][2] = {
    {0.50, 0.50}, {0.25, 0.25}, {0.75, 0.75}, {0.25, 0.75}, {0.75, 0.25},
    {0.50, 0.25}, {0.25, 0.50}, {0.75, 0.50}, {0.50, 0.75},
};
constexpr int kBsLayoutSize = static_cast<int>(sizeof(kBsLayout) / sizeof(kBsLayout[0]));

}  // namespace

SceneMap generate_manhattan(const ManhattanParams& p) {
    if (!(p.block_m > 0.0) || !(p.street_m > 0.0))
        throw ValidationError("generate_manhattan: block_m, street_m > 0 violated");
    if (!(p.building_height_m > 0.0))
        throw ValidationError("generate_manhattan: building_height_m > 0 violated");
    if (p.bs_count < 1 || p.bs_count > kBsLayoutSize)
        throw ValidationError("generate_manhattan: bs_count outside the supported layout");
    if (!(p.bs_height_max_m >= p.bs_height_min_m))
        throw ValidationError("generate_manhattan: bs_height_max_m >= bs_height_min_m violated");
    const double period = p.block_m + p.street_m;
    const int count = static_cast<int>(std::floor(p.extent_m / period));
    if (count < 1)
        throw ValidationError(
            "generate_manhattan: extent must fit at least one block+street period");

    std::uint64_t rng = p.seed;
    std::vector<BuildingPrism> buildings;
    buildings.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        for (int i = 0; i < count; ++i) {
            const double x0 = 0.5 * p.street_m + i * period;
            const double y0 = 0.5 * p.street_m + j * period;
            BuildingPrism b;
            b.footprint = {Vec2{x0, y0}, Vec2{x0 + p.block_m, y0},
                           Vec2{x0 + p.block_m, y0 + p.block_m}, Vec2{x0, y0 + p.block_m}};
            const double jitter = 1.0 + p.height_jitter_frac * unit_symmetric(rng);
            b.height_m = std::round(p.building_height_m * jitter * 10.0) / 10.0;
            b.wall_loss_db = p.wall_loss_db;
            buildings.push_back(std::move(b));
        }
    }

    std::vector<BsSite> bs_sites;
    for (int s = 0; s < p.bs_count; ++s) {
        auto snap = [&](double frac) {
            const double raw = frac * p.extent_m;
            const double snapped = std::round(raw / period) * period;
            return std::clamp(snapped, 0.0, p.extent_m);
        };
        const double z = p.bs_count == 1
                             ? p.bs_height_min_m
                             : p.bs_height_min_m + (p.bs_height_max_m - p.bs_height_min_m) *
                                                       s / (p.bs_count - 1);
        bs_sites.push_back(
            BsSite{Point3{snap(kBsLayout[s][0]), snap(kBsLayout[s][1]), z},
                   "bs" + std::to_string(s)});
    }

    return make_scene(p.extent_m, p.extent_m, std::move(buildings), std::move(bs_sites),
                      p.band);
}

SceneMap generate_manhattan(double extent_m, double block_m, double street_m,
                            double building_height_m, std::uint64_t seed) {
    ManhattanParams params;
    params.extent_m = extent_m;
    params.block_m = block_m;
    params.street_m = street_m;
    params.building_height_m = building_height_m;
    params.seed = seed;
    return generate_manhattan(params);
}

}  // namespace riscov
