// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "riscov/geometry.hpp"

namespace riscov {

class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class UePlacement { OutdoorOnly, IndoorAndOutdoor };

// Per-band link parameters. Defaults are the bundled C-band preset; the
// mmWave preset ships as configs/mmwave.cfg.
struct BandConfig {
    double carrier_hz = 3.5e9;
    double bandwidth_hz = 200e6;
    double bs_tx_power_dbm = 50.0;
    double bs_array_gain_dbi = 23.0;
    double ue_array_gain_dbi = 3.0;
    double ue_noise_figure_db = 7.0;
    UePlacement ue_placement = UePlacement::IndoorAndOutdoor;
    std::vector<double> ris_widths_m = {2.7, 3.8, 5.3};
    double ris_reflection_loss_db = 0.0;
    double snr_threshold_db = 10.0;
    double coverage_target_fraction = 0.95;
    double nlos_excess_db = 15.0;   // extra loss applied to any obstructed direct path
    double ue_height_m = 1.5;       // handset height above ground / floor slab
    double floor_height_m = 3.0;
};

struct BuildingPrism {
    Polygon footprint;       // simple, counter-clockwise
    double height_m = 0.0;
    double wall_loss_db = 20.0;  // per exterior-surface crossing
};

struct BsSite {
    Point3 position;
    std::string id;
};

// Immutable after make_scene(); all queries below are pure functions of it.
struct SceneMap {
    double width_m = 0.0;
    double depth_m = 0.0;
    std::vector<BuildingPrism> buildings;
    std::vector<BsSite> bs_sites;
    BandConfig band;
    std::vector<Aabb2> building_bounds;  // derived, filled by make_scene
};

// Validates every invariant and derives the per-building bounds.
// Throws ValidationError naming the violated invariant and offending object.
SceneMap make_scene(double width_m, double depth_m, std::vector<BuildingPrism> buildings,
                    std::vector<BsSite> bs_sites, BandConfig band);

struct UESample {
    Point3 position;
    bool indoor = false;
    int floor_index = 0;
};

enum class MountKind { Wall, Roof, Corner };

struct CandidateSite {
    Point3 position;
    Point3 normal;        // unit, faces away from the host building
    MountKind mount = MountKind::Wall;
    int feeding_bs = 0;   // index into scene.bs_sites; nearest BS with clear LOS
    double bs_distance_m = 0.0;
};

struct LosResult {
    bool clear = true;
    int exterior_walls_crossed = 0;
};

// Detailed variant used by the link budget: adds the summed per-building
// penetration loss for the crossings.
struct TraceDetail {
    bool clear = true;
    int walls_crossed = 0;
    double penetration_db = 0.0;
};

// Open-segment visibility: grazing a face or edge exactly does not block.
// Symmetric in (a, b).
LosResult los_trace(const SceneMap& scene, Point3 a, Point3 b);
TraceDetail trace_path(const SceneMap& scene, Point3 a, Point3 b);

// Measurement grid at 1 sample / 100 m^2 per ground or floor surface
// (10 m x 10 m cells, sample at the cell center). Outdoor samples sit at
// band.ue_height_m; indoor samples (when the band places UEs indoors) sit at
// ue_height_m above each floor slab. Throws when the grid comes out empty.
std::vector<UESample> ue_grid(const SceneMap& scene);

// Candidate RIS positions along exterior walls (at the given heights plus
// 80% of the building height), roof edges, and footprint corners, spaced
// every spacing_m. Only sites with clear LOS to at least one BS survive;
// feeding_bs is the nearest such BS.
std::vector<CandidateSite> ris_candidates(const SceneMap& scene, double spacing_m,
                                          const std::vector<double>& wall_heights_m = {3.0, 6.0});

}  // namespace riscov
