// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "riscov/manhattan.hpp"
#include "riscov/scene.hpp"
#include "riscov/scene_io.hpp"

using namespace riscov;

namespace {

Polygon box(double x0, double y0, double x1, double y1) {
    return {Vec2{x0, y0}, Vec2{x1, y0}, Vec2{x1, y1}, Vec2{x0, y1}};
}

BuildingPrism prism(double x0, double y0, double x1, double y1, double h,
                    double wall_db = 20.0) {
    return BuildingPrism{box(x0, y0, x1, y1), h, wall_db};
}

SceneMap empty_scene(double w = 100.0, double d = 100.0) {
    return make_scene(w, d, {}, {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
}

template <typename Fn>
std::string validation_message(Fn&& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("riscov_scene_test_" + std::to_string(counter++) + ".json");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
};

}  // namespace

TEST_CASE("make_scene accepts a degenerate scene with no buildings") {
    const SceneMap scene = empty_scene();
    CHECK(scene.buildings.empty());
    CHECK(scene.bs_sites.size() == 1);
}

TEST_CASE("make_scene names the violated invariant") {
    auto bs = std::vector<BsSite>{BsSite{Point3{0, 0, 10}, "bs0"}};
    CHECK(validation_message([&] {
              make_scene(100, 100, {prism(10, 10, 30, 30, -5.0)}, bs, BandConfig{});
          }).find("height > 0") != std::string::npos);
    CHECK(validation_message([&] {
              make_scene(100, 100, {prism(10, 10, 30, 30, 10, -1.0)}, bs, BandConfig{});
          }).find("wall_loss_db >= 0") != std::string::npos);
    CHECK(validation_message([&] {
              make_scene(100, 100, {prism(10, 10, 300, 30, 10)}, bs, BandConfig{});
          }).find("extent") != std::string::npos);
    CHECK(validation_message([&] {
              make_scene(100, 100, {}, {}, BandConfig{});
          }).find("base station") != std::string::npos);
    CHECK(validation_message([&] {
              make_scene(100, 100, {}, {BsSite{Point3{0, 0, -1}, "bs0"}}, BandConfig{});
          }).find("z >= 0") != std::string::npos);
    // clockwise winding
    BuildingPrism cw = prism(10, 10, 30, 30, 10);
    std::reverse(cw.footprint.begin(), cw.footprint.end());
    CHECK(validation_message([&] {
              make_scene(100, 100, {cw}, bs, BandConfig{});
          }).find("counter-clockwise") != std::string::npos);
    // self-intersecting footprint
    BuildingPrism bow = prism(10, 10, 30, 30, 10);
    std::swap(bow.footprint[2], bow.footprint[3]);
    CHECK(validation_message([&] {
              make_scene(100, 100, {bow}, bs, BandConfig{});
          }).find("simple") != std::string::npos);
    // the offending object is named
    CHECK(validation_message([&] {
              make_scene(100, 100, {prism(10, 10, 30, 30, 5), prism(40, 40, 60, 60, -1)}, bs,
                         BandConfig{});
          }).find("buildings[1]") != std::string::npos);
}

TEST_CASE("los_trace: clear above rooftops, two walls through a box, graze clear") {
    const SceneMap scene = make_scene(100, 100, {prism(40, 45, 60, 55, 10)},
                                      {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
    const LosResult above = los_trace(scene, Point3{0, 50, 11}, Point3{100, 50, 11});
    CHECK(above.clear);
    CHECK(above.exterior_walls_crossed == 0);

    const LosResult through = los_trace(scene, Point3{0, 50, 5}, Point3{100, 50, 5});
    CHECK_FALSE(through.clear);
    CHECK(through.exterior_walls_crossed == 2);

    const LosResult graze = los_trace(scene, Point3{0, 55, 5}, Point3{100, 55, 5});
    CHECK(graze.clear);

    const LosResult corner_graze = los_trace(scene, Point3{30, 45, 5}, Point3{50, 65, 5});
    CHECK(corner_graze.clear);
}

TEST_CASE("trace_path accumulates per-building penetration") {
    const SceneMap scene =
        make_scene(200, 100, {prism(40, 45, 60, 55, 10, 20.0), prism(140, 45, 160, 55, 10, 7.0)},
                   {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
    const TraceDetail detail = trace_path(scene, Point3{0, 50, 5}, Point3{200, 50, 5});
    CHECK_FALSE(detail.clear);
    CHECK(detail.walls_crossed == 4);
    CHECK(detail.penetration_db == doctest::Approx(2 * 20.0 + 2 * 7.0));
}

TEST_CASE("trace_path: endpoint inside a building crosses one wall out") {
    const SceneMap scene = make_scene(100, 100, {prism(40, 45, 60, 55, 10)},
                                      {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
    const TraceDetail detail = trace_path(scene, Point3{50, 50, 1.5}, Point3{0, 50, 5});
    CHECK_FALSE(detail.clear);
    CHECK(detail.walls_crossed == 1);
    CHECK(detail.penetration_db == doctest::Approx(20.0));
}

TEST_CASE("property: los_trace is symmetric") {
    const SceneMap scene =
        make_scene(100, 100, {prism(20, 20, 45, 40, 12), prism(60, 55, 85, 80, 25)},
                   {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const Point3 a{rng.uniform(0, 100), rng.uniform(0, 100), rng.uniform(0, 30)};
        const Point3 b{rng.uniform(0, 100), rng.uniform(0, 100), rng.uniform(0, 30)};
        const LosResult fwd = los_trace(scene, a, b);
        const LosResult rev = los_trace(scene, b, a);
        CHECK(fwd.clear == rev.clear);
        CHECK(fwd.exterior_walls_crossed == rev.exterior_walls_crossed);
    }
}

TEST_CASE("ue_grid: empty 100x100 outdoor-only scene yields 100 samples") {
    SceneMap scene = empty_scene();
    scene.band.ue_placement = UePlacement::OutdoorOnly;
    const auto samples = ue_grid(scene);
    CHECK(samples.size() == 100);
    for (const UESample& s : samples) {
        CHECK_FALSE(s.indoor);
        CHECK(s.position.z == doctest::Approx(1.5));
    }
    CHECK(samples.front().position.x == doctest::Approx(5.0));
    CHECK(samples.back().position.y == doctest::Approx(95.0));
}

TEST_CASE("ue_grid: fully occupied outdoor-only scene is an error") {
    BandConfig band;
    band.ue_placement = UePlacement::OutdoorOnly;
    const SceneMap scene = make_scene(100, 100, {prism(0, 0, 100, 100, 10)},
                                      {BsSite{Point3{0, 0, 30}, "bs0"}}, band);
    CHECK_THROWS_AS(ue_grid(scene), ValidationError);
}

TEST_CASE("ue_grid: one 20x20 two-floor building adds 8 indoor samples") {
    const SceneMap scene = make_scene(100, 100, {prism(40, 40, 60, 60, 6.5)},
                                      {BsSite{Point3{0, 0, 30}, "bs0"}}, BandConfig{});
    const auto samples = ue_grid(scene);
    int outdoor = 0, indoor = 0;
    for (const UESample& s : samples) {
        if (s.indoor) {
            ++indoor;
            CHECK((s.position.z == doctest::Approx(1.5) || s.position.z == doctest::Approx(4.5)));
            CHECK(s.floor_index == (s.position.z < 3.0 ? 0 : 1));
        } else {
            ++outdoor;
        }
    }
    CHECK(outdoor == 96);
    CHECK(indoor == 8);

    // density property: count within one row/column of area/100 for empty scenes
    SceneMap wide = make_scene(250, 170, {}, {BsSite{Point3{0, 0, 10}, "bs0"}}, BandConfig{});
    CHECK(ue_grid(wide).size() == 25 * 17);
}

TEST_CASE("ris_candidates: empty scene has no candidates") {
    CHECK(ris_candidates(empty_scene(), 10.0).empty());
}

TEST_CASE("ris_candidates: only BS-facing walls, roof edges and corners survive") {
    const SceneMap scene = make_scene(100, 100, {prism(40, 40, 60, 60, 10)},
                                      {BsSite{Point3{0, 0, 5}, "bs0"}}, BandConfig{});
    const auto sites = ris_candidates(scene, 10.0);
    // west wall 6 + south wall 6 + west roof 2 + south roof 2 + near corner 3
    CHECK(sites.size() == 19);
    for (const CandidateSite& site : sites) {
        const bool on_visible_face = std::abs(site.position.x - 40.0) < 1e-9 ||
                                     std::abs(site.position.y - 40.0) < 1e-9;
        CHECK(on_visible_face);
        CHECK(site.feeding_bs == 0);
        // unit normal
        CHECK(norm(site.normal) == doctest::Approx(1.0));
        // re-check the advertised invariant independently
        const Point3 probe = site.position + site.normal * 1e-3;
        CHECK(los_trace(scene, probe, scene.bs_sites[0].position).clear);
        // wall normals horizontal, roof normals tilted upward
        if (site.mount == MountKind::Wall || site.mount == MountKind::Corner)
            CHECK(site.normal.z == doctest::Approx(0.0));
        if (site.mount == MountKind::Roof) CHECK(site.normal.z > 0.0);
    }
}

TEST_CASE("ris_candidates: wall heights cap below building height") {
    // 4 m building: only the 3 m default height and 0.8h=3.2 m fit; 3.2 is
    // within 0.25 m of nothing, so both appear.
    const SceneMap scene = make_scene(100, 100, {prism(40, 40, 60, 60, 4.0)},
                                      {BsSite{Point3{0, 0, 5}, "bs0"}}, BandConfig{});
    const auto sites = ris_candidates(scene, 10.0);
    for (const CandidateSite& site : sites) {
        if (site.mount == MountKind::Roof) continue;
        CHECK(site.position.z < 4.0);
    }
    CHECK(!sites.empty());
}

TEST_CASE("generate_manhattan: 800/80/20 yields 64 prisms and snapped BS") {
    const SceneMap scene = generate_manhattan(800, 80, 20, 20, 1);
    CHECK(scene.buildings.size() == 64);
    CHECK(scene.bs_sites.size() == 1);
    CHECK(scene.bs_sites[0].position.x == doctest::Approx(400.0));
    CHECK(scene.bs_sites[0].position.z == doctest::Approx(30.0));
    for (const BuildingPrism& b : scene.buildings) {
        CHECK(b.height_m >= 20.0 * 0.75 - 1e-9);
        CHECK(b.height_m <= 20.0 * 1.25 + 1e-9);
    }
}

TEST_CASE("generate_manhattan: extent below one period is an error") {
    CHECK_THROWS_AS(generate_manhattan(50, 80, 20, 20, 1), ValidationError);
}

TEST_CASE("generate_manhattan: identical seeds give byte-identical scenes") {
    const std::string a = scene_to_json(generate_manhattan(400, 60, 40, 18, 9));
    const std::string b = scene_to_json(generate_manhattan(400, 60, 40, 18, 9));
    CHECK(a == b);
}

TEST_CASE("load_scene round-trips a saved scene") {
    ManhattanParams params;
    params.extent_m = 300;
    params.block_m = 60;
    params.street_m = 40;
    params.building_height_m = 12;
    params.bs_count = 2;
    params.bs_height_min_m = 20;
    params.bs_height_max_m = 40;
    const SceneMap scene = generate_manhattan(params);
    const TempFile file(scene_to_json(scene));
    const SceneMap loaded = load_scene(file.path.string());
    CHECK(scene_to_json(loaded) == scene_to_json(scene));
    CHECK(loaded.bs_sites.size() == 2);
    CHECK(loaded.bs_sites[1].position.z == doctest::Approx(40.0));
}

TEST_CASE("load_scene rejects unknown keys at every level") {
    const TempFile top(R"({"extent":[100,100],"bs":[{"x":0,"y":0,"z":10}],"bogus":1})");
    CHECK_THROWS_WITH_AS(load_scene(top.path.string()),
                         doctest::Contains("unknown key \"bogus\""), ParseError);
    const TempFile bldg(
        R"({"extent":[100,100],"buildings":[{"footprint":[[0,0],[10,0],[10,10],[0,10]],"height":5,"colour":"red"}],"bs":[{"x":0,"y":0,"z":10}]})");
    CHECK_THROWS_WITH_AS(load_scene(bldg.path.string()),
                         doctest::Contains("unknown key \"colour\""), ParseError);
    const TempFile band(
        R"({"extent":[100,100],"bs":[{"x":0,"y":0,"z":10}],"band":{"carrier_ghz":3.5}})");
    CHECK_THROWS_WITH_AS(load_scene(band.path.string()),
                         doctest::Contains("unknown key \"carrier_ghz\""), ParseError);
}

TEST_CASE("load_scene surfaces validation failures with object names") {
    const TempFile file(
        R"({"extent":[100,100],"buildings":[{"footprint":[[0,0],[10,0],[10,10],[0,10]],"height":-5}],"bs":[{"x":0,"y":0,"z":10}]})");
    CHECK_THROWS_WITH_AS(load_scene(file.path.string()), doctest::Contains("height > 0"),
                         ValidationError);
}

TEST_CASE("load_scene: malformed JSON and missing files are parse errors") {
    const TempFile file("{not json");
    CHECK_THROWS_AS(load_scene(file.path.string()), ParseError);
    CHECK_THROWS_AS(load_scene("/nonexistent/scene.json"), ParseError);
}

TEST_CASE("load_scene applies band fields and placement modes") {
    const TempFile file(
        R"({"extent":[100,100],"bs":[{"x":0,"y":0,"z":10,"id":"macro"}],
            "band":{"carrier_hz":28e9,"bandwidth_hz":4e8,"ue_placement":"outdoor_only",
                    "ris_widths_m":[0.33,0.48,0.67],"ue_noise_figure_db":10}})");
    const SceneMap scene = load_scene(file.path.string());
    CHECK(scene.band.carrier_hz == doctest::Approx(28e9));
    CHECK(scene.band.ue_placement == UePlacement::OutdoorOnly);
    CHECK(scene.band.ris_widths_m.size() == 3);
    CHECK(scene.bs_sites[0].id == "macro");
    // untouched fields keep defaults
    CHECK(scene.band.bs_tx_power_dbm == doctest::Approx(50.0));
}
