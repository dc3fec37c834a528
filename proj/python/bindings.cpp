// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riscov/deployment.hpp"
#include "riscov/manhattan.hpp"
#include "riscov/metrics.hpp"
#include "riscov/propagation.hpp"
#include "riscov/scene_io.hpp"

namespace py = pybind11;
using namespace riscov;

namespace {

py::dict run_placement(const SceneMap& scene, double spacing_m, double width_m, int max_ris,
                       int workers) {
    const std::vector<UESample> ues = ue_grid(scene);
    const std::vector<CandidateSite> candidates = ris_candidates(scene, spacing_m);
    GreedyOptions options;
    options.width_m = width_m;
    options.max_ris = max_ris;
    options.workers = workers;
    const DeploymentResult result = run_greedy(scene, ues, candidates, options);
    py::dict out;
    out["n_ue"] = ues.size();
    out["n_candidates"] = candidates.size();
    out["baseline_coverage"] = result.baseline_coverage;
    out["final_coverage"] = result.final_coverage;
    out["ris_count"] = result.ris_count;
    out["per_bs_average"] = result.per_bs_average;
    out["stop_reason"] = to_string(result.stop_reason);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "RIS coverage simulator core";

    py::class_<SceneMap>(m, "SceneMap")
        .def_property_readonly("width_m", [](const SceneMap& s) { return s.width_m; })
        .def_property_readonly("depth_m", [](const SceneMap& s) { return s.depth_m; })
        .def_property_readonly("n_buildings",
                               [](const SceneMap& s) { return s.buildings.size(); })
        .def_property_readonly("n_bs", [](const SceneMap& s) { return s.bs_sites.size(); });

    m.def("load_scene", &load_scene, py::arg("path"));
    m.def("generate_manhattan",
          py::overload_cast<double, double, double, double, std::uint64_t>(&generate_manhattan),
          py::arg("extent_m"), py::arg("block_m"), py::arg("street_m"),
          py::arg("building_height_m"), py::arg("seed") = 0);
    m.def("ue_grid_size",
          [](const SceneMap& scene) { return ue_grid(scene).size(); }, py::arg("scene"));
    m.def("candidate_count",
          [](const SceneMap& scene, double spacing_m) {
              return ris_candidates(scene, spacing_m).size();
          },
          py::arg("scene"), py::arg("spacing_m"));

    m.def("db_to_linear", &db_to_linear, py::arg("db"));
    m.def("linear_to_db", &linear_to_db, py::arg("linear"));
    m.def("noise_floor_dbm", &noise_floor_dbm, py::arg("bandwidth_hz"),
          py::arg("noise_figure_db"));
    m.def("fspl_db", &fspl_db, py::arg("distance_m"), py::arg("carrier_hz"));
    m.def("ris_path_gain_db", &ris_path_gain_db, py::arg("d1_m"), py::arg("d2_m"),
          py::arg("area_m2"), py::arg("incidence_cos"), py::arg("carrier_hz"),
          py::arg("reflection_loss_db") = 0.0);
    m.def("fresnel_ratio", &fresnel_ratio, py::arg("d1_m"), py::arg("d2_m"),
          py::arg("carrier_hz"), py::arg("width_m"));
    m.def("shannon_rate", &shannon_rate, py::arg("snr_db"));
    m.def("coverage_fraction", &coverage_fraction, py::arg("snr_db"), py::arg("threshold_db"));
    m.def("percentile_snr",
          [](std::vector<double> samples, double p) {
              return percentile_snr(make_distribution(std::move(samples)), p);
          },
          py::arg("snr_db"), py::arg("p"));

    m.def("run_placement", &run_placement, py::arg("scene"), py::arg("spacing_m"),
          py::arg("width_m"), py::arg("max_ris") = (1 << 30), py::arg("workers") = 1);
}
