// SPDX-License-Identifier: Apache-2.0
#include "riscov/scene_io.hpp"

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace riscov {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            throw ParseError("scene file: unknown key \"" + item.key() + "\" in " + where);
    }
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ParseError("scene file: missing key \"" + key + "\" in " + where);
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ParseError("scene file: key \"" + key + "\" in " + where + " must be a number");
    return v.get<double>();
}

double get_number_or(const json& obj, const std::string& key, double fallback,
                     const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ParseError("scene file: key \"" + key + "\" in " + where + " must be a number");
    return v.get<double>();
}

BandConfig parse_band(const json& obj) {
    static const std::set<std::string> allowed = {
        "carrier_hz",         "bandwidth_hz",           "bs_tx_power_dbm",
        "bs_array_gain_dbi",  "ue_array_gain_dbi",      "ue_noise_figure_db",
        "ue_placement",       "ris_widths_m",           "ris_reflection_loss_db",
        "snr_threshold_db",   "coverage_target_fraction", "nlos_excess_db",
        "ue_height_m",        "floor_height_m"};
    reject_unknown_keys(obj, allowed, "band");

    BandConfig band;  // missing keys keep the built-in C-band defaults
    band.carrier_hz = get_number_or(obj, "carrier_hz", band.carrier_hz, "band");
    band.bandwidth_hz = get_number_or(obj, "bandwidth_hz", band.bandwidth_hz, "band");
    band.bs_tx_power_dbm = get_number_or(obj, "bs_tx_power_dbm", band.bs_tx_power_dbm, "band");
    band.bs_array_gain_dbi =
        get_number_or(obj, "bs_array_gain_dbi", band.bs_array_gain_dbi, "band");
    band.ue_array_gain_dbi =
        get_number_or(obj, "ue_array_gain_dbi", band.ue_array_gain_dbi, "band");
    band.ue_noise_figure_db =
        get_number_or(obj, "ue_noise_figure_db", band.ue_noise_figure_db, "band");
    band.ris_reflection_loss_db =
        get_number_or(obj, "ris_reflection_loss_db", band.ris_reflection_loss_db, "band");
    band.snr_threshold_db =
        get_number_or(obj, "snr_threshold_db", band.snr_threshold_db, "band");
    band.coverage_target_fraction =
        get_number_or(obj, "coverage_target_fraction", band.coverage_target_fraction, "band");
    band.nlos_excess_db = get_number_or(obj, "nlos_excess_db", band.nlos_excess_db, "band");
    band.ue_height_m = get_number_or(obj, "ue_height_m", band.ue_height_m, "band");
    band.floor_height_m = get_number_or(obj, "floor_height_m", band.floor_height_m, "band");

    if (obj.contains("ue_placement")) {
        const std::string mode = obj.at("ue_placement").get<std::string>();
        if (mode == "outdoor_only") {
            band.ue_placement = UePlacement::OutdoorOnly;
        } else if (mode == "indoor_and_outdoor") {
            band.ue_placement = UePlacement::IndoorAndOutdoor;
        } else {
            throw ParseError("scene file: ue_placement must be \"outdoor_only\" or "
                             "\"indoor_and_outdoor\"");
        }
    }
    if (obj.contains("ris_widths_m")) {
        const json& widths = obj.at("ris_widths_m");
        if (!widths.is_array())
            throw ParseError("scene file: ris_widths_m must be an array");
        band.ris_widths_m.clear();
        for (const json& w : widths) band.ris_widths_m.push_back(w.get<double>());
    }
    return band;
}

}  // namespace

SceneMap load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("scene file: cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("scene file: " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("scene file: top level must be an object");
    static const std::set<std::string> top_allowed = {"schema_version", "extent", "buildings",
                                                      "bs", "band"};
    reject_unknown_keys(doc, top_allowed, "top level");
    if (doc.contains("schema_version") && doc.at("schema_version").get<int>() != 1)
        throw ParseError("scene file: unsupported schema_version");
    if (!doc.contains("extent") || !doc.at("extent").is_array() || doc.at("extent").size() != 2)
        throw ParseError("scene file: extent must be [width_m, depth_m]");
    const double width = doc.at("extent")[0].get<double>();
    const double depth = doc.at("extent")[1].get<double>();

    std::vector<BuildingPrism> buildings;
    if (doc.contains("buildings")) {
        if (!doc.at("buildings").is_array())
            throw ParseError("scene file: buildings must be an array");
        for (const json& bj : doc.at("buildings")) {
            static const std::set<std::string> allowed = {"footprint", "height",
                                                          "wall_loss_db"};
            reject_unknown_keys(bj, allowed, "buildings[]");
            BuildingPrism b;
            if (!bj.contains("footprint") || !bj.at("footprint").is_array())
                throw ParseError("scene file: building footprint must be an array of [x,y]");
            for (const json& v : bj.at("footprint")) {
                if (!v.is_array() || v.size() != 2)
                    throw ParseError("scene file: footprint vertices must be [x,y] pairs");
                b.footprint.push_back(Vec2{v[0].get<double>(), v[1].get<double>()});
            }
            b.height_m = get_number(bj, "height", "buildings[]");
            b.wall_loss_db = get_number_or(bj, "wall_loss_db", b.wall_loss_db, "buildings[]");
            buildings.push_back(std::move(b));
        }
    }

    std::vector<BsSite> bs_sites;
    if (!doc.contains("bs") || !doc.at("bs").is_array())
        throw ParseError("scene file: bs must be an array");
    for (const json& sj : doc.at("bs")) {
        static const std::set<std::string> allowed = {"x", "y", "z", "id"};
        reject_unknown_keys(sj, allowed, "bs[]");
        BsSite site;
        site.position = Point3{get_number(sj, "x", "bs[]"), get_number(sj, "y", "bs[]"),
                               get_number(sj, "z", "bs[]")};
        site.id = sj.contains("id") ? sj.at("id").get<std::string>()
                                    : "bs" + std::to_string(bs_sites.size());
        bs_sites.push_back(std::move(site));
    }

    BandConfig band;
    if (doc.contains("band")) band = parse_band(doc.at("band"));
    return make_scene(width, depth, std::move(buildings), std::move(bs_sites), band);
}

std::string scene_to_json(const SceneMap& scene) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["extent"] = {scene.width_m, scene.depth_m};
    doc["buildings"] = ordered_json::array();
    for (const BuildingPrism& b : scene.buildings) {
        ordered_json bj;
        ordered_json fp = ordered_json::array();
        for (const Vec2& v : b.footprint) fp.push_back({v.x, v.y});
        bj["footprint"] = std::move(fp);
        bj["height"] = b.height_m;
        bj["wall_loss_db"] = b.wall_loss_db;
        doc["buildings"].push_back(std::move(bj));
    }
    doc["bs"] = ordered_json::array();
    for (const BsSite& s : scene.bs_sites) {
        ordered_json sj;
        sj["x"] = s.position.x;
        sj["y"] = s.position.y;
        sj["z"] = s.position.z;
        sj["id"] = s.id;
        doc["bs"].push_back(std::move(sj));
    }
    const BandConfig& band = scene.band;
    ordered_json bj;
    bj["carrier_hz"] = band.carrier_hz;
    bj["bandwidth_hz"] = band.bandwidth_hz;
    bj["bs_tx_power_dbm"] = band.bs_tx_power_dbm;
    bj["bs_array_gain_dbi"] = band.bs_array_gain_dbi;
    bj["ue_array_gain_dbi"] = band.ue_array_gain_dbi;
    bj["ue_noise_figure_db"] = band.ue_noise_figure_db;
    bj["ue_placement"] = band.ue_placement == UePlacement::OutdoorOnly ? "outdoor_only"
                                                                       : "indoor_and_outdoor";
    bj["ris_widths_m"] = band.ris_widths_m;
    bj["ris_reflection_loss_db"] = band.ris_reflection_loss_db;
    bj["snr_threshold_db"] = band.snr_threshold_db;
    bj["coverage_target_fraction"] = band.coverage_target_fraction;
    bj["nlos_excess_db"] = band.nlos_excess_db;
    bj["ue_height_m"] = band.ue_height_m;
    bj["floor_height_m"] = band.floor_height_m;
    doc["band"] = std::move(bj);
    return doc.dump(2) + "\n";
}

void save_scene(const SceneMap& scene, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("scene file: cannot write " + path);
    out << scene_to_json(scene);
}

}  // namespace riscov
