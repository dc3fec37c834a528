// SPDX-License-Identifier: Apache-2.0
#include "riscov/artifacts.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace riscov {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("artifact: cannot write " + path);
    return out;
}

const char* mount_name(MountKind mount) {
    switch (mount) {
        case MountKind::Wall: return "wall";
        case MountKind::Roof: return "roof";
        case MountKind::Corner: return "corner";
    }
    return "unknown";
}

ordered_json placed_site_json(const SceneMap& scene, const RISUnit& ris, int candidate_index) {
    ordered_json sj;
    sj["candidate_index"] = candidate_index;
    sj["x"] = ris.site.position.x;
    sj["y"] = ris.site.position.y;
    sj["z"] = ris.site.position.z;
    sj["mount"] = mount_name(ris.site.mount);
    sj["feeding_bs"] = scene.bs_sites[static_cast<std::size_t>(ris.site.feeding_bs)].id;
    return sj;
}

}  // namespace

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string grid_hash(const std::vector<UESample>& ues) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const UESample& ue : ues) {
        mix(fmt_double(ue.position.x));
        mix(",");
        mix(fmt_double(ue.position.y));
        mix(",");
        mix(fmt_double(ue.position.z));
        mix("\n");
    }
    std::ostringstream os;
    os << "0x" << std::hex << h;
    return os.str();
}

void write_grid_csv(const std::string& path, const std::vector<UESample>& ues,
                    const std::vector<double>& snr_db, double low_threshold_db,
                    double high_threshold_db) {
    if (ues.size() != snr_db.size())
        throw ValidationError("write_grid_csv: UE and SNR counts differ");
    std::ofstream out = open_out(path);
    out << "x,y,z,snr_db,covered@" << fmt_double(low_threshold_db) << "dB,covered@"
        << fmt_double(high_threshold_db) << "dB\n";
    for (std::size_t i = 0; i < ues.size(); ++i) {
        const Point3& p = ues[i].position;
        out << fmt_double(p.x) << ',' << fmt_double(p.y) << ',' << fmt_double(p.z) << ','
            << fmt_double(snr_db[i]) << ',' << (snr_db[i] >= low_threshold_db ? 1 : 0) << ','
            << (snr_db[i] >= high_threshold_db ? 1 : 0) << '\n';
    }
}

void write_snr_cdf_csv(const std::string& path, const std::vector<double>& snr_db) {
    if (snr_db.empty())
        throw ValidationError("write_snr_cdf_csv: empty SNR map");
    std::vector<double> sorted = snr_db;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::ofstream out = open_out(path);
    out << "snr_db,cdf,ccdf\n";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto first =
            std::lower_bound(sorted.begin(), sorted.end(), sorted[i]) - sorted.begin();
        const double cdf = static_cast<double>(i + 1) / n;
        const double ccdf = static_cast<double>(sorted.size() - first) / n;
        out << fmt_double(sorted[i]) << ',' << fmt_double(cdf) << ',' << fmt_double(ccdf)
            << '\n';
    }
}

void write_baseline_metrics_json(const std::string& path, const SceneMap& scene,
                                 const std::vector<UESample>& ues,
                                 const std::vector<double>& snr_db, double low_threshold_db,
                                 double high_threshold_db) {
    const SNRDistribution dist = make_distribution(snr_db);
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["artifact"] = "baseline_metrics";
    doc["grid_hash"] = grid_hash(ues);
    doc["n_ue"] = ues.size();
    doc["noise_floor_dbm"] =
        noise_floor_dbm(scene.band.bandwidth_hz, scene.band.ue_noise_figure_db);
    doc["low_threshold_db"] = low_threshold_db;
    doc["high_threshold_db"] = high_threshold_db;
    doc["coverage_low"] = coverage_fraction(snr_db, low_threshold_db);
    doc["coverage_high"] = coverage_fraction(snr_db, high_threshold_db);
    doc["snr_p5_db"] = percentile_snr(dist, 5.0);
    doc["snr_p50_db"] = percentile_snr(dist, 50.0);
    doc["snr_p95_db"] = percentile_snr(dist, 95.0);
    double mean_rate = 0.0;
    for (double v : snr_db) mean_rate += shannon_rate(v);
    doc["mean_rate_bps_hz"] = mean_rate / static_cast<double>(snr_db.size());
    open_out(path) << doc.dump(2) << '\n';
}

void write_placement_log_jsonl(const std::string& path, const SceneMap& scene,
                               const std::vector<UESample>& ues,
                               const DeploymentResult& result, double width_m,
                               std::uint64_t seed) {
    std::ofstream out = open_out(path);
    ordered_json meta;
    meta["schema_version"] = 1;
    meta["artifact"] = "placement_log";
    meta["grid_hash"] = grid_hash(ues);
    meta["width_m"] = width_m;
    meta["threshold_db"] = scene.band.snr_threshold_db;
    meta["target_fraction"] = scene.band.coverage_target_fraction;
    meta["seed"] = seed;
    meta["baseline_coverage"] = result.baseline_coverage;
    out << meta.dump() << '\n';
    const PlacementState& state = result.state;
    for (const TraceEntry& entry : state.trace) {
        const RISUnit& ris = state.placed[static_cast<std::size_t>(entry.iteration - 1)];
        ordered_json rec;
        rec["iteration"] = entry.iteration;
        rec["candidate_index"] = entry.candidate_index;
        rec["x"] = ris.site.position.x;
        rec["y"] = ris.site.position.y;
        rec["z"] = ris.site.position.z;
        rec["mount"] = mount_name(ris.site.mount);
        rec["newly_covered"] = entry.newly_covered;
        rec["margin_gain_db"] = entry.margin_gain;
        rec["coverage"] = entry.coverage;
        out << rec.dump() << '\n';
    }
}

void write_placement_summary_json(const std::string& path, const SceneMap& scene,
                                  const std::vector<UESample>& ues,
                                  const DeploymentResult& result, double width_m,
                                  double near_field_fraction) {
    const PlacementState& state = result.state;
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["artifact"] = "placement_summary";
    doc["grid_hash"] = grid_hash(ues);
    doc["width_m"] = width_m;
    doc["threshold_db"] = scene.band.snr_threshold_db;
    doc["target_fraction"] = scene.band.coverage_target_fraction;
    doc["stop_reason"] = to_string(result.stop_reason);
    doc["ris_count"] = result.ris_count;
    doc["per_bs_average"] = result.per_bs_average;
    doc["baseline_coverage"] = result.baseline_coverage;
    doc["final_coverage"] = result.final_coverage;
    ordered_json checkpoints;
    checkpoints["after_1"] = nullptr;
    checkpoints["after_5"] = nullptr;
    checkpoints["after_10"] = nullptr;
    for (const TraceEntry& entry : state.trace) {
        if (entry.iteration == 1) checkpoints["after_1"] = entry.coverage;
        if (entry.iteration == 5) checkpoints["after_5"] = entry.coverage;
        if (entry.iteration == 10) checkpoints["after_10"] = entry.coverage;
    }
    doc["coverage_checkpoints"] = std::move(checkpoints);
    doc["near_field_fraction"] = near_field_fraction;
    ordered_json placed = ordered_json::array();
    for (std::size_t i = 0; i < state.placed.size(); ++i)
        placed.push_back(placed_site_json(scene, state.placed[i], state.placed_indices[i]));
    doc["placed"] = std::move(placed);
    open_out(path) << doc.dump(2) << '\n';
}

void write_rate_report_json(const std::string& path, const std::vector<UESample>& ues,
                            const RateReport& report) {
    auto section = [](double before, double after, double factor, bool infinite) {
        ordered_json sj;
        sj["before_bps_hz"] = before;
        sj["after_bps_hz"] = after;
        if (infinite) {
            sj["factor"] = nullptr;
            sj["improvement_pct"] = nullptr;
            sj["infinite"] = true;
        } else {
            sj["factor"] = factor;
            sj["improvement_pct"] = improvement_pct(factor);
            sj["infinite"] = false;
        }
        return sj;
    };
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["artifact"] = "rate_report";
    doc["grid_hash"] = grid_hash(ues);
    doc["cell_edge"] = section(report.cell_edge_before, report.cell_edge_after,
                               report.cell_edge_factor, report.cell_edge_infinite);
    doc["median"] = section(report.median_before, report.median_after, report.median_factor,
                            report.median_infinite);
    doc["mean"] =
        section(report.mean_before, report.mean_after, report.mean_factor, report.mean_infinite);
    open_out(path) << doc.dump(2) << '\n';
}

void write_fresnel_histogram_csv(const std::string& path, const FresnelHistogram& hist) {
    std::ofstream out = open_out(path);
    out << "bin_lo,bin_hi,count\n";
    // edges as b/10 (not b*0.1) so they print as clean tenths
    for (int b = 0; b < FresnelHistogram::kBins; ++b) {
        out << fmt_double(b / 10.0) << ',' << fmt_double((b + 1) / 10.0) << ','
            << hist.counts[static_cast<std::size_t>(b)] << '\n';
    }
    out << fmt_double(FresnelHistogram::kBins / 10.0) << ",inf,"
        << hist.counts[FresnelHistogram::kBins] << '\n';
}

void write_sweep_summary_json(const std::string& path, const SceneMap& scene,
                              const std::vector<UESample>& ues,
                              const std::vector<SweepRow>& rows) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["artifact"] = "sweep_summary";
    doc["grid_hash"] = grid_hash(ues);
    doc["threshold_db"] = scene.band.snr_threshold_db;
    doc["target_fraction"] = scene.band.coverage_target_fraction;
    ordered_json widths = ordered_json::array();
    for (const SweepRow& row : rows) {
        ordered_json rj;
        rj["width_m"] = row.width_m;
        rj["ris_count"] = row.ris_count;
        rj["per_bs_average"] = row.per_bs_average;
        rj["stop_reason"] = row.stop_reason;
        rj["baseline_coverage"] = row.baseline_coverage;
        rj["final_coverage"] = row.final_coverage;
        rj["cell_edge_rate_before_bps_hz"] = row.cell_edge_rate_before;
        rj["cell_edge_rate_after_bps_hz"] = row.cell_edge_rate_after;
        rj["cell_edge_improvement_pct"] = row.cell_edge_improvement_pct;
        rj["near_field_fraction"] = row.near_field_fraction;
        widths.push_back(std::move(rj));
    }
    doc["widths"] = std::move(widths);
    open_out(path) << doc.dump(2) << '\n';
}

namespace {

void flatten_json(const ordered_json& node, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (node.is_object()) {
        for (const auto& item : node.items()) {
            flatten_json(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(),
                         out);
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten_json(node[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, node.dump());
    }
}

struct LoadedArtifact {
    std::string path;
    std::string kind;
    std::string grid;
    ordered_json doc;          // object artifacts
    std::vector<ordered_json> lines;  // jsonl artifacts
};

LoadedArtifact load_artifact(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("report: cannot open " + path);
    LoadedArtifact art;
    art.path = path;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception&) {
        // maybe JSON lines
        std::istringstream ss(text);
        std::string line;
        try {
            while (std::getline(ss, line)) {
                if (line.empty()) continue;
                art.lines.push_back(ordered_json::parse(line));
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("report: " + path + " is not a JSON artifact: " + e.what());
        }
        if (art.lines.empty())
            throw ParseError("report: " + path + " is empty");
        doc = art.lines.front();
    }
    if (!doc.is_object() || !doc.contains("artifact"))
        throw ParseError("report: " + path + " lacks an \"artifact\" field");
    art.kind = doc.at("artifact").get<std::string>();
    if (doc.contains("grid_hash")) art.grid = doc.at("grid_hash").get<std::string>();
    art.doc = std::move(doc);
    return art;
}

}  // namespace

std::string render_report(const std::vector<std::string>& artifact_paths) {
    if (artifact_paths.empty())
        throw ParseError("report: no artifacts given");
    std::vector<LoadedArtifact> artifacts;
    for (const std::string& path : artifact_paths) artifacts.push_back(load_artifact(path));

    std::string grid;
    for (const LoadedArtifact& art : artifacts) {
        if (art.grid.empty()) continue;
        if (grid.empty()) {
            grid = art.grid;
        } else if (grid != art.grid) {
            throw ParseError("report: artifacts cover different UE grids (" + grid + " vs " +
                             art.grid + ")");
        }
    }

    std::ostringstream out;
    if (!grid.empty()) out << "grid " << grid << "\n";
    for (const LoadedArtifact& art : artifacts) {
        out << "\n[" << art.kind << "] " << art.path << "\n";
        std::vector<std::pair<std::string, std::string>> fields;
        flatten_json(art.doc, "", fields);
        for (const auto& [key, value] : fields) {
            if (key == "artifact" || key == "grid_hash") continue;
            out << "  " << key << " = " << value << "\n";
        }
        if (!art.lines.empty()) {
            out << "  iterations = " << art.lines.size() - 1 << "\n";
            if (art.lines.size() > 1) {
                const ordered_json& last = art.lines.back();
                if (last.contains("coverage"))
                    out << "  final_coverage = " << last.at("coverage").dump() << "\n";
            }
        }
    }

    const LoadedArtifact* baseline = nullptr;
    const LoadedArtifact* placement = nullptr;
    for (const LoadedArtifact& art : artifacts) {
        if (art.kind == "baseline_metrics") baseline = &art;
        if (art.kind == "placement_summary") placement = &art;
    }
    if (baseline && placement) {
        out << "\nbaseline -> placement: coverage "
            << baseline->doc.at("coverage_high").dump() << " -> "
            << placement->doc.at("final_coverage").dump() << " at "
            << placement->doc.at("threshold_db").dump() << " dB with "
            << placement->doc.at("ris_count").dump() << " RIS\n";
    }
    return out.str();
}

}  // namespace riscov
