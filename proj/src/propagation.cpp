// SPDX-License-Identifier: Apache-2.0
#include "riscov/propagation.hpp"

#include <algorithm>
#include <cmath>

namespace riscov {

namespace {

constexpr double kMinPathDistance = 1.0;  // far-field formulas diverge at d -> 0

// Mount points sit exactly on wall planes; LOS probes start a hair off the
// surface so a site never occludes itself. Must match ris_candidates().
constexpr double kProbeOffset = 1e-3;

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0))
        throw ValidationError("noise_floor_dbm: bandwidth_hz > 0 violated");
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double fspl_db(double distance_m, double carrier_hz) {
    if (!(distance_m > 0.0))
        throw ValidationError("fspl_db: distance_m > 0 violated");
    if (!(carrier_hz > 0.0))
        throw ValidationError("fspl_db: carrier_hz > 0 violated");
    return 20.0 * std::log10(4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight);
}

LinkBudget direct_link_dbm(const SceneMap& scene, const BsSite& bs, Point3 ue) {
    const double d = std::max(distance(bs.position, ue), kMinPathDistance);
    const TraceDetail trace = trace_path(scene, bs.position, ue);
    const BandConfig& band = scene.band;
    double rx = band.bs_tx_power_dbm + band.bs_array_gain_dbi + band.ue_array_gain_dbi -
                fspl_db(d, band.carrier_hz);
    LinkBudget out;
    if (trace.clear) {
        out.path_kind = PathKind::DirectLos;
    } else {
        out.path_kind = PathKind::DirectNlos;
        out.walls_crossed = trace.walls_crossed;
        rx -= band.nlos_excess_db + trace.penetration_db;
    }
    out.rx_power_dbm = rx;
    return out;
}

double ris_path_gain_db(double d1_m, double d2_m, double area_m2, double incidence_cos,
                        double carrier_hz, double reflection_loss_db) {
    (void)carrier_hz;  // flat-plate aperture gain carries no frequency term
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw ValidationError("ris_path_gain_db: d1, d2 > 0 violated");
    if (!(area_m2 > 0.0))
        throw ValidationError("ris_path_gain_db: area_m2 > 0 violated");
    if (!(incidence_cos > 0.0))
        throw ValidationError("ris_path_gain_db: incidence_cos > 0 violated");
    const double d1 = std::max(d1_m, kMinPathDistance);
    const double d2 = std::max(d2_m, kMinPathDistance);
    return 20.0 * std::log10(area_m2 * incidence_cos / (4.0 * kPi * d1 * d2)) -
           reflection_loss_db;
}

std::optional<LinkBudget> ris_link_dbm(const SceneMap& scene, const RISUnit& ris, Point3 ue) {
    const CandidateSite& site = ris.site;
    if (dot(ue - site.position, site.normal) <= 0.0) return std::nullopt;
    const Point3 bs = scene.bs_sites[static_cast<std::size_t>(site.feeding_bs)].position;
    const double incidence_cos = dot(normalized(bs - site.position), site.normal);
    if (incidence_cos <= 0.0) return std::nullopt;
    const Point3 probe = site.position + site.normal * kProbeOffset;
    if (!los_trace(scene, probe, bs).clear) return std::nullopt;
    if (!los_trace(scene, probe, ue).clear) return std::nullopt;
    const double d1 = std::max(distance(bs, site.position), kMinPathDistance);
    const double d2 = std::max(distance(site.position, ue), kMinPathDistance);
    const BandConfig& band = scene.band;
    LinkBudget out;
    out.path_kind = PathKind::RisCascaded;
    out.rx_power_dbm = band.bs_tx_power_dbm + band.bs_array_gain_dbi + band.ue_array_gain_dbi +
                       ris_path_gain_db(d1, d2, ris.area_m2, incidence_cos, band.carrier_hz,
                                        ris.reflection_loss_db);
    return out;
}

SNRRecord ue_snr(const SceneMap& scene, Point3 ue, const std::vector<RISUnit>& deployment) {
    SNRRecord rec;
    LinkBudget best_direct;
    bool have_direct = false;
    for (const BsSite& bs : scene.bs_sites) {
        const LinkBudget lb = direct_link_dbm(scene, bs, ue);
        if (!have_direct || lb.rx_power_dbm > best_direct.rx_power_dbm) {
            best_direct = lb;
            have_direct = true;
        }
    }
    if (have_direct) rec.paths.push_back(best_direct);
    for (std::size_t i = 0; i < deployment.size(); ++i) {
        if (auto lb = ris_link_dbm(scene, deployment[i], ue)) {
            lb->via_ris = static_cast<int>(i);
            rec.paths.push_back(*lb);
        }
    }
    double total_mw = 0.0;
    for (const LinkBudget& lb : rec.paths) total_mw += db_to_linear(lb.rx_power_dbm);
    const double noise =
        noise_floor_dbm(scene.band.bandwidth_hz, scene.band.ue_noise_figure_db);
    rec.snr_db = snr_db_from_power(total_mw, noise);
    return rec;
}

double fresnel_ratio(double d1_m, double d2_m, double carrier_hz, double width_m) {
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw ValidationError("fresnel_ratio: d1, d2 > 0 violated");
    if (!(carrier_hz > 0.0))
        throw ValidationError("fresnel_ratio: carrier_hz > 0 violated");
    if (!(width_m > 0.0))
        throw ValidationError("fresnel_ratio: width_m > 0 violated");
    const double lambda = kSpeedOfLight / carrier_hz;
    return 2.0 * std::sqrt(lambda * d1_m * d2_m / (d1_m + d2_m)) / width_m;
}

double snr_db_from_power(double power_mw, double noise_dbm) {
    if (!(power_mw > 0.0)) return kUnreachableDb;
    return linear_to_db(power_mw) - noise_dbm;
}

}  // namespace riscov
