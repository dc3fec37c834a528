// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "riscov/scene.hpp"

namespace riscov {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

// SNR of a UE that no path reaches.
inline constexpr double kUnreachableDb = -std::numeric_limits<double>::infinity();

double db_to_linear(double db);
double linear_to_db(double linear);

// -174 dBm/Hz thermal density integrated over the bandwidth plus the receiver
// noise figure. Throws ValidationError on non-positive bandwidth.
double noise_floor_dbm(double bandwidth_hz, double noise_figure_db);

// Free-space path loss 20*log10(4*pi*d*f/c). Throws on d <= 0. Raw formula;
// link-level callers clamp distances to >= 1 m before calling (see below).
double fspl_db(double distance_m, double carrier_hz);

enum class PathKind { DirectLos, DirectNlos, RisCascaded };

struct LinkBudget {
    double rx_power_dbm = kUnreachableDb;
    PathKind path_kind = PathKind::DirectLos;
    int walls_crossed = 0;
    int via_ris = -1;  // index into the deployment, -1 for direct paths
};

struct RISUnit {
    CandidateSite site;
    double width_m = 0.0;
    double area_m2 = 0.0;  // always width_m squared
    double reflection_loss_db = 0.0;

    RISUnit() = default;
    RISUnit(CandidateSite s, double width, double reflection_loss = 0.0)
        : site(s), width_m(width), area_m2(width * width),
          reflection_loss_db(reflection_loss) {}
};

struct SNRRecord {
    int ue_index = -1;
    double snr_db = kUnreachableDb;
    std::vector<LinkBudget> paths;
};

// Strongest-single-BS receive power for the BS->UE path. Distances below 1 m
// are clamped to 1 m. Obstructed paths pay the band's NLOS excess plus each
// crossed building's wall loss.
LinkBudget direct_link_dbm(const SceneMap& scene, const BsSite& bs, Point3 ue);

// Cascaded path gain of an ideally steered square reflector, excluding
// antenna gains: 20*log10(area*cos_inc/(4*pi*d1*d2)) - reflection_loss_db.
// The gain is frequency independent (flat-plate radar-equation form);
// carrier_hz is part of the call signature for interface stability only.
// Distances are clamped to >= 1 m. Throws when incidence_cos <= 0 or on
// non-positive distance/area.
double ris_path_gain_db(double d1_m, double d2_m, double area_m2, double incidence_cos,
                        double carrier_hz, double reflection_loss_db = 0.0);

// BS->RIS->UE budget, or nullopt when the path is inactive: the UE must lie
// in the RIS front half-space and both hops must be LOS-clear.
std::optional<LinkBudget> ris_link_dbm(const SceneMap& scene, const RISUnit& ris, Point3 ue);

// Non-coherent power sum of the best direct path and every active RIS path.
SNRRecord ue_snr(const SceneMap& scene, Point3 ue, const std::vector<RISUnit>& deployment);

// First-Fresnel-zone diameter at the surface over the surface width:
// 2*sqrt(lambda*d1*d2/(d1+d2)) / width. Ratio > 1 indicates far-field
// (anomalous-reflector) operation. Throws on non-positive inputs.
double fresnel_ratio(double d1_m, double d2_m, double carrier_hz, double width_m);

// Shared SNR conversion so the greedy cache and the from-scratch recompute
// agree bit-for-bit: non-positive power maps to the unreachable marker.
double snr_db_from_power(double power_mw, double noise_dbm);

}  // namespace riscov
