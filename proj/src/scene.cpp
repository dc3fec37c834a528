// SPDX-License-Identifier: Apache-2.0
#include "riscov/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace riscov {

namespace {

constexpr double kTEps = 1e-9;  // interval endpoint at 0/1 means the segment endpoint is inside

bool all_finite(const Point3& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

std::string building_tag(std::size_t i) {
    std::ostringstream os;
    os << "buildings[" << i << "]";
    return os.str();
}

}  // namespace

SceneMap make_scene(double width_m, double depth_m, std::vector<BuildingPrism> buildings,
                    std::vector<BsSite> bs_sites, BandConfig band) {
    if (!(width_m > 0.0) || !(depth_m > 0.0))
        throw ValidationError("scene extent: width > 0 and depth > 0 violated");
    if (bs_sites.empty())
        throw ValidationError("bs: at least one base station required");

    for (std::size_t i = 0; i < buildings.size(); ++i) {
        const BuildingPrism& b = buildings[i];
        const std::string tag = building_tag(i);
        if (b.footprint.size() < 3)
            throw ValidationError(tag + ": footprint needs >= 3 vertices");
        for (const Vec2& v : b.footprint)
            if (!std::isfinite(v.x) || !std::isfinite(v.y))
                throw ValidationError(tag + ": footprint coordinates must be finite");
        if (!(b.height_m > 0.0))
            throw ValidationError(tag + ": height > 0 violated");
        if (!(b.wall_loss_db >= 0.0))
            throw ValidationError(tag + ": wall_loss_db >= 0 violated");
        if (!polygon_is_simple(b.footprint))
            throw ValidationError(tag + ": footprint must be a simple polygon");
        if (polygon_signed_area(b.footprint) <= 0.0)
            throw ValidationError(tag + ": footprint must wind counter-clockwise");
        const Aabb2 box = polygon_bounds(b.footprint);
        if (box.min_x < 0.0 || box.min_y < 0.0 || box.max_x > width_m || box.max_y > depth_m)
            throw ValidationError(tag + ": footprint must lie inside the scene extent");
    }

    for (std::size_t i = 0; i < bs_sites.size(); ++i) {
        const BsSite& s = bs_sites[i];
        std::ostringstream os;
        os << "bs[" << i << "]";
        if (!all_finite(s.position))
            throw ValidationError(os.str() + ": position must be finite");
        if (s.position.z < 0.0)
            throw ValidationError(os.str() + ": z >= 0 violated");
    }

    if (!(band.carrier_hz > 0.0))
        throw ValidationError("band: carrier_hz > 0 violated");
    if (!(band.bandwidth_hz > 0.0))
        throw ValidationError("band: bandwidth_hz > 0 violated");
    if (band.ris_widths_m.empty())
        throw ValidationError("band: ris_widths_m must not be empty");
    for (double w : band.ris_widths_m)
        if (!(w > 0.0))
            throw ValidationError("band: ris_widths_m entries must be > 0");
    if (!(band.floor_height_m > 0.0))
        throw ValidationError("band: floor_height_m > 0 violated");
    if (!(band.ue_height_m > 0.0))
        throw ValidationError("band: ue_height_m > 0 violated");
    if (!(band.coverage_target_fraction > 0.0) || band.coverage_target_fraction > 1.0)
        throw ValidationError("band: coverage_target_fraction in (0, 1] violated");

    SceneMap scene;
    scene.width_m = width_m;
    scene.depth_m = depth_m;
    scene.buildings = std::move(buildings);
    scene.bs_sites = std::move(bs_sites);
    scene.band = band;
    scene.building_bounds.reserve(scene.buildings.size());
    for (const BuildingPrism& b : scene.buildings)
        scene.building_bounds.push_back(polygon_bounds(b.footprint));
    return scene;
}

TraceDetail trace_path(const SceneMap& scene, Point3 a, Point3 b) {
    TraceDetail out;
    const double zmin = std::min(a.z, b.z);
    for (std::size_t i = 0; i < scene.buildings.size(); ++i) {
        const BuildingPrism& bld = scene.buildings[i];
        if (zmin >= bld.height_m) continue;  // segment entirely above the prism
        if (!segment_may_hit(scene.building_bounds[i], xy(a), xy(b))) continue;
        const auto intervals = prism_inside_intervals(bld.footprint, bld.height_m, a, b);
        if (intervals.empty()) continue;
        out.clear = false;
        // Each interval endpoint strictly inside (0,1) is one crossing of the
        // prism surface; endpoints at 0/1 mean the path starts or ends inside.
        int crossings = 0;
        for (const Interval& iv : intervals) {
            if (iv.t0 > kTEps) ++crossings;
            if (iv.t1 < 1.0 - kTEps) ++crossings;
        }
        out.walls_crossed += crossings;
        out.penetration_db += crossings * bld.wall_loss_db;
    }
    return out;
}

LosResult los_trace(const SceneMap& scene, Point3 a, Point3 b) {
    const TraceDetail d = trace_path(scene, a, b);
    return LosResult{d.clear, d.walls_crossed};
}

std::vector<UESample> ue_grid(const SceneMap& scene) {
    constexpr double kCell = 10.0;
    std::vector<UESample> out;
    const int nx = static_cast<int>(std::floor(scene.width_m / kCell));
    const int ny = static_cast<int>(std::floor(scene.depth_m / kCell));
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Vec2 c{(ix + 0.5) * kCell, (iy + 0.5) * kCell};
            int host = -1;
            for (std::size_t bi = 0; bi < scene.buildings.size(); ++bi) {
                const Aabb2& box = scene.building_bounds[bi];
                if (c.x < box.min_x || c.x > box.max_x || c.y < box.min_y || c.y > box.max_y)
                    continue;
                if (locate_point(scene.buildings[bi].footprint, c) == PointLocation::Inside) {
                    host = static_cast<int>(bi);
                    break;
                }
            }
            if (host < 0) {
                out.push_back(UESample{Point3{c.x, c.y, scene.band.ue_height_m}, false, 0});
                continue;
            }
            if (scene.band.ue_placement == UePlacement::OutdoorOnly) continue;
            const BuildingPrism& bld = scene.buildings[static_cast<std::size_t>(host)];
            const int floors =
                static_cast<int>(std::floor(bld.height_m / scene.band.floor_height_m));
            for (int f = 0; f < floors; ++f) {
                const double z = f * scene.band.floor_height_m + scene.band.ue_height_m;
                if (z >= bld.height_m) break;
                out.push_back(UESample{Point3{c.x, c.y, z}, true, f});
            }
        }
    }
    if (out.empty()) throw ValidationError("ue_grid: scene produced no measurement points");
    return out;
}

namespace {

struct RawSite {
    Point3 position;
    Point3 normal;
    MountKind mount;
};

// CCW footprint: outward normal of edge (p0->p1) points to its right.
Vec2 edge_outward_normal(Vec2 p0, Vec2 p1) {
    const Vec2 d = p1 - p0;
    const double len = std::sqrt(dot(d, d));
    return Vec2{d.y / len, -d.x / len};
}

void emit_wall_sites(const BuildingPrism& b, const std::vector<double>& heights, double spacing,
                     std::vector<RawSite>& out) {
    const std::size_t n = b.footprint.size();
    for (std::size_t e = 0; e < n; ++e) {
        const Vec2 p0 = b.footprint[e];
        const Vec2 p1 = b.footprint[(e + 1) % n];
        const Vec2 d = p1 - p0;
        const double len = std::sqrt(dot(d, d));
        if (len < 1e-9) continue;
        const Vec2 nrm = edge_outward_normal(p0, p1);
        for (double s = spacing * 0.5; s < len; s += spacing) {
            const Vec2 at = p0 + d * (s / len);
            for (double h : heights) {
                if (h >= b.height_m) continue;
                out.push_back(
                    RawSite{Point3{at.x, at.y, h}, Point3{nrm.x, nrm.y, 0.0}, MountKind::Wall});
            }
        }
    }
}

void emit_roof_sites(const BuildingPrism& b, double spacing, std::vector<RawSite>& out) {
    const std::size_t n = b.footprint.size();
    for (std::size_t e = 0; e < n; ++e) {
        const Vec2 p0 = b.footprint[e];
        const Vec2 p1 = b.footprint[(e + 1) % n];
        const Vec2 d = p1 - p0;
        const double len = std::sqrt(dot(d, d));
        if (len < 1e-9) continue;
        const Vec2 nrm = edge_outward_normal(p0, p1);
        for (double s = spacing * 0.5; s < len; s += spacing) {
            const Vec2 at = p0 + d * (s / len);
            out.push_back(RawSite{Point3{at.x, at.y, b.height_m},
                                  normalized(Point3{nrm.x, nrm.y, 1.0}), MountKind::Roof});
        }
    }
}

void emit_corner_sites(const BuildingPrism& b, const std::vector<double>& heights,
                       std::vector<RawSite>& out) {
    const std::size_t n = b.footprint.size();
    for (std::size_t v = 0; v < n; ++v) {
        const Vec2 prev = b.footprint[(v + n - 1) % n];
        const Vec2 cur = b.footprint[v];
        const Vec2 next = b.footprint[(v + 1) % n];
        const Vec2 n0 = edge_outward_normal(prev, cur);
        const Vec2 n1 = edge_outward_normal(cur, next);
        Vec2 nc = n0 + n1;
        const double len = std::sqrt(dot(nc, nc));
        if (len < 1e-9) continue;  // straight vertex, wall sites already cover it
        nc = nc * (1.0 / len);
        for (double h : heights) {
            if (h >= b.height_m) continue;
            out.push_back(
                RawSite{Point3{cur.x, cur.y, h}, Point3{nc.x, nc.y, 0.0}, MountKind::Corner});
        }
    }
}

}  // namespace

std::vector<CandidateSite> ris_candidates(const SceneMap& scene, double spacing_m,
                                          const std::vector<double>& wall_heights_m) {
    if (!(spacing_m > 0.0))
        throw ValidationError("ris_candidates: spacing_m > 0 violated");

    std::vector<CandidateSite> out;
    for (const BuildingPrism& b : scene.buildings) {
        std::vector<double> heights = wall_heights_m;
        const double top = 0.8 * b.height_m;
        bool dup = false;
        for (double h : heights)
            if (std::abs(h - top) < 0.25) dup = true;
        if (!dup) heights.push_back(top);
        std::sort(heights.begin(), heights.end());

        std::vector<RawSite> raw;
        emit_wall_sites(b, heights, spacing_m, raw);
        emit_roof_sites(b, spacing_m, raw);
        emit_corner_sites(b, heights, raw);

        for (const RawSite& r : raw) {
            // nudge off the host wall so the site does not occlude itself
            const Point3 probe = r.position + r.normal * 1e-3;
            int best = -1;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t si = 0; si < scene.bs_sites.size(); ++si) {
                const Point3 bs = scene.bs_sites[si].position;
                if (dot(bs - r.position, r.normal) <= 0.0) continue;  // BS behind the face
                if (!los_trace(scene, probe, bs).clear) continue;
                const double d = distance(probe, bs);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(si);
                }
            }
            if (best < 0) continue;
            out.push_back(CandidateSite{r.position, r.normal, r.mount, best, best_d});
        }
    }
    return out;
}

}  // namespace riscov
