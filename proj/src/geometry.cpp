// SPDX-License-Identifier: Apache-2.0
#include "riscov/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace riscov {

namespace {

constexpr double kParamEps = 1e-12;

// Distance from p to the segment [a,b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return std::hypot(p.x - a.x, p.y - a.y);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 q = a + ab * t;
    return std::hypot(p.x - q.x, p.y - q.y);
}

bool proper_segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
           ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

}  // namespace

Aabb2 polygon_bounds(const Polygon& poly) {
    Aabb2 box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
              std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Vec2& v : poly) {
        box.min_x = std::min(box.min_x, v.x);
        box.min_y = std::min(box.min_y, v.y);
        box.max_x = std::max(box.max_x, v.x);
        box.max_y = std::max(box.max_y, v.y);
    }
    return box;
}

double polygon_signed_area(const Polygon& poly) {
    double area = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        area += cross(a, b);
    }
    return 0.5 * area;
}

bool polygon_is_simple(const Polygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p1 = poly[i];
        const Vec2 p2 = poly[(i + 1) % n];
        if (std::hypot(p2.x - p1.x, p2.y - p1.y) <= 0.0) return false;  // zero-length edge
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            const Vec2 q1 = poly[j];
            const Vec2 q2 = poly[(j + 1) % n];
            if (proper_segments_intersect(p1, p2, q1, q2)) return false;
        }
    }
    return true;
}

PointLocation locate_point(const Polygon& poly, Vec2 p, double eps) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_segment_distance(p, poly[i], poly[(i + 1) % n]) <= eps) {
            return PointLocation::Boundary;
        }
    }
    // Crossing-number test with the half-open rule on y.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

bool segment_may_hit(const Aabb2& box, Vec2 a, Vec2 b) {
    // Slab test on x and y.
    double t0 = 0.0, t1 = 1.0;
    const double d[2] = {b.x - a.x, b.y - a.y};
    const double lo[2] = {box.min_x, box.min_y};
    const double hi[2] = {box.max_x, box.max_y};
    const double o[2] = {a.x, a.y};
    for (int axis = 0; axis < 2; ++axis) {
        if (std::abs(d[axis]) < 1e-15) {
            if (o[axis] < lo[axis] || o[axis] > hi[axis]) return false;
            continue;
        }
        double ta = (lo[axis] - o[axis]) / d[axis];
        double tb = (hi[axis] - o[axis]) / d[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    return true;
}

void boundary_crossings(const Polygon& poly, Vec2 a, Vec2 b, std::vector<double>& out_t) {
    const std::size_t n = poly.size();
    const Vec2 r = b - a;
    const double rlen2 = dot(r, r);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 c = poly[i];
        const Vec2 d = poly[(i + 1) % n];
        const Vec2 s = d - c;
        const double denom = cross(r, s);
        const Vec2 ca = c - a;
        if (std::abs(denom) > 1e-15) {
            const double t = cross(ca, s) / denom;
            const double u = cross(ca, r) / denom;
            if (t >= -kParamEps && t <= 1.0 + kParamEps && u >= -kParamEps && u <= 1.0 + kParamEps) {
                out_t.push_back(std::clamp(t, 0.0, 1.0));
            }
        } else if (rlen2 > 0.0 && std::abs(cross(ca, r)) <= 1e-9 * std::sqrt(rlen2)) {
            // Collinear overlap: project the edge endpoints onto the segment.
            const double tc = dot(ca, r) / rlen2;
            const double td = dot(d - a, r) / rlen2;
            if (tc >= -kParamEps && tc <= 1.0 + kParamEps) out_t.push_back(std::clamp(tc, 0.0, 1.0));
            if (td >= -kParamEps && td <= 1.0 + kParamEps) out_t.push_back(std::clamp(td, 0.0, 1.0));
        }
    }
}

std::vector<Interval> prism_inside_intervals(const Polygon& footprint, double height,
                                             Point3 a, Point3 b) {
    std::vector<double> ts;
    ts.reserve(8);
    ts.push_back(0.0);
    ts.push_back(1.0);
    boundary_crossings(footprint, xy(a), xy(b), ts);

    // Breakpoints where the segment meets the z=0 and z=height planes.
    const double dz = b.z - a.z;
    if (std::abs(dz) > 1e-15) {
        const double t_floor = (0.0 - a.z) / dz;
        const double t_roof = (height - a.z) / dz;
        if (t_floor > 0.0 && t_floor < 1.0) ts.push_back(t_floor);
        if (t_roof > 0.0 && t_roof < 1.0) ts.push_back(t_roof);
    }

    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double u, double v) { return std::abs(u - v) <= kParamEps; }),
             ts.end());

    std::vector<Interval> inside;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double t0 = ts[i];
        const double t1 = ts[i + 1];
        if (t1 - t0 <= kParamEps) continue;
        const double tm = 0.5 * (t0 + t1);
        const double zm = a.z + tm * dz;
        if (zm <= 1e-9 || zm >= height - 1e-9) continue;
        const Vec2 pm{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
        if (locate_point(footprint, pm) != PointLocation::Inside) continue;
        if (!inside.empty() && std::abs(inside.back().t1 - t0) <= kParamEps) {
            inside.back().t1 = t1;
        } else {
            inside.push_back({t0, t1});
        }
    }
    return inside;
}

}  // namespace riscov
