// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

namespace riscov {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator*(Point3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }
inline Point3 normalized(Point3 a) {
    const double n = norm(a);
    return n > 0.0 ? Point3{a.x / n, a.y / n, a.z / n} : Point3{};
}
inline Vec2 xy(Point3 p) { return {p.x, p.y}; }

using Polygon = std::vector<Vec2>;

struct Aabb2 {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
};

Aabb2 polygon_bounds(const Polygon& poly);

// Positive for counter-clockwise vertex order.
double polygon_signed_area(const Polygon& poly);

// True when no two non-adjacent edges intersect and no adjacent edges overlap.
bool polygon_is_simple(const Polygon& poly);

enum class PointLocation { Outside, Boundary, Inside };

// Boundary is detected within `eps` meters; Inside means strict interior.
PointLocation locate_point(const Polygon& poly, Vec2 p, double eps = 1e-9);

// True if the 2D segment [a,b] can touch the box (conservative slab test).
bool segment_may_hit(const Aabb2& box, Vec2 a, Vec2 b);

// Parameters t in [0,1] where segment a+t(b-a) touches the polygon boundary.
// Used as classification breakpoints; spurious duplicates are harmless.
void boundary_crossings(const Polygon& poly, Vec2 a, Vec2 b, std::vector<double>& out_t);

struct Interval {
    double t0 = 0.0;
    double t1 = 0.0;
};

// Maximal sub-intervals of (0,1) where a+t(b-a) lies strictly inside the solid
// obtained by extruding `footprint` from z=0 to z=height. A segment that only
// grazes a face, edge or corner produces no interval.
std::vector<Interval> prism_inside_intervals(const Polygon& footprint, double height,
                                             Point3 a, Point3 b);

}  // namespace riscov
