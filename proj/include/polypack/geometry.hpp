#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polypack {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
// Twice the signed area of triangle (o, a, b); positive for a left turn.
inline double orient(Point o, Point a, Point b) { return cross(a - o, b - o); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

// Rigid motion: rotate clockwise by the stored angle about the polygon's
// vertex 0, then translate by (dx, dy).
struct Placement {
    double dx = 0.0;
    double dy = 0.0;
    double cos_a = 1.0;
    double sin_a = 0.0;

    static Placement from_angle(double clockwise_rad, double dx = 0.0, double dy = 0.0);
    // Clockwise rotation angle in [0, 2*pi).
    double angle() const;
};

struct IndexPair {
    std::size_t first = 0;
    std::size_t second = 0;
};

struct Diameter {
    IndexPair pair;
    double length = 0.0;
};

// Strictly convex polygon with counterclockwise vertices and cached metrics.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    // Throws DegenerateInput unless the points form a strictly convex CCW polygon.
    static ConvexPolygon from_vertices(std::vector<Point> ccw);

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }

    IndexPair diameter_pair() const { return dpair_; }
    double diameter_len() const { return dlen_; }
    const Rect& bbox() const { return bbox_; }
    double height() const { return bbox_.h; }

private:
    std::vector<Point> v_;
    IndexPair dpair_;
    double dlen_ = 0.0;
    Rect bbox_;
};

ConvexPolygon convex_hull(std::span<const Point> points);

// Index of the first vertex at which the ring fails to be strictly convex, if any.
std::optional<std::size_t> convexity_defect(std::span<const Point> ring);

Diameter diameter(const ConvexPolygon& poly);
ConvexPolygon canonicalize(const ConvexPolygon& poly);

Point rotate_cw(Point v, double cos_a, double sin_a);
Point apply_placement(Point v, Point anchor, const Placement& p);
ConvexPolygon apply_placement(const ConvexPolygon& poly, const Placement& p);
std::vector<Point> apply_placement(std::span<const Point> pts, Point anchor, const Placement& p);

// Placement mapping `canonical` onto `placed` (vertex order preserved).
Placement placement_between(std::span<const Point> canonical, std::span<const Point> placed);

ConvexPolygon scaled(const ConvexPolygon& poly, double factor);

double polygon_area(const ConvexPolygon& poly);
double polygon_area(std::span<const Point> ring);
Point vertex_centroid(std::span<const Point> pts);
Rect bounding_box(std::span<const Point> pts);

// The polygon shrunk by tol toward its vertex centroid; empty when nothing
// of the interior survives.
std::vector<Point> eroded(std::span<const Point> ring, double tol);

// Strict separating-axis test on convex rings: true iff the interiors meet.
bool interiors_overlap(std::span<const Point> a, std::span<const Point> b);

bool polygons_overlap(const ConvexPolygon& a, const ConvexPolygon& b, double tol);
bool contains(const Rect& outer, const ConvexPolygon& poly, double tol);
bool contains(const Rect& outer, std::span<const Point> pts, double tol);

// Geometric tolerance for a knapsack of side n.
inline double tolerance_for(double n) { return 1e-9 * n; }

}  // namespace polypack
