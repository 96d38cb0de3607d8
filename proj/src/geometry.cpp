#include "polypack/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "polypack/errors.hpp"

namespace polypack {

namespace {

// Turns smaller than this fraction of scale^2 count as collinear.
constexpr double kCollinearRel = 1e-13;

double ring_scale(std::span<const Point> pts) {
    Rect b = bounding_box(pts);
    return std::max({b.w, b.h, 1e-300});
}

Diameter diameter_of(const std::vector<Point>& v) {
    const std::size_t k = v.size();
    auto area2 = [&](std::size_t i, std::size_t j) {
        return std::abs(orient(v[i], v[(i + 1) % k], v[j % k]));
    };
    // Rotating calipers; every antipodal pair lands in the candidate list.
    std::vector<IndexPair> cand;
    std::size_t j = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t guard = 0;
        while (guard++ < k && area2(i, j + 1) > area2(i, j)) j = (j + 1) % k;
        for (std::size_t a : {i, (i + 1) % k}) {
            for (std::size_t b : {j % k, (j + 1) % k}) {
                if (a != b) cand.push_back({std::min(a, b), std::max(a, b)});
            }
        }
    }
    double best2 = 0.0;
    for (const auto& c : cand) {
        Point d = v[c.first] - v[c.second];
        best2 = std::max(best2, dot(d, d));
    }
    IndexPair pick{k, k};
    for (const auto& c : cand) {
        Point d = v[c.first] - v[c.second];
        if (dot(d, d) < best2 * (1.0 - 4e-12)) continue;
        if (pick.first == k || c.first < pick.first ||
            (c.first == pick.first && c.second < pick.second)) {
            pick = c;
        }
    }
    return {pick, dist(v[pick.first], v[pick.second])};
}

}  // namespace

Placement Placement::from_angle(double clockwise_rad, double dx, double dy) {
    return {dx, dy, std::cos(clockwise_rad), std::sin(clockwise_rad)};
}

double Placement::angle() const {
    double a = std::atan2(sin_a, cos_a);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> ccw) {
    if (ccw.size() < 3) throw DegenerateInput("polygon needs at least 3 vertices");
    for (const auto& p : ccw) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw DegenerateInput("non-finite vertex coordinate");
        }
    }
    if (polygon_area(ccw) <= 0.0) throw DegenerateInput("vertices are not counterclockwise");
    if (auto bad = convexity_defect(ccw)) {
        throw DegenerateInput("polygon is not strictly convex at vertex " + std::to_string(*bad));
    }
    ConvexPolygon poly;
    poly.v_ = std::move(ccw);
    Diameter d = diameter_of(poly.v_);
    poly.dpair_ = d.pair;
    poly.dlen_ = d.length;
    poly.bbox_ = bounding_box(poly.v_);
    return poly;
}

ConvexPolygon convex_hull(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) throw DegenerateInput("fewer than 3 distinct points");
    const double thr = kCollinearRel * ring_scale(pts) * ring_scale(pts);
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= thr) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && orient(hull[k - 2], hull[k - 1], pts[i]) <= thr) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // The chain never tests the turn at its start; near-duplicate extreme
    // points can leave a flat vertex there.
    for (bool changed = true; changed && hull.size() >= 3;) {
        changed = false;
        for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
            const std::size_t m = hull.size();
            if (orient(hull[(i + m - 1) % m], hull[i], hull[(i + 1) % m]) <= thr) {
                hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (hull.size() < 3) throw DegenerateInput("all points are collinear");
    return ConvexPolygon::from_vertices(std::move(hull));
}

std::optional<std::size_t> convexity_defect(std::span<const Point> ring) {
    const std::size_t k = ring.size();
    if (k < 3) return 0;
    const double area = polygon_area(ring);
    const double s = ring_scale(ring);
    const double thr = kCollinearRel * s * s;
    if (std::abs(area) <= thr) return 0;
    const double sgn = area > 0 ? 1.0 : -1.0;
    double turning = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        Point prev = ring[(i + k - 1) % k];
        Point cur = ring[i];
        Point next = ring[(i + 1) % k];
        if (sgn * orient(prev, cur, next) <= thr) return i;
        Point e1 = cur - prev;
        Point e2 = next - cur;
        turning += std::atan2(sgn * cross(e1, e2), dot(e1, e2));
    }
    // A star-shaped ring turns more than once around.
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) return 0;
    return std::nullopt;
}

Diameter diameter(const ConvexPolygon& poly) { return {poly.diameter_pair(), poly.diameter_len()}; }

ConvexPolygon canonicalize(const ConvexPolygon& poly) {
    const auto& v = poly.vertices();
    IndexPair dp = poly.diameter_pair();
    Point d = v[dp.second] - v[dp.first];
    const double len = norm(d);
    const double c = d.x / len;
    const double s = d.y / len;
    std::vector<Point> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = {v[i].x * c + v[i].y * s, -v[i].x * s + v[i].y * c};
    }
    // Pin the diameter exactly horizontal so a second pass is a no-op.
    double ymid = 0.5 * (out[dp.first].y + out[dp.second].y);
    out[dp.first].y = ymid;
    out[dp.second].y = ymid;
    Rect b = bounding_box(out);
    for (auto& p : out) p = {p.x - b.x, p.y - b.y};
    return ConvexPolygon::from_vertices(std::move(out));
}

Point rotate_cw(Point v, double cos_a, double sin_a) {
    return {cos_a * v.x + sin_a * v.y, -sin_a * v.x + cos_a * v.y};
}

Point apply_placement(Point v, Point anchor, const Placement& p) {
    Point r = rotate_cw(v - anchor, p.cos_a, p.sin_a);
    return {anchor.x + r.x + p.dx, anchor.y + r.y + p.dy};
}

std::vector<Point> apply_placement(std::span<const Point> pts, Point anchor, const Placement& p) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& v : pts) out.push_back(apply_placement(v, anchor, p));
    return out;
}

ConvexPolygon apply_placement(const ConvexPolygon& poly, const Placement& p) {
    return ConvexPolygon::from_vertices(apply_placement(poly.vertices(), poly[0], p));
}

Placement placement_between(std::span<const Point> canonical, std::span<const Point> placed) {
    Point u = canonical[1] - canonical[0];
    Point w = placed[1] - placed[0];
    double nu = norm(u) * norm(w);
    Placement p;
    p.cos_a = dot(u, w) / nu;
    p.sin_a = -cross(u, w) / nu;
    double r = std::hypot(p.cos_a, p.sin_a);
    p.cos_a /= r;
    p.sin_a /= r;
    p.dx = placed[0].x - canonical[0].x;
    p.dy = placed[0].y - canonical[0].y;
    return p;
}

ConvexPolygon scaled(const ConvexPolygon& poly, double factor) {
    std::vector<Point> out;
    out.reserve(poly.size());
    for (const auto& v : poly.vertices()) out.push_back(factor * v);
    return ConvexPolygon::from_vertices(std::move(out));
}

double polygon_area(std::span<const Point> ring) {
    double a = 0.0;
    for (std::size_t i = 0, k = ring.size(); i < k; ++i) a += cross(ring[i], ring[(i + 1) % k]);
    return 0.5 * a;
}

double polygon_area(const ConvexPolygon& poly) { return polygon_area(poly.vertices()); }

Point vertex_centroid(std::span<const Point> pts) {
    Point c;
    for (const auto& p : pts) c = c + p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

Rect bounding_box(std::span<const Point> pts) {
    if (pts.empty()) return {};
    double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return {x0, y0, x1 - x0, y1 - y0};
}

std::vector<Point> eroded(std::span<const Point> ring, double tol) {
    std::vector<Point> out(ring.begin(), ring.end());
    if (tol <= 0.0 || ring.size() < 3) return out;
    const std::size_t k = ring.size();
    Point c = vertex_centroid(ring);
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        Point e = ring[(i + 1) % k] - ring[i];
        dmin = std::min(dmin, cross(e, c - ring[i]) / norm(e));
    }
    if (dmin > 4.0 * tol) {
        // Every edge line moves inward by at least tol.
        const double s = 1.0 - tol / dmin;
        for (auto& p : out) p = c + s * (p - c);
        return out;
    }
    // Sliver: clip against every edge offset inward by tol.
    for (std::size_t i = 0; i < k && !out.empty(); ++i) {
        Point a = ring[i];
        Point e = ring[(i + 1) % k] - a;
        double len = norm(e);
        auto side = [&](Point p) { return cross(e, p - a) / len - tol; };
        std::vector<Point> next;
        for (std::size_t m = 0; m < out.size(); ++m) {
            Point p = out[m];
            Point q = out[(m + 1) % out.size()];
            double sp = side(p), sq = side(q);
            if (sp >= 0) next.push_back(p);
            if ((sp >= 0) != (sq >= 0)) next.push_back(p + (sp / (sp - sq)) * (q - p));
        }
        out = std::move(next);
    }
    if (out.size() < 3 || polygon_area(out) <= 0.0) out.clear();
    return out;
}

bool interiors_overlap(std::span<const Point> a, std::span<const Point> b) {
    if (a.size() < 3 || b.size() < 3) return false;
    auto separated_by_edges_of = [](std::span<const Point> p, std::span<const Point> q) {
        for (std::size_t i = 0, k = p.size(); i < k; ++i) {
            Point e = p[(i + 1) % k] - p[i];
            Point axis{-e.y, e.x};
            double pmin = std::numeric_limits<double>::infinity(), pmax = -pmin;
            double qmin = pmin, qmax = -pmin;
            for (const auto& v : p) {
                double t = dot(axis, v);
                pmin = std::min(pmin, t);
                pmax = std::max(pmax, t);
            }
            for (const auto& v : q) {
                double t = dot(axis, v);
                qmin = std::min(qmin, t);
                qmax = std::max(qmax, t);
            }
            if (pmax <= qmin || qmax <= pmin) return true;
        }
        return false;
    };
    return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

bool polygons_overlap(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
    auto ea = eroded(a.vertices(), tol);
    auto eb = eroded(b.vertices(), tol);
    return interiors_overlap(ea, eb);
}

bool contains(const Rect& outer, std::span<const Point> pts, double tol) {
    for (const auto& p : pts) {
        if (p.x < outer.x - tol || p.x > outer.x + outer.w + tol) return false;
        if (p.y < outer.y - tol || p.y > outer.y + outer.h + tol) return false;
    }
    return true;
}

bool contains(const Rect& outer, const ConvexPolygon& poly, double tol) {
    return contains(outer, poly.vertices(), tol);
}

}  // namespace polypack
