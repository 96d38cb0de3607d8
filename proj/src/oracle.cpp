#include "polypack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "polypack/errors.hpp"
#include "polypack/hard_enum.hpp"

namespace polypack {

namespace {

constexpr double kPi = std::numbers::pi;

// One rotation of a polygon with the box of translations keeping it inside K.
struct Orientation {
    double angle = 0.0;
    double cos_a = 1.0, sin_a = 0.0;
    std::vector<Point> pts;  // placed with zero translation
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
};

struct Line {
    Point a, d;
};

std::vector<Orientation> orientations(const Item& it, double side, double tol, int fine_grid, int cn) {
    std::vector<double> angles;
    for (int k = 0; k < 2 * fine_grid; ++k) angles.push_back(k * kPi / fine_grid);
    for (int k = 0; k < 2 * cn; ++k) angles.push_back(k * kPi / cn);
    for (double a : fit_angles(it.shape, side, tol)) angles.push_back(a);
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(), [](double a, double b) { return b - a < 1e-12; }),
                 angles.end());
    std::vector<Orientation> out;
    const Point v0 = it.shape[0];
    for (double a : angles) {
        Orientation o;
        o.angle = a;
        o.cos_a = std::cos(a);
        o.sin_a = std::sin(a);
        o.pts = apply_placement(it.shape.vertices(), v0, Placement{0, 0, o.cos_a, o.sin_a});
        Rect b = bounding_box(o.pts);
        o.xlo = -b.x;
        o.xhi = side - (b.x + b.w);
        o.ylo = -b.y;
        o.yhi = side - (b.y + b.h);
        if (o.xhi < o.xlo) {
            if (o.xlo - o.xhi > 2 * tol) continue;
            o.xlo = o.xhi = 0.5 * (o.xlo + o.xhi);
        }
        if (o.yhi < o.ylo) {
            if (o.ylo - o.yhi > 2 * tol) continue;
            o.ylo = o.yhi = 0.5 * (o.ylo + o.yhi);
        }
        out.push_back(std::move(o));
    }
    return out;
}

// Translations d for which q + d meets p form this convex region.
std::vector<Point> forbidden_region(const std::vector<Point>& p, const std::vector<Point>& q) {
    std::vector<Point> diffs;
    diffs.reserve(p.size() * q.size());
    for (const auto& a : p) {
        for (const auto& b : q) diffs.push_back(a - b);
    }
    return convex_hull(diffs).vertices();
}

double depth_inside(const std::vector<Point>& ring, Point x) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ring.size(); ++i) {
        Point a = ring[i], b = ring[(i + 1) % ring.size()];
        d = std::min(d, cross(b - a, x - a) / dist(a, b));
    }
    return d;
}

class Search {
public:
    Search(double side, double tol, std::int64_t limit) : side_(side), tol_(tol), limit_(limit) {}

    std::int64_t nodes = 0;
    bool exhaustive = true;

    // Members' orientation lists in search order; fills chosen placements.
    bool run(const std::vector<const std::vector<Orientation>*>& members, std::vector<Placement>& out) {
        members_ = &members;
        placed_.clear();
        chosen_.assign(members.size(), Placement{});
        budget_ = limit_;
        if (!dfs(0)) return false;
        out = chosen_;
        return true;
    }

private:
    bool spend() {
        ++nodes;
        if (--budget_ < 0) {
            exhaustive = false;
            return false;
        }
        return true;
    }

    bool dfs(std::size_t level) {
        const auto& members = *members_;
        if (level == members.size()) return true;
        for (const auto& o : *members[level]) {
            // A quarter turn of the whole packing maps the square onto itself.
            if (level == 0 && o.angle >= kPi / 2 - 1e-12) break;
            if (level > 0 && !spend()) return false;
            std::vector<Point> cands = level == 0 ? anchor_points(o) : free_points(o);
            for (const auto& d : cands) {
                if (!spend()) return false;
                chosen_[level] = Placement{d.x, d.y, o.cos_a, o.sin_a};
                std::vector<Point> pts;
                for (const auto& v : o.pts) pts.push_back(v + d);
                placed_.push_back(std::move(pts));
                bool ok = dfs(level + 1);
                placed_.pop_back();
                if (ok) return true;
                if (budget_ < 0) return false;
            }
        }
        return false;
    }

    std::vector<Point> anchor_points(const Orientation& o) const {
        std::vector<Point> out;
        const double xs[3] = {o.xlo, 0.5 * (o.xlo + o.xhi), o.xhi};
        const double ys[3] = {o.ylo, 0.5 * (o.ylo + o.yhi), o.yhi};
        for (double x : xs) {
            for (double y : ys) out.push_back({x, y});
        }
        return unique_points(std::move(out));
    }

    std::vector<Point> unique_points(std::vector<Point> pts) const {
        std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
        std::vector<Point> out;
        for (const auto& p : pts) {
            bool dup = false;
            for (auto it = out.rbegin(); it != out.rend() && p.x - it->x <= tol_; ++it) {
                if (std::abs(p.y - it->y) <= tol_) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(p);
        }
        return out;
    }

    // Vertices of the arrangement of box sides and forbidden-region edges
    // that are free; the free set is empty iff this list is.
    std::vector<Point> free_points(const Orientation& o) const {
        std::vector<std::vector<Point>> regions;
        for (const auto& p : placed_) regions.push_back(forbidden_region(p, o.pts));
        std::vector<Line> lines{{{o.xlo, 0}, {0, 1}}, {{o.xhi, 0}, {0, 1}}, {{0, o.ylo}, {1, 0}}, {{0, o.yhi}, {1, 0}}};
        std::vector<Point> raw{{o.xlo, o.ylo}, {o.xhi, o.ylo}, {o.xlo, o.yhi}, {o.xhi, o.yhi}};
        for (const auto& r : regions) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                lines.push_back({r[i], r[(i + 1) % r.size()] - r[i]});
                raw.push_back(r[i]);
            }
        }
        for (std::size_t i = 0; i < lines.size(); ++i) {
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                double den = cross(lines[i].d, lines[j].d);
                if (std::abs(den) <= 1e-15 * norm(lines[i].d) * norm(lines[j].d)) continue;
                double s = cross(lines[j].a - lines[i].a, lines[j].d) / den;
                raw.push_back(lines[i].a + s * lines[i].d);
            }
        }
        std::vector<Point> out;
        for (auto p : raw) {
            if (p.x < o.xlo - tol_ || p.x > o.xhi + tol_ || p.y < o.ylo - tol_ || p.y > o.yhi + tol_) continue;
            p.x = std::clamp(p.x, o.xlo, o.xhi);
            p.y = std::clamp(p.y, o.ylo, o.yhi);
            bool ok = true;
            for (const auto& r : regions) {
                if (depth_inside(r, p) > 0.25 * tol_) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(p);
        }
        return unique_points(std::move(out));
    }

    double side_;
    double tol_;
    std::int64_t limit_;
    std::int64_t budget_ = 0;
    const std::vector<const std::vector<Orientation>*>* members_ = nullptr;
    std::vector<std::vector<Point>> placed_;
    std::vector<Placement> chosen_;
};

}  // namespace

PackingSolution brute_force_opt(const Instance& inst, std::size_t max_n, int fine_grid, OracleReport* report,
                                std::int64_t node_limit) {
    const std::size_t n = inst.size();
    if (n > max_n) throw TooLarge("oracle limited to " + std::to_string(max_n) + " polygons, got " + std::to_string(n));
    if (n > 20) throw TooLarge("oracle subset enumeration limited to 20 polygons");
    const double side = inst.side();
    const double tol = inst.tol();
    const auto& items = inst.items();
    const int cn = inst.config().grid_divisor * static_cast<int>(std::max<std::size_t>(n, 1));
    std::vector<std::vector<Orientation>> orient;
    for (const auto& it : items) orient.push_back(orientations(it, side, tol, std::max(1, fine_grid), cn));

    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 1; m < (1u << n); ++m) subsets.push_back(m);
    auto weight = [&](std::uint32_t m) {
        double w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m >> i & 1) w += items[i].weight;
        }
        return w;
    };
    std::stable_sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) {
        double wa = weight(a), wb = weight(b);
        if (wa != wb) return wa > wb;
        return std::popcount(a) < std::popcount(b);
    });

    OracleReport rep;
    Search search(side, tol, node_limit);
    std::map<std::uint32_t, bool> known;
    PackingSolution best = make_solution(inst, {}, Producer::Oracle);
    auto try_subset = [&](std::uint32_t m, auto&& self) -> std::vector<SolutionEntry> {
        std::vector<std::size_t> idx;
        double area = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(m >> i & 1)) continue;
            if (orient[i].empty()) return {};
            idx.push_back(i);
            area += polygon_area(items[i].shape);
        }
        if (area > side * side * (1 + 1e-9)) return {};
        // Every proper sub-pair has to fit first.
        if (idx.size() > 2) {
            for (std::size_t a = 0; a < idx.size(); ++a) {
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    std::uint32_t pm = (1u << idx[a]) | (1u << idx[b]);
                    auto k = known.find(pm);
                    if (k == known.end()) k = known.emplace(pm, !self(pm, self).empty()).first;
                    if (!k->second) return {};
                }
            }
        }
        // Larger polygons first.
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return polygon_area(items[a].shape) > polygon_area(items[b].shape);
        });
        std::vector<const std::vector<Orientation>*> members;
        for (std::size_t i : idx) members.push_back(&orient[i]);
        ++rep.subsets_checked;
        std::vector<Placement> pl;
        if (!search.run(members, pl)) return {};
        std::vector<SolutionEntry> entries;
        for (std::size_t k = 0; k < idx.size(); ++k) entries.push_back({items[idx[k]].id, pl[k]});
        return entries;
    };
    for (std::uint32_t m : subsets) {
        auto k = known.find(m);
        if (k != known.end() && !k->second) continue;
        auto entries = try_subset(m, try_subset);
        if (entries.empty()) {
            known[m] = false;
            continue;
        }
        PackingSolution sol = make_solution(inst, std::move(entries), Producer::Oracle);
        if (!validate_solution(inst, sol).feasible) continue;
        best = std::move(sol);
        break;
    }
    rep.nodes = search.nodes;
    rep.exhaustive = search.exhaustive;
    if (report) *report = rep;
    best.dispatch = "oracle";
    return best;
}

}  // namespace polypack
