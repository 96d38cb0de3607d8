#include "polypack/triangle_dp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "polypack/errors.hpp"
#include "polypack/hard_enum.hpp"

namespace polypack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point unit(Point v) {
    double l = norm(v);
    return {v.x / l, v.y / l};
}

Point wedge_anchor(WedgeMode mode, double n) { return mode == WedgeMode::TopLeft ? Point{0.0, n} : Point{n, 0.0}; }

// Orientation sign of the knapsack's top-right corner relative to any ray.
double wedge_sign(WedgeMode mode) { return mode == WedgeMode::TopLeft ? 1.0 : -1.0; }

std::size_t ray_neighbor(const TriangleMeta& m, WedgeMode mode) {
    return mode == WedgeMode::TopLeft ? (m.v_star + 1) % 3 : (m.v_star + 2) % 3;
}

// The vertex off the ray: the other neighbour of the shared vertex.
std::size_t off_ray_vertex(const TriangleMeta& m, WedgeMode mode) {
    return mode == WedgeMode::TopLeft ? (m.v_star + 2) % 3 : (m.v_star + 1) % 3;
}

std::vector<Point> placed_points(const ConvexPolygon& shape, const Placement& p) {
    return apply_placement(shape.vertices(), shape[0], p);
}

Rect knapsack_rect(double n) { return Rect{0.0, 0.0, n, n}; }

// Vertical extent of a convex ring on the line x = x0, if it meets it.
std::optional<std::pair<double, double>> vertical_extent(const std::vector<Point>& ring, double x0) {
    double lo = kInf, hi = -kInf;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        Point a = ring[i], b = ring[(i + 1) % ring.size()];
        if (a.x > b.x) std::swap(a, b);
        if (x0 < a.x || x0 > b.x) continue;
        double y;
        if (b.x - a.x <= 0.0) {
            lo = std::min({lo, a.y, b.y});
            hi = std::max({hi, a.y, b.y});
            continue;
        }
        y = a.y + (b.y - a.y) * (x0 - a.x) / (b.x - a.x);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

unsigned exit_sides(Point from, Point dir, double n) {
    double tx = kInf, ty = kInf;
    unsigned sx = 0, sy = 0;
    if (dir.x > 0) tx = (n - from.x) / dir.x, sx = kSideRight;
    if (dir.x < 0) tx = -from.x / dir.x, sx = kSideLeft;
    if (dir.y > 0) ty = (n - from.y) / dir.y, sy = kSideTop;
    if (dir.y < 0) ty = -from.y / dir.y, sy = kSideBottom;
    double scale = std::max({std::abs(tx == kInf ? 0.0 : tx), std::abs(ty == kInf ? 0.0 : ty), 1.0});
    if (std::abs(tx - ty) <= 1e-12 * scale) return sx | sy;
    return tx < ty ? sx : sy;
}

}  // namespace

TriangleMeta triangle_meta(const ConvexPolygon& shape, int id, double n) {
    if (shape.size() != 3) throw DegenerateInput("polygon " + std::to_string(id) + " is not a triangle");
    std::array<std::pair<double, std::size_t>, 3> e;
    double scale = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        e[k] = {dist(shape[k], shape[(k + 1) % 3]), k};
        scale = std::max(scale, e[k].first);
    }
    // Longer first; near-equal lengths fall back to the lower edge index.
    std::sort(e.begin(), e.end(), [&](const auto& a, const auto& b) {
        if (std::abs(a.first - b.first) > 1e-12 * scale) return a.first > b.first;
        return a.second < b.second;
    });
    TriangleMeta m;
    m.id = id;
    m.long_edges = {e[0].second, e[1].second};
    // Edges k and k+1 share vertex k+1; edges 0 and 2 share vertex 0.
    std::size_t a = std::min(e[0].second, e[1].second), b = std::max(e[0].second, e[1].second);
    m.v_star = (a == 0 && b == 2) ? 0 : b;
    m.group = group_of(shape.diameter_len(), n).value_or(Group{GroupKind::Finite, std::numeric_limits<int>::max()});
    return m;
}

Point wedge_point(WedgeMode mode, double n, int steps, int t) {
    const double off = n / 2.0 + t * (n / (2.0 * steps));
    return mode == WedgeMode::TopLeft ? Point{off, n / 2.0} : Point{n / 2.0, off};
}

Placement wedge_place(const ConvexPolygon& shape, const TriangleMeta& meta, WedgeMode mode, double n, int steps,
                      int t) {
    const Point anchor = wedge_anchor(mode, n);
    const Point v = shape[meta.v_star];
    const Point w = unit(shape[ray_neighbor(meta, mode)] - v);
    const Point u = unit(wedge_point(mode, n, steps, t) - anchor);
    Placement p;
    p.cos_a = dot(w, u);
    p.sin_a = -cross(w, u);
    Point r = rotate_cw(v - shape[0], p.cos_a, p.sin_a);
    p.dx = anchor.x - shape[0].x - r.x;
    p.dy = anchor.y - shape[0].y - r.y;
    return p;
}

int wedge_next_step(const ConvexPolygon& shape, const TriangleMeta& meta, WedgeMode mode, double n, int steps,
                    int t) {
    const Point anchor = wedge_anchor(mode, n);
    const double sign = wedge_sign(mode);
    const double slack = 0.5 * tolerance_for(n);
    Placement p = wedge_place(shape, meta, mode, n, steps, t);
    const Point q = apply_placement(shape[off_ray_vertex(meta, mode)], shape[0], p);
    auto clear = [&](int s) {
        Point ps = wedge_point(mode, n, steps, s);
        return sign * orient(anchor, ps, q) / dist(anchor, ps) <= slack;
    };
    if (!clear(steps)) return steps + 1;
    int lo = t, hi = steps;  // clear(hi) holds, the answer lies in (lo, hi]
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (clear(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

WedgePlaceResult top_left_place(const Instance& inst, const std::vector<int>& ordered, int steps, WedgeMode mode) {
    WedgePlaceResult res;
    const double n = inst.side();
    int t = 0;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        const Item& it = inst.at(ordered[k]);
        TriangleMeta m = triangle_meta(it.shape, it.id, n);
        if (t > steps) {
            res.infeasible_at = k;
            return res;
        }
        Placement p = wedge_place(it.shape, m, mode, n, steps, t);
        if (!contains(knapsack_rect(n), placed_points(it.shape, p), inst.tol())) {
            res.infeasible_at = k;
            return res;
        }
        int next = wedge_next_step(it.shape, m, mode, n, steps, t);
        res.entries.push_back({it.id, p});
        res.steps.push_back({it.id, t, next});
        t = next;
    }
    return res;
}

int default_wedge_steps(std::size_t n_triangles, const SolverConfig& cfg) {
    return std::max(1, cfg.tl_steps.value_or(64 * static_cast<int>(std::max<std::size_t>(n_triangles, 1))));
}

PackingSolution solve_wedge_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                               WedgeMode mode, WedgeTable* table) {
    const double n = inst.side();
    const Producer tag = mode == WedgeMode::TopLeft ? Producer::TriangleTL : Producer::TriangleBR;
    std::vector<TriangleMeta> tris;
    for (int id : ids) {
        const Item& it = inst.at(id);
        if (it.shape.size() != 3 || !group_of(it.shape.diameter_len(), n)) continue;
        tris.push_back(triangle_meta(it.shape, id, n));
    }
    const int T = default_wedge_steps(tris.size(), cfg);

    // Slots cover the whole hard range plus any group actually present.
    std::vector<Group> slots{Group{GroupKind::NegInfinity, 0}};
    auto [j_lo, j_hi] = hard_group_range(inst.n());
    for (int j = j_lo; j <= j_hi; ++j) slots.push_back({GroupKind::Finite, j});
    for (const auto& m : tris) {
        if (std::find(slots.begin(), slots.end(), m.group) == slots.end()) slots.push_back(m.group);
    }
    std::sort(slots.begin(), slots.end(), group_less);
    const std::size_t G = slots.size();

    std::vector<std::vector<std::size_t>> by_slot(G);
    for (std::size_t i = 0; i < tris.size(); ++i) {
        auto s = std::find(slots.begin(), slots.end(), tris[i].group) - slots.begin();
        by_slot[s].push_back(i);
    }

    // Per triangle and ray: fits inside the knapsack, and the next free ray.
    std::vector<std::vector<int>> next(tris.size(), std::vector<int>(T + 1, -1));
    std::vector<std::vector<Placement>> place(tris.size(), std::vector<Placement>(T + 1));
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& shape = inst.at(tris[i].id).shape;
        for (int t = 0; t <= T; ++t) {
            Placement p = wedge_place(shape, tris[i], mode, n, T, t);
            if (!contains(knapsack_rect(n), placed_points(shape, p), inst.tol())) continue;
            place[i][t] = p;
            next[i][t] = wedge_next_step(shape, tris[i], mode, n, T, t);
        }
    }

    std::vector<std::vector<double>> value(G + 1, std::vector<double>(T + 2, 0.0));
    std::vector<std::vector<int>> choice(G, std::vector<int>(T + 2, -1));
    for (std::size_t g = G; g-- > 0;) {
        for (int t = 0; t <= T; ++t) {
            double best = value[g + 1][t];
            for (std::size_t i : by_slot[g]) {
                if (next[i][t] < 0) continue;
                double v = inst.at(tris[i].id).weight + value[g + 1][next[i][t]];
                if (v > best) {
                    best = v;
                    choice[g][t] = static_cast<int>(i);
                }
            }
            value[g][t] = best;
        }
    }

    std::vector<SolutionEntry> entries;
    std::vector<WedgeStep> realized;
    int t = 0;
    for (std::size_t g = 0; g < G && t <= T; ++g) {
        int i = choice[g][t];
        if (i < 0) continue;
        entries.push_back({tris[i].id, place[i][t]});
        realized.push_back({tris[i].id, t, next[i][t]});
        t = next[i][t];
    }
    if (table) {
        table->mode = mode;
        table->steps = T;
        table->slots = slots;
        table->value = std::move(value);
        table->realized = std::move(realized);
    }
    PackingSolution sol = make_solution(inst, std::move(entries), tag);
    sol.dispatch = "hard=triangle";
    return sol;
}

PackingSolution solve_topleft_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                 WedgeTable* table) {
    return solve_wedge_dp(inst, ids, cfg, WedgeMode::TopLeft, table);
}

PackingSolution solve_bottomright_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                     WedgeTable* table) {
    return solve_wedge_dp(inst, ids, cfg, WedgeMode::BottomRight, table);
}

FacingInfo facing_of(const std::vector<Point>& placed, std::size_t v_star, double n) {
    const Point v = placed[v_star];
    FacingInfo f;
    f.first_sides = exit_sides(v, placed[(v_star + 1) % 3] - v, n);
    f.second_sides = exit_sides(v, placed[(v_star + 2) % 3] - v, n);
    auto vert = [](unsigned m) { return (m & (kSideLeft | kSideRight)) != 0; };
    auto hor = [](unsigned m) { return (m & (kSideBottom | kSideTop)) != 0; };
    if (f.first_sides & f.second_sides) {
        f.kind = Facing::Edge;
    } else if ((vert(f.first_sides) && hor(f.second_sides)) || (hor(f.first_sides) && vert(f.second_sides))) {
        f.kind = Facing::Corner;
    }
    return f;
}

bool faces_bottom_right(const FacingInfo& f) {
    if (f.kind != Facing::Corner) return false;
    return ((f.first_sides & kSideBottom) && (f.second_sides & kSideRight)) ||
           ((f.first_sides & kSideRight) && (f.second_sides & kSideBottom));
}

namespace {

struct CornerCand {
    int item = 0;  // index into the triangle list
    int id = 0;
    int slot = 0;
    double weight = 0.0;
    Placement placement;
    std::vector<Point> pts;
    std::vector<Point> er;
    Rect box;
    Point vstar;
    double xbar = 0.0;  // x of the rightmost vertex
    double minx = 0.0;
    Point centroid;
};

struct CellHash {
    std::size_t operator()(const CornerCell& c) const {
        std::size_t h = std::hash<std::uint64_t>()(c.groups);
        h ^= (static_cast<std::size_t>(c.first + 1) * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
        h ^= (static_cast<std::size_t>(c.second + 1) * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(c.dir) << 3;
        return h;
    }
};

struct RegionKey {
    int first, second, dir;
    bool operator==(const RegionKey&) const = default;
};

struct RegionHash {
    std::size_t operator()(const RegionKey& r) const {
        return (static_cast<std::size_t>(r.first + 1) * 1000003u + static_cast<std::size_t>(r.second + 1)) * 4u +
               static_cast<std::size_t>(r.dir);
    }
};

struct Region {
    std::vector<int> members;
    std::uint64_t avail = 0;
};

struct Memo {
    double value = 0.0;
    int pick = -1;
    std::uint64_t left_groups = 0;
};

class CornerDp {
public:
    CornerDp(std::vector<CornerCand> cands, double tol, std::int64_t budget) : c_(std::move(cands)), tol_(tol), budget_(budget) {
        const std::size_t m = c_.size();
        left_.assign(m, std::vector<char>(m, 0));
        mid_.assign(m, std::vector<char>(m, 0));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t x = 0; x < m; ++x) {
                if (c_[a].item == c_[x].item || c_[a].slot == c_[x].slot) continue;
                classify(a, x);
            }
        }
    }

    double solve(std::uint64_t all, CornerReport& rep) {
        rep_ = &rep;
        CornerCell root{-1, -1, 0, all};
        return value(root);
    }

    std::vector<int> realize(std::uint64_t all) {
        std::vector<int> out;
        realize(CornerCell{-1, -1, 0, all}, out);
        return out;
    }

    const std::vector<CornerCand>& cands() const { return c_; }

private:
    bool overlap(const CornerCand& a, const CornerCand& b) const {
        if (a.er.empty() || b.er.empty()) return false;
        if (a.box.x + a.box.w <= b.box.x || b.box.x + b.box.w <= a.box.x) return false;
        if (a.box.y + a.box.h <= b.box.y || b.box.y + b.box.h <= a.box.y) return false;
        return interiors_overlap(a.er, b.er);
    }

    // Whether x sits above anchor a on the vertical through its centroid.
    bool above(const CornerCand& a, const CornerCand& x) const {
        auto ext = vertical_extent(a.pts, x.centroid.x);
        return ext && x.centroid.y > ext->second;
    }

    bool crosses_up(const CornerCand& a, const CornerCand& x) const {
        const double x0 = a.vstar.x;
        if (x.minx >= x0 - tol_ || x.xbar <= x0 + tol_) return false;
        auto ext = vertical_extent(x.pts, x0);
        return ext && ext->second > a.vstar.y + tol_;
    }

    void classify(std::size_t a, std::size_t x) {
        const auto& A = c_[a];
        const auto& X = c_[x];
        if (X.xbar > A.xbar + tol_ || overlap(A, X)) return;
        const bool in_slab = X.minx >= A.vstar.x - tol_;
        if (in_slab && above(A, X)) {
            mid_[a][x] = 1;
            return;
        }
        if (crosses_up(A, X)) return;
        const bool centroid_in_slab = X.centroid.x >= A.vstar.x && X.centroid.x <= A.xbar;
        if (centroid_in_slab && above(A, X)) return;
        left_[a][x] = 1;
    }

    bool in_region(const RegionKey& r, int x) const {
        switch (r.dir) {
            case 0: return true;
            case 1: return left_[r.first][x];
            case 2: return mid_[r.first][x];
            default:
                // The inner anchor sits either left of or above the outer one.
                if (left_[r.first][r.second]) return left_[r.first][x] && mid_[r.second][x];
                return mid_[r.first][x] && left_[r.second][x];
        }
    }

    const Region& region(const RegionKey& r) {
        auto it = regions_.find(r);
        if (it != regions_.end()) return it->second;
        Region reg;
        for (int x = 0; x < static_cast<int>(c_.size()); ++x) {
            if (in_region(r, x)) {
                reg.members.push_back(x);
                reg.avail |= std::uint64_t{1} << c_[x].slot;
            }
        }
        return regions_.emplace(r, std::move(reg)).first->second;
    }

    CornerCell normalized(CornerCell cell) {
        cell.groups &= region({cell.first, cell.second, cell.dir}).avail;
        return cell;
    }

    // Sub-cells left behind once x is chosen inside the given cell.
    std::pair<CornerCell, CornerCell> children(const CornerCell& cell, int x) const {
        switch (cell.dir) {
            case 0: return {{x, -1, 1, 0}, {x, -1, 2, 0}};
            case 1: return {{x, -1, 1, 0}, {cell.first, x, 3, 0}};
            case 2: return {{x, -1, 2, 0}, {cell.first, x, 3, 0}};
            default: return {{cell.first, x, 3, 0}, {cell.second, x, 3, 0}};
        }
    }

    double value(CornerCell cell) {
        cell = normalized(cell);
        if (cell.groups == 0) return 0.0;
        auto found = memo_.find(cell);
        if (found != memo_.end()) return found->second.value;
        if (work_ > budget_) {
            rep_->exhaustive = false;
            return 0.0;
        }
        ++rep_->cells;
        Memo best;
        const std::vector<int> members = region({cell.first, cell.second, cell.dir}).members;
        for (int x : members) {
            const std::uint64_t bit = std::uint64_t{1} << c_[x].slot;
            if (!(cell.groups & bit)) continue;
            const std::uint64_t rest = cell.groups & ~bit;
            auto [c1, c2] = children(cell, x);
            const std::uint64_t a1 = region({c1.first, c1.second, c1.dir}).avail;
            const std::uint64_t a2 = region({c2.first, c2.second, c2.dir}).avail;
            const std::uint64_t both = rest & a1 & a2;
            const std::uint64_t only1 = rest & a1 & ~a2;
            const std::uint64_t only2 = rest & a2 & ~a1;
            // Walk every subset of the shared groups.
            std::uint64_t sub = both;
            while (true) {
                ++work_;
                ++rep_->splits;
                c1.groups = only1 | sub;
                c2.groups = only2 | (both & ~sub);
                if ((c1.groups & c2.groups) || ((c1.groups | c2.groups) & ~rest)) ++rep_->split_violations;
                double v = c_[x].weight + value(c1) + value(c2);
                if (v > best.value) {
                    best.value = v;
                    best.pick = x;
                    best.left_groups = c1.groups;
                }
                if (sub == 0) break;
                sub = (sub - 1) & both;
            }
        }
        memo_[cell] = best;
        return best.value;
    }

    void realize(CornerCell cell, std::vector<int>& out) {
        cell = normalized(cell);
        if (cell.groups == 0) return;
        auto found = memo_.find(cell);
        if (found == memo_.end() || found->second.pick < 0) return;
        const Memo& m = found->second;
        out.push_back(m.pick);
        auto [c1, c2] = children(cell, m.pick);
        const std::uint64_t rest = cell.groups & ~(std::uint64_t{1} << c_[m.pick].slot);
        c1.groups = m.left_groups;
        c2.groups = rest & ~m.left_groups;
        realize(c1, out);
        realize(c2, out);
    }

    std::vector<CornerCand> c_;
    double tol_;
    std::int64_t budget_;
    std::int64_t work_ = 0;
    CornerReport* rep_ = nullptr;
    std::vector<std::vector<char>> left_, mid_;
    std::unordered_map<RegionKey, Region, RegionHash> regions_;
    std::unordered_map<CornerCell, Memo, CellHash> memo_;
};

// Heaviest pairwise-compatible subset of the picked candidates.
std::vector<int> drop_conflicts(const std::vector<CornerCand>& cands, const std::vector<int>& picked, double tol) {
    const std::size_t k = picked.size();
    std::vector<std::vector<char>> clash(k, std::vector<char>(k, 0));
    bool any = false;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const auto& A = cands[picked[a]];
            const auto& B = cands[picked[b]];
            bool c = A.item == B.item || interiors_overlap(eroded(A.pts, tol), eroded(B.pts, tol));
            clash[a][b] = clash[b][a] = c;
            any = any || c;
        }
    }
    if (!any) return picked;
    std::vector<int> best;
    double best_w = -1.0;
    if (k <= 20) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            double w = 0.0;
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a) {
                if (!(mask >> a & 1)) continue;
                w += cands[picked[a]].weight;
                for (std::size_t b = a + 1; b < k; ++b) {
                    if ((mask >> b & 1) && clash[a][b]) ok = false;
                }
            }
            if (ok && w > best_w) {
                best_w = w;
                best.clear();
                for (std::size_t a = 0; a < k; ++a) {
                    if (mask >> a & 1) best.push_back(picked[a]);
                }
            }
        }
        return best;
    }
    std::vector<std::size_t> order(k);
    for (std::size_t a = 0; a < k; ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cands[picked[a]].weight > cands[picked[b]].weight; });
    std::vector<std::size_t> kept;
    for (std::size_t a : order) {
        bool ok = true;
        for (std::size_t b : kept) ok = ok && !clash[a][b];
        if (ok) kept.push_back(a);
    }
    for (std::size_t a : kept) best.push_back(picked[a]);
    return best;
}

}  // namespace

PackingSolution solve_corner_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                CornerReport* report) {
    const double n = inst.side();
    const double tol = inst.tol();
    CornerReport rep;
    std::vector<TriangleMeta> tris;
    for (int id : ids) {
        const Item& it = inst.at(id);
        if (it.shape.size() != 3 || !group_of(it.shape.diameter_len(), n)) continue;
        tris.push_back(triangle_meta(it.shape, id, n));
    }
    std::vector<Group> slots;
    for (const auto& m : tris) {
        if (std::find(slots.begin(), slots.end(), m.group) == slots.end()) slots.push_back(m.group);
    }
    std::sort(slots.begin(), slots.end(), group_less);
    static_assert(sizeof(std::uint64_t) * 8 == 64);
    if (slots.size() > 64) slots.resize(64);

    std::vector<CornerCand> cands;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        auto slot_it = std::find(slots.begin(), slots.end(), tris[i].group);
        if (slot_it == slots.end()) continue;
        const Item& it = inst.at(tris[i].id);
        std::vector<Placement> all;
        try {
            all = placement_set(it.shape, it.id, n, static_cast<int>(tris.size()), cfg).placements;
        } catch (const EmptyPlacementSet&) {
            continue;
        }
        std::vector<CornerCand> facing;
        for (const auto& p : all) {
            CornerCand c;
            c.pts = placed_points(it.shape, p);
            if (!faces_bottom_right(facing_of(c.pts, tris[i].v_star, n))) continue;
            c.item = static_cast<int>(i);
            c.id = it.id;
            c.slot = static_cast<int>(slot_it - slots.begin());
            c.weight = it.weight;
            c.placement = p;
            c.er = eroded(c.pts, tol);
            c.box = bounding_box(c.er);
            c.vstar = c.pts[tris[i].v_star];
            Rect b = bounding_box(c.pts);
            c.minx = b.x;
            c.xbar = b.x + b.w;
            c.centroid = vertex_centroid(c.pts);
            facing.push_back(std::move(c));
        }
        // An evenly spread subset keeps the state space bounded.
        const std::size_t keep = std::min<std::size_t>(facing.size(), std::max(1, cfg.corner_candidates));
        for (std::size_t k = 0; k < keep; ++k) {
            std::size_t pos = keep == 1 ? 0 : k * (facing.size() - 1) / (keep - 1);
            cands.push_back(facing[pos]);
        }
    }
    rep.candidates = cands.size();

    std::uint64_t all = 0;
    for (const auto& c : cands) all |= std::uint64_t{1} << c.slot;
    CornerDp dp(std::move(cands), tol, cfg.search_node_limit);
    rep.table_value = dp.solve(all, rep);
    std::vector<int> picked = dp.realize(all);
    std::vector<int> kept = drop_conflicts(dp.cands(), picked, tol);
    rep.dropped_conflicts = picked.size() - kept.size();

    std::vector<SolutionEntry> entries;
    for (int k : kept) entries.push_back({dp.cands()[k].id, dp.cands()[k].placement});
    if (report) *report = rep;
    PackingSolution sol = make_solution(inst, std::move(entries), Producer::TriangleCorner);
    sol.dispatch = "hard=triangle";
    return sol;
}

PackingSolution solve_single_max(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg) {
    std::vector<int> order = ids;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inst.at(a).weight > inst.at(b).weight; });
    for (int id : order) {
        const Item& it = inst.at(id);
        try {
            PlacementSet ps = placement_set(it.shape, id, inst.side(), static_cast<int>(ids.size()), cfg);
            PackingSolution sol = make_solution(inst, {{id, ps.placements.front()}}, Producer::SingleMax);
            sol.dispatch = "hard=triangle";
            return sol;
        } catch (const EmptyPlacementSet&) {
        }
    }
    PackingSolution sol = make_solution(inst, {}, Producer::SingleMax);
    sol.dispatch = "hard=triangle";
    return sol;
}

PackingSolution solve_hard_triangles(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                     HardTriangleReport* report) {
    HardTriangleReport rep;
    std::vector<PackingSolution> sols;
    sols.push_back(solve_single_max(inst, ids, cfg));
    sols.push_back(solve_topleft_dp(inst, ids, cfg, &rep.topleft));
    sols.push_back(solve_bottomright_dp(inst, ids, cfg, &rep.bottomright));
    sols.push_back(solve_corner_dp(inst, ids, cfg, &rep.corner));
    rep.single_weight = sols[0].total_weight;
    rep.topleft_weight = sols[1].total_weight;
    rep.bottomright_weight = sols[2].total_weight;
    rep.corner_weight = sols[3].total_weight;
    std::size_t win = 0;
    for (std::size_t k = 1; k < sols.size(); ++k) {
        if (sols[k].total_weight > sols[win].total_weight) win = k;
    }
    if (report) *report = std::move(rep);
    return sols[win];
}

}  // namespace polypack
