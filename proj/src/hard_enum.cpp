#include "polypack/hard_enum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "polypack/classify.hpp"
#include "polypack/easy_solver.hpp"
#include "polypack/errors.hpp"
#include "polypack/medium_solver.hpp"

namespace polypack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAngleSamples = 1024;  // per quarter turn

double overshoot(const ConvexPolygon& shape, double side, double theta) {
    Extent e = rotated_extent(shape, std::cos(theta), std::sin(theta));
    return std::max(e.width(), e.height()) - side;
}

// Placed polygon with its eroded copy for overlap tests.
struct Shape {
    std::vector<Point> pts;
    Rect box;
};

Shape make_shape(const ConvexPolygon& poly, const Placement& p, double tol) {
    Shape s;
    s.pts = eroded(apply_placement(poly.vertices(), poly[0], p), tol);
    s.box = bounding_box(s.pts);
    return s;
}

bool shapes_overlap(const Shape& a, const Shape& b) {
    if (a.pts.empty() || b.pts.empty()) return false;
    if (a.box.x + a.box.w <= b.box.x || b.box.x + b.box.w <= a.box.x) return false;
    if (a.box.y + a.box.h <= b.box.y || b.box.y + b.box.h <= a.box.y) return false;
    return interiors_overlap(a.pts, b.pts);
}

struct Candidate {
    int id;
    double weight;
    Group group;
    std::vector<Placement> placements;
    std::vector<Shape> shapes;
};

class Enumerator {
public:
    Enumerator(std::vector<Candidate> cands, const SolverConfig& cfg) : c_(std::move(cands)), cfg_(cfg) {
        std::stable_sort(c_.begin(), c_.end(), [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
        pair_state_.assign(c_.size(), std::vector<int>(c_.size(), -1));
    }

    std::vector<SolutionEntry> run(HardEnumReport& rep) {
        std::vector<int> set;
        std::map<Group, int, decltype(&group_less)> per_group(&group_less);
        search(0, set, 0.0, per_group);
        rep.nodes = nodes_;
        rep.subsets_checked = checked_;
        rep.exhaustive = exhaustive_;
        std::vector<SolutionEntry> out;
        for (std::size_t k = 0; k < best_set_.size(); ++k) {
            const Candidate& c = c_[best_set_[k]];
            out.push_back({c.id, c.placements[best_choice_[k]]});
        }
        return out;
    }

private:
    std::vector<Candidate> c_;
    SolverConfig cfg_;
    std::vector<std::vector<int>> pair_state_;  // -1 unknown, 0 infeasible, 1 feasible
    std::int64_t nodes_ = 0;
    std::size_t checked_ = 0;
    bool exhaustive_ = true;
    double best_w_ = 0.0;
    std::vector<int> best_set_;
    std::vector<std::size_t> best_choice_;

    // Depth-first placement search; members in search order.
    bool place(const std::vector<int>& members, std::size_t depth, std::vector<std::size_t>& choice,
               std::int64_t& budget) {
        if (depth == members.size()) return true;
        const Candidate& c = c_[members[depth]];
        for (std::size_t p = 0; p < c.shapes.size(); ++p) {
            if (--budget < 0) {
                exhaustive_ = false;
                return false;
            }
            ++nodes_;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                ok = !shapes_overlap(c.shapes[p], c_[members[k]].shapes[choice[k]]);
            }
            if (!ok) continue;
            choice[depth] = p;
            if (place(members, depth + 1, choice, budget)) return true;
            if (budget < 0) return false;
        }
        return false;
    }

    bool feasible(const std::vector<int>& set, std::vector<std::size_t>& choice) {
        ++checked_;
        std::vector<int> members = set;
        std::stable_sort(members.begin(), members.end(),
                         [&](int a, int b) { return c_[a].shapes.size() < c_[b].shapes.size(); });
        std::vector<std::size_t> ch(members.size());
        std::int64_t budget = cfg_.search_node_limit;
        if (!place(members, 0, ch, budget)) return false;
        choice.assign(set.size(), 0);
        for (std::size_t k = 0; k < set.size(); ++k) {
            auto it = std::find(members.begin(), members.end(), set[k]);
            choice[k] = ch[it - members.begin()];
        }
        return true;
    }

    bool pair_ok(int a, int b) {
        int& st = pair_state_[a][b];
        if (st < 0) {
            std::vector<std::size_t> ch;
            st = feasible({a, b}, ch) ? 1 : 0;
            pair_state_[b][a] = st;
        }
        return st == 1;
    }

    void search(std::size_t pos, std::vector<int>& set, double w,
                std::map<Group, int, decltype(&group_less)>& per_group) {
        if (static_cast<int>(set.size()) >= cfg_.hard_budget) return;
        const int room = cfg_.hard_budget - static_cast<int>(set.size());
        for (std::size_t i = pos; i < c_.size(); ++i) {
            // Weights are sorted, so the optimistic bound only shrinks with i.
            double bound = w;
            for (std::size_t k = i; k < c_.size() && k < i + room; ++k) bound += c_[k].weight;
            if (bound <= best_w_) return;
            if (per_group[c_[i].group] >= cfg_.per_group) continue;
            bool pairs = true;
            for (int m : set) pairs = pairs && pair_ok(m, static_cast<int>(i));
            if (!pairs) continue;
            set.push_back(static_cast<int>(i));
            std::vector<std::size_t> choice;
            if (feasible(set, choice)) {
                if (w + c_[i].weight > best_w_) {
                    best_w_ = w + c_[i].weight;
                    best_set_ = set;
                    best_choice_ = choice;
                }
                ++per_group[c_[i].group];
                search(i + 1, set, w + c_[i].weight, per_group);
                --per_group[c_[i].group];
            }
            set.pop_back();
        }
    }
};

}  // namespace

Extent rotated_extent(const ConvexPolygon& shape, double cos_a, double sin_a) {
    Extent e{0.0, 0.0, 0.0, 0.0};
    const Point v0 = shape[0];
    for (const auto& v : shape.vertices()) {
        Point r = rotate_cw(v - v0, cos_a, sin_a);
        e.minx = std::min(e.minx, r.x);
        e.maxx = std::max(e.maxx, r.x);
        e.miny = std::min(e.miny, r.y);
        e.maxy = std::max(e.maxy, r.y);
    }
    return e;
}

std::vector<double> fit_angles(const ConvexPolygon& shape, double side, double tol) {
    // The larger extent repeats every quarter turn.
    const double quarter = kPi / 2;
    const double step = quarter / kAngleSamples;
    std::vector<double> f(kAngleSamples + 1);
    for (int i = 0; i <= kAngleSamples; ++i) f[i] = overshoot(shape, side, i * step);
    std::vector<double> base;
    for (int i = 0; i < kAngleSamples; ++i) {
        if ((f[i] <= 0) != (f[i + 1] <= 0)) {
            double lo = i * step, hi = (i + 1) * step;
            bool lo_in = f[i] <= 0;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                if ((overshoot(shape, side, mid) <= 0) == lo_in) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            base.push_back(lo_in ? lo : hi);
        }
        const double prev = i == 0 ? overshoot(shape, side, -step) : f[i - 1];
        if (f[i] <= prev && f[i] <= f[i + 1]) {
            double a = (i - 1) * step, b = (i + 1) * step;
            const double g = (std::sqrt(5.0) - 1) / 2;
            double x1 = b - g * (b - a), x2 = a + g * (b - a);
            double f1 = overshoot(shape, side, x1), f2 = overshoot(shape, side, x2);
            for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
                if (f1 <= f2) {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - g * (b - a);
                    f1 = overshoot(shape, side, x1);
                } else {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + g * (b - a);
                    f2 = overshoot(shape, side, x2);
                }
            }
            double x = f1 <= f2 ? x1 : x2;
            if (std::min(f1, f2) <= tol) base.push_back(x);
        }
    }
    std::vector<double> out;
    for (double a : base) {
        for (int k = 0; k < 4; ++k) {
            double t = std::fmod(a + k * quarter + 4 * kPi, 2 * kPi);
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlacementSet placement_set(const ConvexPolygon& shape, int id, double side, int n_polys, const SolverConfig& cfg) {
    const double tol = tolerance_for(side);
    const int cn = std::max(1, cfg.grid_divisor * std::max(1, n_polys));
    const double grid = side / cn;
    std::vector<double> angles;
    for (int k = 0; k < 2 * cn; ++k) angles.push_back(k * kPi / cn);
    for (double a : fit_angles(shape, side, tol)) angles.push_back(a);
    // Fit angles may land on the grid; positions per angle are already distinct.
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(), [](double a, double b) { return b - a < 1e-12; }),
                 angles.end());

    const Point v0 = shape[0];
    struct Cand {
        Placement p;
        double key;
    };
    std::vector<Cand> cands;
    auto axis_positions = [&](double lo, double hi) {
        std::vector<double> out{lo, hi, 0.5 * (lo + hi)};
        for (double g = std::ceil(lo / grid) * grid; g <= hi; g += grid) out.push_back(g);
        std::sort(out.begin(), out.end());
        std::vector<double> uniq;
        for (double v : out) {
            if (uniq.empty() || v - uniq.back() > 1e3 * tol) uniq.push_back(v);
        }
        return uniq;
    };
    const IndexPair dp = shape.diameter_pair();
    const Point centre{side / 2, side / 2};
    for (double a : angles) {
        const double c = std::cos(a), s = std::sin(a);
        Extent e = rotated_extent(shape, c, s);
        // Feasible range of the vertex-0 anchor on each axis.
        double xlo = -e.minx, xhi = side - e.maxx;
        double ylo = -e.miny, yhi = side - e.maxy;
        if (xhi < xlo) {
            if (xlo - xhi > 2 * tol) continue;
            xlo = xhi = 0.5 * (xlo + xhi);
        }
        if (yhi < ylo) {
            if (ylo - yhi > 2 * tol) continue;
            ylo = yhi = 0.5 * (ylo + yhi);
        }
        for (double ax : axis_positions(xlo, xhi)) {
            for (double ay : axis_positions(ylo, yhi)) {
                Placement p{ax - v0.x, ay - v0.y, c, s};
                Point m = 0.5 * (apply_placement(shape[dp.first], v0, p) + apply_placement(shape[dp.second], v0, p));
                cands.push_back({p, dist(m, centre)});
            }
        }
    }
    if (cands.empty()) throw EmptyPlacementSet("polygon " + std::to_string(id) + " does not fit the knapsack");
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.key > b.key; });
    PlacementSet ps;
    ps.id = id;
    for (const auto& c : cands) ps.placements.push_back(c.p);
    return ps;
}

PackingSolution solve_hard_enum(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                HardEnumReport* report) {
    const double side = inst.side();
    const double tol = inst.tol();
    std::vector<Candidate> cands;
    for (int id : ids) {
        const Item& it = inst.at(id);
        Classification cl = classify_polygon(it.shape, side, id);
        if (!cl.group && cl.cls != PolyClass::Easy) continue;
        Candidate c;
        c.id = id;
        c.weight = it.weight;
        c.group = cl.group.value_or(Group{GroupKind::Finite, 1 << 20});
        try {
            c.placements = placement_set(it.shape, id, side, static_cast<int>(ids.size()), cfg).placements;
        } catch (const EmptyPlacementSet&) {
            continue;
        }
        for (const auto& p : c.placements) c.shapes.push_back(make_shape(it.shape, p, tol));
        cands.push_back(std::move(c));
    }
    HardEnumReport rep;
    Enumerator en(std::move(cands), cfg);
    auto entries = en.run(rep);
    if (report) *report = rep;
    PackingSolution sol = make_solution(inst, std::move(entries), Producer::HardEnum);
    sol.dispatch = "hard=enum";
    return sol;
}

int ra_group_bound(double delta) {
    return static_cast<int>(std::ceil(std::log2((1.0 + delta) / delta) - 1e-12)) + 1;
}

PackingSolution solve_hard_ra(const Instance& inst, double delta, const SolverConfig& cfg, RaReport* report) {
    const double factor = 1.0 + delta;
    const double side = inst.side();
    std::vector<PolygonInput> shrunk;
    for (const auto& it : inst.items()) {
        if (it.shape.diameter_len() > std::numbers::sqrt2 * side * (1 + 1e-12)) continue;
        PolygonInput p;
        p.id = it.id;
        p.weight = it.weight;
        for (const auto& v : it.shape.vertices()) p.vertices.push_back((1.0 / factor) * v);
        shrunk.push_back(std::move(p));
    }
    Instance small(inst.n(), std::move(shrunk), cfg);
    std::vector<int> easy, medium, hard;
    std::set<std::pair<int, int>> groups;
    for (const auto& c : classify_all(small)) {
        if (c.cls == PolyClass::Easy) {
            easy.push_back(c.id);
            continue;
        }
        (c.cls == PolyClass::Medium ? medium : hard).push_back(c.id);
        if (c.group) groups.insert({c.group->kind == GroupKind::NegInfinity ? 0 : 1, c.group->j});
    }
    std::vector<PackingSolution> sols;
    sols.push_back(solve_easy(small, easy, cfg.eps));
    sols.push_back(solve_medium(small, medium, cfg.eps));
    sols.push_back(solve_hard_enum(small, hard, cfg));
    std::size_t win = 0;
    for (std::size_t k = 1; k < sols.size(); ++k) {
        if (sols[k].total_weight > sols[win].total_weight) win = k;
    }
    std::vector<SolutionEntry> entries;
    for (const auto& e : sols[win].entries) {
        Placement p = e.placement;
        p.dx *= factor;
        p.dy *= factor;
        entries.push_back({e.id, p});
    }
    if (report) {
        report->group_count = static_cast<int>(groups.size());
        report->group_bound = ra_group_bound(delta);
        report->winner = sols[win].producer;
    }
    PackingSolution sol = make_solution(inst, std::move(entries), Producer::RA);
    sol.dispatch = "ra=" + std::string(to_string(sols[win].producer));
    return sol;
}

}  // namespace polypack
