#include "polypack/steinberg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "polypack/errors.hpp"

namespace polypack {

namespace {

constexpr long kNodeBudget = 200000;

struct Box {
    double x, y, w, h;
};

double pos(double v) { return v > 0.0 ? v : 0.0; }

class Packer {
public:
    Packer(std::span<const RectItem> rects, double W, double H)
        : items_(rects.begin(), rects.end()), eps_(1e-12 * std::max(W, H)) {}

    bool run(double W, double H) {
        std::vector<int> all(items_.size());
        std::iota(all.begin(), all.end(), 0);
        return pack(all, {0.0, 0.0, W, H});
    }

    std::vector<RectPlacement> placements() const {
        std::vector<RectPlacement> out;
        for (const auto& [i, x, y] : placed_) out.push_back({items_[i].id, x, y});
        return out;
    }

private:
    struct Placed {
        int index;
        double x, y;
    };

    std::vector<RectItem> items_;
    double eps_;
    long nodes_ = 0;
    std::vector<Placed> placed_;

    double area(int i) const { return items_[i].w * items_[i].h; }

    bool condition(const std::vector<int>& idx, double W, double H) const {
        double a = 0, b = 0, s = 0;
        for (int i : idx) {
            a = std::max(a, items_[i].w);
            b = std::max(b, items_[i].h);
            s += area(i);
        }
        if (a > W + eps_ || b > H + eps_) return false;
        return 2.0 * s <= W * H - pos(2 * a - W) * pos(2 * b - H) + eps_ * (W + H);
    }

    // Single item, one column, one row, or height-sorted shelves.
    bool simple(const std::vector<int>& idx, Box b, bool dry) {
        if (idx.empty()) return true;
        double sw = 0, sh = 0, a = 0, c = 0;
        for (int i : idx) {
            sw += items_[i].w;
            sh += items_[i].h;
            a = std::max(a, items_[i].w);
            c = std::max(c, items_[i].h);
        }
        if (a > b.w + eps_ || c > b.h + eps_) return false;
        if (sh <= b.h + eps_) {
            if (!dry) {
                double y = b.y;
                for (int i : idx) {
                    placed_.push_back({i, b.x, y});
                    y += items_[i].h;
                }
            }
            return true;
        }
        if (sw <= b.w + eps_) {
            if (!dry) {
                double x = b.x;
                for (int i : idx) {
                    placed_.push_back({i, x, b.y});
                    x += items_[i].w;
                }
            }
            return true;
        }
        return shelves(idx, b, dry, false) || shelves(idx, b, dry, true);
    }

    // Next-fit decreasing shelves; `columns` runs the transposed variant.
    bool shelves(std::vector<int> idx, Box b, bool dry, bool columns) {
        auto major = [&](int i) { return columns ? items_[i].w : items_[i].h; };
        auto minor = [&](int i) { return columns ? items_[i].h : items_[i].w; };
        const double span = columns ? b.h : b.w;
        const double limit = columns ? b.w : b.h;
        std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return major(p) > major(q); });
        std::vector<std::pair<double, double>> at(idx.size());
        double base = 0, level = 0, run = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            int i = idx[k];
            if (k == 0) {
                level = major(i);
            } else if (run + minor(i) > span + eps_) {
                base += level;
                level = major(i);
                run = 0;
            }
            at[k] = {run, base};
            run += minor(i);
        }
        if (base + level > limit + eps_) return false;
        if (!dry) {
            for (std::size_t k = 0; k < idx.size(); ++k) {
                auto [u, v] = at[k];
                if (columns) std::swap(u, v);
                placed_.push_back({idx[k], b.x + u, b.y + v});
            }
        }
        return true;
    }

    bool viable(const std::vector<int>& idx, double W, double H) {
        if (idx.empty()) return true;
        if (W < -eps_ || H < -eps_) return false;
        return condition(idx, W, H) || simple(idx, {0, 0, W, H}, true);
    }

    // Smallest width (along the cut axis) that keeps a child viable.
    double min_extent(const std::vector<int>& idx, double other, bool vertical) const {
        double a = 0, b = 0, s = 0, sum_major = 0, sum_minor = 0;
        for (int i : idx) {
            double w = vertical ? items_[i].w : items_[i].h;
            double h = vertical ? items_[i].h : items_[i].w;
            a = std::max(a, w);
            b = std::max(b, h);
            s += area(i);
            sum_major += w;
            sum_minor += h;
        }
        const double inf = std::numeric_limits<double>::infinity();
        if (b > other + eps_) return inf;
        double best = inf;
        if (sum_minor <= other + eps_) best = a;
        if (idx.size() > 1 || best == inf) best = std::min(best, sum_major);
        double c;
        if (2 * b <= other) {
            c = 2 * s / other;
        } else {
            c = (2 * s + 2 * a * (2 * b - other)) / (2 * b);
            if (c > 2 * a) c = 2 * s / other;
        }
        best = std::min(best, std::max(a, c));
        return best;
    }

    bool pack(const std::vector<int>& idx, Box b) {
        if (idx.empty()) return true;
        if (++nodes_ > kNodeBudget) return false;
        if (simple(idx, b, false)) return true;
        if (!condition(idx, b.w, b.h)) return false;
        if (big_corner(idx, b)) return true;
        return guillotine(idx, b);
    }

    bool try_children(const std::vector<int>& l1, Box b1, const std::vector<int>& l2, Box b2) {
        if (!viable(l1, b1.w, b1.h) || !viable(l2, b2.w, b2.h)) return false;
        const std::size_t mark = placed_.size();
        if (pack(l1, b1) && pack(l2, b2)) return true;
        placed_.resize(mark);
        return false;
    }

    // An item wider and taller than half the box sits in the corner; the
    // remaining L-shaped region is cut into two rectangles.
    bool big_corner(const std::vector<int>& idx, Box b) {
        int big = -1;
        for (int i : idx) {
            if (items_[i].w > b.w / 2 && items_[i].h > b.h / 2) {
                if (big < 0 || area(i) > area(big)) big = i;
            }
        }
        if (big < 0) return false;
        const double w1 = items_[big].w, h1 = items_[big].h;
        std::vector<int> rest;
        for (int i : idx) {
            if (i != big) rest.push_back(i);
        }
        std::sort(rest.begin(), rest.end(), [&](int p, int q) { return area(p) > area(q); });
        const Box layouts[2][2] = {
            {{b.x + w1, b.y, b.w - w1, b.h}, {b.x, b.y + h1, w1, b.h - h1}},
            {{b.x, b.y + h1, b.w, b.h - h1}, {b.x + w1, b.y, b.w - w1, h1}},
        };
        const std::size_t mark = placed_.size();
        placed_.push_back({big, b.x, b.y});
        for (const auto& lay : layouts) {
            const Box& ba = lay[0];
            const Box& bb = lay[1];
            auto fits = [&](int i, const Box& r) {
                return items_[i].w <= r.w + eps_ && items_[i].h <= r.h + eps_;
            };
            for (int strategy = 0; strategy < 3; ++strategy) {
                std::vector<int> la, lb;
                bool ok = true;
                for (int i : rest) {
                    bool fa = fits(i, ba), fb = fits(i, bb);
                    if (!fa && !fb) {
                        ok = false;
                        break;
                    }
                    if (fa && !fb) {
                        la.push_back(i);
                    } else if (fb && !fa) {
                        lb.push_back(i);
                    }
                }
                if (!ok) break;
                for (int i : rest) {
                    if (!(fits(i, ba) && fits(i, bb))) continue;
                    auto with = [&](std::vector<int> l) {
                        l.push_back(i);
                        return l;
                    };
                    bool to_a;
                    if (strategy == 0) {
                        to_a = viable(with(la), ba.w, ba.h);
                    } else if (strategy == 1) {
                        to_a = !viable(with(lb), bb.w, bb.h);
                    } else {
                        double sa = 0, sb = 0;
                        for (int m : la) sa += area(m);
                        for (int m : lb) sb += area(m);
                        to_a = (sa + area(i)) / std::max(ba.w * ba.h, eps_) <=
                               (sb + area(i)) / std::max(bb.w * bb.h, eps_);
                    }
                    (to_a ? la : lb).push_back(i);
                }
                if (try_children(la, ba, lb, bb)) return true;
            }
        }
        placed_.resize(mark);
        return false;
    }

    bool guillotine(const std::vector<int>& idx, Box b) {
        const std::size_t n = idx.size();
        using Key = std::function<double(int)>;
        const Key keys[] = {
            [&](int i) { return items_[i].w; },
            [&](int i) { return items_[i].h; },
            [&](int i) { return area(i); },
            [&](int i) { return items_[i].w / items_[i].h; },
        };
        for (bool vertical : {true, false}) {
            const double along = vertical ? b.w : b.h;
            const double other = vertical ? b.h : b.w;
            for (const auto& key : keys) {
                std::vector<int> order = idx;
                std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return key(p) > key(q); });
                for (std::size_t k = 1; k < n; ++k) {
                    std::vector<int> l1(order.begin(), order.begin() + k);
                    std::vector<int> l2(order.begin() + k, order.end());
                    double s1 = min_extent(l1, other, vertical);
                    double s2 = min_extent(l2, other, vertical);
                    for (double cut : {s1, along - s2}) {
                        if (!(cut >= -eps_ && cut <= along + eps_)) continue;
                        cut = std::clamp(cut, 0.0, along);
                        Box b1 = vertical ? Box{b.x, b.y, cut, b.h} : Box{b.x, b.y, b.w, cut};
                        Box b2 = vertical ? Box{b.x + cut, b.y, b.w - cut, b.h}
                                          : Box{b.x, b.y + cut, b.w, b.h - cut};
                        if (try_children(l1, b1, l2, b2)) return true;
                        if (nodes_ > kNodeBudget) return false;
                    }
                }
            }
        }
        return false;
    }
};

// Rounds coordinates to a fixed quantum when the result stays valid.
void snap(std::span<const RectItem> rects, std::vector<RectPlacement>& placed, double W, double H) {
    const double q = 1e-12 * W;
    std::vector<RectPlacement> s = placed;
    for (auto& p : s) {
        p.x = std::round(p.x / q) * q;
        p.y = std::round(p.y / q) * q;
    }
    if (rect_packing_valid(rects, s, W, H, 1e-9 * std::max(W, H))) placed = std::move(s);
}

}  // namespace

bool steinberg_condition(std::span<const RectItem> rects, double W, double H) {
    double a = 0, b = 0, s = 0;
    for (const auto& r : rects) {
        a = std::max(a, r.w);
        b = std::max(b, r.h);
        s += r.w * r.h;
    }
    const double e = 1e-12 * std::max(W, H);
    if (a > W + e || b > H + e) return false;
    return 2.0 * s <= W * H - pos(2 * a - W) * pos(2 * b - H) + e * (W + H);
}

PackResult steinberg_pack(std::span<const RectItem> rects, double W, double H) {
    const double e = 1e-12 * std::max(W, H);
    for (const auto& r : rects) {
        if (r.w > W + e || r.h > H + e) throw RectTooBig(r.id);
    }
    PackResult res;
    if (!steinberg_condition(rects, W, H)) {
        res.status = PackStatus::PreconditionFailed;
        return res;
    }
    Packer packer(rects, W, H);
    if (!packer.run(W, H)) {
        res.status = PackStatus::SearchExhausted;
        return res;
    }
    res.placements = packer.placements();
    snap(rects, res.placements, W, H);
    res.status = PackStatus::Packed;
    return res;
}

BestEffortResult pack_boxes_best_effort(std::span<const RectItem> rects, double W, double H,
                                        std::span<const double> weights) {
    BestEffortResult out;
    if (rects.empty()) return out;
    PackResult full = steinberg_pack(rects, W, H);
    if (full.status == PackStatus::Packed) {
        out.placements = std::move(full.placements);
        for (double w : weights) out.kept_weight += w;
        return out;
    }
    // The area condition is only sufficient; shelves often still take everything.
    Packer direct(rects, W, H);
    if (direct.run(W, H)) {
        auto placed = direct.placements();
        snap(rects, placed, W, H);
        if (rect_packing_valid(rects, placed, W, H, 1e-9 * std::max(W, H))) {
            out.placements = std::move(placed);
            for (double w : weights) out.kept_weight += w;
            return out;
        }
    }
    std::vector<std::size_t> order(rects.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return rects[p].w * rects[p].h > rects[q].w * rects[q].h;
    });
    std::vector<RectItem> part[2];
    double weight[2] = {0.0, 0.0};
    bool split_ok = true;
    for (std::size_t i : order) {
        bool placed = false;
        for (int side = 0; side < 2 && !placed; ++side) {
            part[side].push_back(rects[i]);
            if (steinberg_condition(part[side], W, H)) {
                weight[side] += weights[i];
                placed = true;
            } else {
                part[side].pop_back();
            }
        }
        if (!placed) split_ok = false;
    }
    // Candidate parts: the two halves of the split and the heaviest single rect.
    std::vector<std::pair<double, std::vector<RectItem>>> cands;
    if (split_ok) {
        cands.emplace_back(weight[0], part[0]);
        cands.emplace_back(weight[1], part[1]);
    } else {
        for (int side = 0; side < 2; ++side) cands.emplace_back(weight[side], part[side]);
    }
    std::size_t heavy = 0;
    for (std::size_t i = 1; i < rects.size(); ++i) {
        if (weights[i] > weights[heavy]) heavy = i;
    }
    cands.emplace_back(weights[heavy], std::vector<RectItem>{rects[heavy]});
    std::stable_sort(cands.begin(), cands.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
    for (auto& [w, items] : cands) {
        PackResult r = steinberg_pack(items, W, H);
        if (r.status == PackStatus::Packed) {
            out.placements = std::move(r.placements);
            out.kept_weight = w;
            return out;
        }
    }
    return out;
}

bool rect_packing_valid(std::span<const RectItem> rects, std::span<const RectPlacement> placed, double W,
                        double H, double tol) {
    auto find = [&](int id) -> const RectItem* {
        for (const auto& r : rects) {
            if (r.id == id) return &r;
        }
        return nullptr;
    };
    std::vector<std::pair<const RectItem*, RectPlacement>> all;
    for (const auto& p : placed) {
        const RectItem* r = find(p.id);
        if (!r) return false;
        if (p.x < -tol || p.y < -tol || p.x + r->w > W + tol || p.y + r->h > H + tol) return false;
        all.emplace_back(r, p);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& [a, pa] = all[i];
            const auto& [b, pb] = all[j];
            double ox = std::min(pa.x + a->w, pb.x + b->w) - std::max(pa.x, pb.x);
            double oy = std::min(pa.y + a->h, pb.y + b->h) - std::max(pa.y, pb.y);
            if (ox > tol && oy > tol) return false;
        }
    }
    return true;
}

}  // namespace polypack
