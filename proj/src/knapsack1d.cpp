#include "polypack/knapsack1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

#include "polypack/errors.hpp"

namespace polypack {

namespace {

constexpr std::size_t kMaxFrontier = 40000;

struct TwoState {
    double l1 = 0.0;
    double l2 = 0.0;
    double p = 0.0;
    int parent = -1;
    std::uint8_t action = 0;  // 0 skip, 1 first slot, 2 second slot (parent labels)
    bool swapped = false;     // slot labels reversed relative to the parent
};

// Removes states beaten on both loads and profit by another state.
void prune_dominated(std::vector<TwoState>& states) {
    std::sort(states.begin(), states.end(), [](const TwoState& a, const TwoState& b) {
        if (a.p != b.p) return a.p > b.p;
        if (a.l1 != b.l1) return a.l1 < b.l1;
        return a.l2 < b.l2;
    });
    std::vector<double> keys;
    keys.reserve(states.size());
    for (const auto& s : states) keys.push_back(s.l1);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    // Fenwick tree of prefix minima of l2 over l1 rank.
    std::vector<double> fen(keys.size() + 1, std::numeric_limits<double>::infinity());
    std::vector<TwoState> kept;
    for (const auto& s : states) {
        std::size_t r = std::lower_bound(keys.begin(), keys.end(), s.l1) - keys.begin() + 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = r; i > 0; i -= i & (~i + 1)) best = std::min(best, fen[i]);
        if (best <= s.l2) continue;
        kept.push_back(s);
        for (std::size_t i = r; i < fen.size(); i += i & (~i + 1)) fen[i] = std::min(fen[i], s.l2);
    }
    states = std::move(kept);
}

// Keeps the most profitable state per load cell of side q.
void merge_buckets(std::vector<TwoState>& states, double q) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> cell;
    std::vector<TwoState> kept;
    for (const auto& s : states) {
        auto key = std::make_pair(static_cast<std::int64_t>(s.l1 / q), static_cast<std::int64_t>(s.l2 / q));
        auto [it, fresh] = cell.try_emplace(key, kept.size());
        if (fresh) {
            kept.push_back(s);
        } else {
            TwoState& k = kept[it->second];
            if (s.p > k.p || (s.p == k.p && s.l1 + s.l2 < k.l1 + k.l2)) k = s;
        }
    }
    states = std::move(kept);
}

}  // namespace

double total_profit(std::span<const KnapsackItem> items, const std::vector<int>& ids) {
    double p = 0.0;
    for (const auto& it : items) {
        if (std::find(ids.begin(), ids.end(), it.id) != ids.end()) p += it.profit;
    }
    return p;
}

double total_size(std::span<const KnapsackItem> items, const std::vector<int>& ids) {
    double s = 0.0;
    for (const auto& it : items) {
        if (std::find(ids.begin(), ids.end(), it.id) != ids.end()) s += it.size;
    }
    return s;
}

std::vector<int> knapsack_exact(std::span<const KnapsackItem> items, double capacity, int resolution) {
    if (capacity < 0) throw CapacityNegative();
    if (resolution < 1) throw Error("resolution must be at least 1");
    std::vector<int> out;
    if (capacity == 0.0) {
        for (const auto& it : items) {
            if (it.size <= 0.0) out.push_back(it.id);
        }
        return out;
    }
    const double unit = capacity / resolution;
    const std::size_t cap = static_cast<std::size_t>(resolution);
    std::vector<std::size_t> units(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        double u = std::ceil(items[i].size / unit - 1e-9);
        units[i] = u > static_cast<double>(cap) ? cap + 1 : static_cast<std::size_t>(std::max(0.0, u));
    }
    std::vector<double> best(cap + 1, 0.0);
    std::vector<std::vector<bool>> take(items.size(), std::vector<bool>(cap + 1, false));
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (units[i] > cap) continue;
        for (std::size_t c = cap + 1; c-- > units[i];) {
            double cand = best[c - units[i]] + items[i].profit;
            if (cand > best[c]) {
                best[c] = cand;
                take[i][c] = true;
            }
        }
    }
    std::size_t c = cap;
    for (std::size_t i = items.size(); i-- > 0;) {
        if (take[i][c]) {
            out.push_back(items[i].id);
            c -= units[i];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> knapsack_fptas(std::span<const KnapsackItem> items, double capacity, double eps) {
    if (capacity < 0) throw CapacityNegative();
    if (!(eps > 0.0 && eps < 1.0)) throw Error("eps must lie in (0, 1)");
    std::vector<std::size_t> cand;
    double all = 0.0;
    double pmax = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].size <= capacity) {
            cand.push_back(i);
            all += items[i].size;
            pmax = std::max(pmax, items[i].profit);
        }
    }
    std::vector<int> out;
    if (cand.empty()) return out;
    if (all <= capacity) {
        for (auto i : cand) out.push_back(items[i].id);
        return out;
    }
    const double k = eps * pmax / static_cast<double>(cand.size());
    std::vector<std::size_t> scaled(cand.size());
    std::size_t total = 0;
    for (std::size_t m = 0; m < cand.size(); ++m) {
        scaled[m] = static_cast<std::size_t>(std::floor(items[cand[m]].profit / k));
        total += scaled[m];
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> minsize(total + 1, inf);
    minsize[0] = 0.0;
    std::vector<std::vector<bool>> take(cand.size(), std::vector<bool>(total + 1, false));
    std::size_t reach = 0;
    for (std::size_t m = 0; m < cand.size(); ++m) {
        const double s = items[cand[m]].size;
        const std::size_t q = scaled[m];
        for (std::size_t p = reach + q + 1; p-- > q;) {
            double c = minsize[p - q] + s;
            if (c < minsize[p] && c <= capacity) {
                minsize[p] = c;
                take[m][p] = true;
            }
        }
        reach += q;
    }
    std::size_t p = total;
    while (p > 0 && minsize[p] > capacity) --p;
    for (std::size_t m = cand.size(); m-- > 0;) {
        if (take[m][p]) {
            out.push_back(items[cand[m]].id);
            p -= scaled[m];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::pair<std::vector<int>, std::vector<int>> two_knapsack(std::span<const KnapsackItem> items,
                                                           double capacity, double eps) {
    if (capacity < 0) throw CapacityNegative();
    if (!(eps > 0.0 && eps < 1.0)) throw Error("eps must lie in (0, 1)");
    const std::size_t n = items.size();
    std::vector<std::vector<TwoState>> stages(n + 1);
    stages[0].push_back({});
    double q = eps * capacity / (2.0 * std::max<std::size_t>(n, 1));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = stages[i];
        auto& next = stages[i + 1];
        const double s = items[i].size;
        const double p = items[i].profit;
        for (std::size_t k = 0; k < prev.size(); ++k) {
            const TwoState& st = prev[k];
            next.push_back({st.l1, st.l2, st.p, static_cast<int>(k), 0, false});
            if (st.l1 + s <= capacity) next.push_back({st.l1 + s, st.l2, st.p + p, static_cast<int>(k), 1, false});
            if (st.l2 + s <= capacity && st.l1 != st.l2) {
                next.push_back({st.l1, st.l2 + s, st.p + p, static_cast<int>(k), 2, false});
            }
        }
        // The knapsacks are identical, so keep the fuller one first.
        for (auto& st : next) {
            if (st.l1 < st.l2) {
                std::swap(st.l1, st.l2);
                st.swapped = true;
            }
        }
        prune_dominated(next);
        while (next.size() > kMaxFrontier && q > 0.0) {
            merge_buckets(next, q);
            prune_dominated(next);
            q *= 2.0;
        }
    }
    const auto& last = stages[n];
    std::size_t best = 0;
    for (std::size_t k = 1; k < last.size(); ++k) {
        if (last[k].p > last[best].p) best = k;
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    bool flip = false;  // current state's first slot maps to output set 2
    int idx = static_cast<int>(best);
    for (std::size_t i = n; i > 0; --i) {
        const TwoState& st = stages[i][idx];
        bool parent_flip = flip != st.swapped;
        if (st.action != 0) {
            bool to_second = (st.action == 2) != parent_flip;
            (to_second ? out.second : out.first).push_back(items[i - 1].id);
        }
        flip = parent_flip;
        idx = st.parent;
    }
    std::reverse(out.first.begin(), out.first.end());
    std::reverse(out.second.begin(), out.second.end());
    return out;
}

}  // namespace polypack
