#include "polypack/medium_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "polypack/classify.hpp"
#include "polypack/knapsack1d.hpp"

namespace polypack {

Container make_container(double n, int j, ContainerSide which) {
    const double r2 = std::numbers::sqrt2;
    const double a = std::ldexp(1.0, j - 1) / r2;
    const double q = std::ldexp(1.0, j - 3) / r2;
    Point A{a, n};
    Point B{n, a};
    Point C{n - q, 3 * q};
    Point D{3 * q, n - q};
    Container c;
    c.j = j;
    c.which = which;
    c.length = r2 * n - std::ldexp(1.0, j - 1);
    c.depth = std::ldexp(1.0, j - 3);
    c.long_axis = {-1.0 / r2, 1.0 / r2};
    c.short_axis = {-1.0 / r2, -1.0 / r2};
    c.origin = B;
    c.corners = {A, D, C, B};
    if (which == ContainerSide::RPrime) {
        for (auto& p : c.corners) p = {n - p.x, n - p.y};
        c.origin = {n - B.x, n - B.y};
        c.long_axis = -1.0 * c.long_axis;
        c.short_axis = -1.0 * c.short_axis;
    }
    return c;
}

std::vector<Container> build_containers(std::int64_t n, std::optional<int> j_lo) {
    const double side = static_cast<double>(n);
    const int lo = j_lo.value_or(hard_group_range(n).first);
    std::vector<Container> out;
    for (int j = lo; std::ldexp(1.0, j - 1) < std::numbers::sqrt2 * side; ++j) {
        out.push_back(make_container(side, j, ContainerSide::R));
        out.push_back(make_container(side, j, ContainerSide::RPrime));
    }
    return out;
}

double round_height(double h, double cap, double eps) {
    if (h >= cap) return h == cap ? cap : h;
    const double base = std::log1p(eps);
    int m = static_cast<int>(std::floor(std::log(cap / h) / base));
    double r = cap * std::exp(-m * base);
    while (r < h && m > 0) r = cap * std::exp(-(--m) * base);
    return std::max(r, h);
}

PackingSolution solve_medium(const Instance& inst, const std::vector<int>& ids, double eps, MediumReport* report) {
    const double n = inst.side();
    std::map<int, std::vector<int>> groups;
    for (int id : ids) {
        Classification c = classify_polygon(inst.at(id).shape, n, id);
        if (c.group && c.group->kind == GroupKind::Finite) groups[c.group->j].push_back(id);
    }
    MediumReport rep;
    std::vector<SolutionEntry> entries;
    for (const auto& [j, members] : groups) {
        const double cap = std::ldexp(1.0, j - 3);
        std::vector<KnapsackItem> items;
        for (int id : members) {
            double h = inst.at(id).shape.height();
            if (h <= cap) items.push_back({round_height(h, cap, eps), inst.at(id).weight, id});
        }
        if (items.empty()) continue;
        auto [first, second] = two_knapsack(items, cap, eps);
        for (auto side : {ContainerSide::R, ContainerSide::RPrime}) {
            const auto& chosen = side == ContainerSide::R ? first : second;
            if (chosen.empty()) continue;
            Container box = make_container(n, j, side);
            MediumStack st{j, side, {}, 0.0, 0.0, cap};
            double y = 0.0;
            for (int id : chosen) {
                const auto& shape = inst.at(id).shape;
                // Canonical vertex 0 maps to its spot in the container frame.
                Point v0 = shape[0];
                Point g0 = box.to_global({v0.x, v0.y + y});
                Placement p;
                p.cos_a = box.long_axis.x;
                p.sin_a = -box.long_axis.y;
                p.dx = g0.x - v0.x;
                p.dy = g0.y - v0.y;
                entries.push_back({id, p});
                st.ids.push_back(id);
                st.true_sum += shape.height();
                for (const auto& it : items) {
                    if (it.id == id) st.rounded_sum += it.size;
                }
                y += shape.height();
            }
            rep.stacks.push_back(std::move(st));
        }
    }
    if (report) *report = std::move(rep);
    return make_solution(inst, std::move(entries), Producer::Medium);
}

}  // namespace polypack
