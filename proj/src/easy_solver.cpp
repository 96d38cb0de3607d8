#include "polypack/easy_solver.hpp"

#include <algorithm>
#include <cmath>

#include "polypack/knapsack1d.hpp"
#include "polypack/steinberg.hpp"

namespace polypack {

namespace {

double weight_of(const Instance& inst, const std::vector<int>& ids) {
    double w = 0.0;
    for (int id : ids) w += inst.at(id).weight;
    return w;
}

double area_of(const Instance& inst, const std::vector<int>& ids) {
    double a = 0.0;
    for (int id : ids) a += polygon_area(inst.at(id).shape);
    return a;
}

// Boxes inflated to the quantum, packed by the rectangle packer; each
// polygon sits at its box's lower-left corner.
std::vector<SolutionEntry> pack_part(const Instance& inst, const std::vector<int>& part) {
    const double n = inst.side();
    std::vector<SolutionEntry> out;
    if (part.size() == 1) {
        out.push_back({part[0], Placement{}});
        return out;
    }
    const double q = std::ldexp(n, -30);
    std::vector<RectItem> rects;
    std::vector<double> weights;
    for (int id : part) {
        const Rect& b = inst.at(id).shape.bbox();
        rects.push_back({std::min(n, std::ceil(b.w / q) * q), std::min(n, std::ceil(b.h / q) * q), id});
        weights.push_back(inst.at(id).weight);
    }
    BestEffortResult r = pack_boxes_best_effort(rects, n, n, weights);
    for (const auto& p : r.placements) out.push_back({p.id, Placement{p.x, p.y, 1.0, 0.0}});
    return out;
}

}  // namespace

std::vector<std::vector<int>> split_by_area(const Instance& inst, std::vector<int> ids, double limit) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return polygon_area(inst.at(a).shape) > polygon_area(inst.at(b).shape);
    });
    std::vector<std::vector<int>> parts;
    std::size_t k = 0;
    for (; k < ids.size() && k < 3; ++k) parts.push_back({ids[k]});
    std::vector<int> run;
    double run_area = 0.0;
    for (; k < ids.size(); ++k) {
        double a = polygon_area(inst.at(ids[k]).shape);
        if (!run.empty() && run_area + a > limit) {
            parts.push_back(run);
            run.clear();
            run_area = 0.0;
        }
        run.push_back(ids[k]);
        run_area += a;
    }
    if (!run.empty()) parts.push_back(run);
    return parts;
}

PackingSolution solve_easy(const Instance& inst, const std::vector<int>& ids, double eps, EasyReport* report) {
    EasyReport rep;
    const double n = inst.side();
    std::vector<KnapsackItem> items;
    for (int id : ids) items.push_back({polygon_area(inst.at(id).shape), inst.at(id).weight, id});
    rep.selection = knapsack_fptas(items, n * n, eps);
    rep.selection_weight = weight_of(inst, rep.selection);
    rep.parts = split_by_area(inst, rep.selection, n * n / 4.0);
    for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        double w = weight_of(inst, rep.parts[p]);
        if (w > rep.kept_weight) {
            rep.kept_weight = w;
            rep.kept_part = p;
        }
    }

    // The heaviest part comes first; the other parts and the whole selection
    // (when it is itself small enough) are packed too and the best realized
    // packing wins.
    std::vector<std::vector<int>> cands;
    if (!rep.parts.empty()) cands.push_back(rep.parts[rep.kept_part]);
    if (rep.selection.size() > 1 && area_of(inst, rep.selection) <= n * n / 4.0) cands.push_back(rep.selection);
    for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        if (p != rep.kept_part) cands.push_back(rep.parts[p]);
    }
    PackingSolution best = make_solution(inst, {}, Producer::Easy);
    for (const auto& part : cands) {
        if (weight_of(inst, part) <= best.total_weight) continue;
        PackingSolution s = make_solution(inst, pack_part(inst, part), Producer::Easy);
        if (s.total_weight > best.total_weight) best = std::move(s);
    }
    if (report) *report = std::move(rep);
    return best;
}

}  // namespace polypack
