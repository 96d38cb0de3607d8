#pragma once

#include <span>
#include <vector>

namespace polypack {

struct RectItem {
    double w = 0.0;
    double h = 0.0;
    int id = 0;
};

struct RectPlacement {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
};

enum class PackStatus {
    Packed,
    PreconditionFailed,
    // The area condition held but the recursive search ran out of options.
    SearchExhausted,
};

struct PackResult {
    PackStatus status = PackStatus::PreconditionFailed;
    std::vector<RectPlacement> placements;
};

// 2*sum(area) <= W*H - (2*w_max - W)^+ * (2*h_max - H)^+, with every rect fitting.
bool steinberg_condition(std::span<const RectItem> rects, double W, double H);

// Throws RectTooBig when a rect does not fit into W x H on its own.
PackResult steinberg_pack(std::span<const RectItem> rects, double W, double H);

struct BestEffortResult {
    std::vector<RectPlacement> placements;
    double kept_weight = 0.0;
};

// weights[i] belongs to rects[i].
BestEffortResult pack_boxes_best_effort(std::span<const RectItem> rects, double W, double H,
                                        std::span<const double> weights);

// Pairwise interior-disjoint and inside [0,W]x[0,H] up to tol.
bool rect_packing_valid(std::span<const RectItem> rects, std::span<const RectPlacement> placed, double W,
                        double H, double tol);

}  // namespace polypack
