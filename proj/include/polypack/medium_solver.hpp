#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "polypack/model.hpp"

namespace polypack {

enum class ContainerSide { R, RPrime };

// A 45-degree rectangle hugging the top-right (R) or bottom-left (RPrime)
// corner. Local frame: x along the long side, y inward along the short side.
struct Container {
    int j = 0;
    ContainerSide which = ContainerSide::R;
    std::array<Point, 4> corners;  // counterclockwise
    Point origin;
    Point long_axis;
    Point short_axis;
    double length = 0.0;
    double depth = 0.0;

    Point to_global(Point local) const { return origin + local.x * long_axis + local.y * short_axis; }
};

Container make_container(double n, int j, ContainerSide which);

// Both containers for every j from j_lo (default: the hard-group lower
// bound) up to the largest j whose container still has positive length.
std::vector<Container> build_containers(std::int64_t n, std::optional<int> j_lo = std::nullopt);

// Smallest value cap / (1 + eps)^m that is >= h.
double round_height(double h, double cap, double eps);

struct MediumStack {
    int j = 0;
    ContainerSide which = ContainerSide::R;
    std::vector<int> ids;  // bottom to top
    double rounded_sum = 0.0;
    double true_sum = 0.0;
    double capacity = 0.0;
};

struct MediumReport {
    std::vector<MediumStack> stacks;
};

PackingSolution solve_medium(const Instance& inst, const std::vector<int>& ids, double eps,
                             MediumReport* report = nullptr);

}  // namespace polypack
