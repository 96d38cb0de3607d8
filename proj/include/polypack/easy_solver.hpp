#pragma once

#include <vector>

#include "polypack/model.hpp"

namespace polypack {

struct EasyReport {
    std::vector<int> selection;            // area-knapsack choice
    double selection_weight = 0.0;
    std::vector<std::vector<int>> parts;   // singletons, then area runs
    std::size_t kept_part = 0;             // heaviest part
    double kept_weight = 0.0;
};

// Packs a subset of the easy polygons `ids` of `inst` into the knapsack.
PackingSolution solve_easy(const Instance& inst, const std::vector<int>& ids, double eps,
                           EasyReport* report = nullptr);

// Three largest-area singletons followed by greedy runs of total area at
// most limit, in decreasing area order.
std::vector<std::vector<int>> split_by_area(const Instance& inst, std::vector<int> ids, double limit);

}  // namespace polypack
