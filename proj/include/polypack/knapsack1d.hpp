#pragma once

#include <span>
#include <utility>
#include <vector>

namespace polypack {

struct KnapsackItem {
    double size = 0.0;
    double profit = 0.0;
    int id = 0;
};

// Sizes are rounded up to multiples of capacity/resolution, then solved
// exactly by a DP over capacity units. Returns selected ids in input order.
std::vector<int> knapsack_exact(std::span<const KnapsackItem> items, double capacity, int resolution);

// Profit-scaling FPTAS: feasible, profit >= (1 - eps) * optimum.
std::vector<int> knapsack_fptas(std::span<const KnapsackItem> items, double capacity, double eps);

// Two identical knapsacks of the given capacity; the sets are disjoint.
std::pair<std::vector<int>, std::vector<int>> two_knapsack(std::span<const KnapsackItem> items,
                                                           double capacity, double eps);

double total_profit(std::span<const KnapsackItem> items, const std::vector<int>& ids);
double total_size(std::span<const KnapsackItem> items, const std::vector<int>& ids);

}  // namespace polypack
