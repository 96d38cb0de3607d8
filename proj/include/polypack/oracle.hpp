#pragma once

#include <cstdint>

#include "polypack/model.hpp"

namespace polypack {

struct OracleReport {
    std::int64_t nodes = 0;
    std::size_t subsets_checked = 0;
    bool exhaustive = true;
};

// Resolution-bounded reference search: a lower bound on the optimum.
// Angles step pi/fine_grid (plus fit and touching angles); the first polygon
// of a subset sits at corners, edge midpoints or the centre of its free box,
// later ones at exact free positions against those already placed.
// Throws TooLarge past max_n polygons.
PackingSolution brute_force_opt(const Instance& inst, std::size_t max_n = 3, int fine_grid = 256,
                                OracleReport* report = nullptr, std::int64_t node_limit = 20'000'000);

}  // namespace polypack
