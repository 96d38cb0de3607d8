#pragma once

#include <cstdint>
#include <vector>

#include "polypack/model.hpp"

namespace polypack {

struct PlacementSet {
    int id = 0;
    std::vector<Placement> placements;
};

// Axis extents of the polygon rotated clockwise about its vertex 0, relative
// to the fixed vertex 0 position.
struct Extent {
    double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
    double width() const { return maxx - minx; }
    double height() const { return maxy - miny; }
};

Extent rotated_extent(const ConvexPolygon& shape, double cos_a, double sin_a);

// Angles in [0, 2*pi) at which the polygon just fits a side x side square
// (feasible-interval endpoints and local minimizers of the larger extent).
std::vector<double> fit_angles(const ConvexPolygon& shape, double side, double tol);

// Grid of angles (step pi/(c*n)) and vertex-0 anchor positions (step
// side/(c*n)) plus the fit angles, each with the corner and center
// translations of its feasible box. Throws EmptyPlacementSet when nothing
// fits. side = ra_factor * n_side.
PlacementSet placement_set(const ConvexPolygon& shape, int id, double side, int n_polys, const SolverConfig& cfg);

struct HardEnumReport {
    std::int64_t nodes = 0;
    std::size_t subsets_checked = 0;
    bool exhaustive = true;
};

PackingSolution solve_hard_enum(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                HardEnumReport* report = nullptr);

// Upper bound on the number of non-empty groups after shrinking by 1/(1+delta).
int ra_group_bound(double delta);

struct RaReport {
    int group_count = 0;  // distinct groups among non-easy shrunk polygons
    int group_bound = 0;
    Producer winner = Producer::None;
};

// Shrinks every polygon by 1/(1+delta), solves the shrunk instance and maps
// the result back; feasible at ra_factor 1+delta.
PackingSolution solve_hard_ra(const Instance& inst, double delta, const SolverConfig& cfg,
                              RaReport* report = nullptr);

}  // namespace polypack
