#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polypack/classify.hpp"
#include "polypack/model.hpp"

namespace polypack {

struct TriangleMeta {
    int id = 0;
    std::size_t v_star = 0;                // vertex shared by the two longest edges
    std::pair<std::size_t, std::size_t> long_edges;  // edge k joins vertex k and k+1
    Group group;
};

// Throws DegenerateInput unless the shape has exactly three vertices.
TriangleMeta triangle_meta(const ConvexPolygon& shape, int id, double n);

// TopLeft anchors the shared vertex at (0, N) and fans rays towards points
// on the right half of the horizontal midline; BottomRight is its mirror
// image in the main diagonal, anchored at (N, 0).
enum class WedgeMode { TopLeft, BottomRight };

struct TLCell {
    int slot = 0;  // index into the table's group slots
    int t = 0;
};

struct WedgeStep {
    int id = 0;
    int t = 0;       // ray the triangle was placed on
    int t_next = 0;  // first ray that clears it
};

struct WedgeTable {
    WedgeMode mode = WedgeMode::TopLeft;
    int steps = 0;              // T; rays 0..T, index T+1 means nothing fits
    std::vector<Group> slots;   // ascending, NegInfinity first
    // value[slot][t] for t in 0..T+1; value[slots.size()][*] = 0.
    std::vector<std::vector<double>> value;
    std::vector<WedgeStep> realized;
};

// Ray endpoint on the midline for step t in a knapsack of side n.
Point wedge_point(WedgeMode mode, double n, int steps, int t);

// Placement putting the shared vertex on the anchor and a long edge on ray t.
Placement wedge_place(const ConvexPolygon& shape, const TriangleMeta& meta, WedgeMode mode, double n, int steps,
                      int t);

// Smallest t' > t whose ray leaves the placed triangle on its far side;
// steps + 1 when no ray does.
int wedge_next_step(const ConvexPolygon& shape, const TriangleMeta& meta, WedgeMode mode, double n, int steps,
                    int t);

struct WedgePlaceResult {
    std::vector<SolutionEntry> entries;
    std::vector<WedgeStep> steps;
    // Index into the input order of the first triangle that left the knapsack.
    std::optional<std::size_t> infeasible_at;
};

// Greedy wedge packing of the given triangles in the given order.
WedgePlaceResult top_left_place(const Instance& inst, const std::vector<int>& ordered, int steps,
                                WedgeMode mode = WedgeMode::TopLeft);

int default_wedge_steps(std::size_t n_triangles, const SolverConfig& cfg);

PackingSolution solve_wedge_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                               WedgeMode mode, WedgeTable* table = nullptr);
PackingSolution solve_topleft_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                 WedgeTable* table = nullptr);
PackingSolution solve_bottomright_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                     WedgeTable* table = nullptr);

// Which knapsack sides the two long-edge rays of a placed triangle reach.
enum class Facing { Edge, Corner, Neither };

struct FacingInfo {
    Facing kind = Facing::Neither;
    unsigned first_sides = 0;   // bitmask of kSide* values
    unsigned second_sides = 0;
};

constexpr unsigned kSideLeft = 1, kSideRight = 2, kSideBottom = 4, kSideTop = 8;

FacingInfo facing_of(const std::vector<Point>& placed, std::size_t v_star, double n);

// True when one long-edge ray meets the bottom side and the other the right side.
bool faces_bottom_right(const FacingInfo& f);

struct CornerCell {
    int first = -1;   // candidate index of the anchor with the rightmost extreme vertex
    int second = -1;
    int dir = 0;      // 0 none, 1 left, 2 middle, 3 pair
    std::uint64_t groups = 0;
    bool operator==(const CornerCell&) const = default;
};

struct CornerReport {
    std::size_t candidates = 0;
    std::size_t cells = 0;
    std::size_t splits = 0;
    std::size_t split_violations = 0;  // J' and J'' overlapping or escaping the parent
    std::size_t dropped_conflicts = 0;  // triangles removed when the realized set overlapped
    bool exhaustive = true;
    double table_value = 0.0;
};

PackingSolution solve_corner_dp(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                CornerReport* report = nullptr);

struct HardTriangleReport {
    double single_weight = 0.0;
    double topleft_weight = 0.0;
    double bottomright_weight = 0.0;
    double corner_weight = 0.0;
    WedgeTable topleft;
    WedgeTable bottomright;
    CornerReport corner;
};

// Heaviest single triangle that fits on its own.
PackingSolution solve_single_max(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg);

// Best of the single heaviest fit, both wedge DPs and the corner DP.
PackingSolution solve_hard_triangles(const Instance& inst, const std::vector<int>& ids, const SolverConfig& cfg,
                                     HardTriangleReport* report = nullptr);

}  // namespace polypack
