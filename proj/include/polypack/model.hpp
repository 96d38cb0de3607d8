#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polypack/geometry.hpp"

namespace polypack {

struct SolverConfig {
    double eps = 0.1;
    double delta = 0.0;
    int hard_budget = 4;
    int per_group = 2;
    int grid_divisor = 8;
    // Steps along the top-left ray fan; unset means 64 per polygon.
    std::optional<int> tl_steps;
    // Candidate placements kept per triangle in the corner DP.
    int corner_candidates = 16;
    // Node limit for each placement search in the hard enumeration.
    std::int64_t search_node_limit = 4'000'000;
};

struct PolygonInput {
    int id = 0;
    double weight = 1.0;
    std::vector<Point> vertices;  // any orientation
};

struct Item {
    int id = 0;
    double weight = 1.0;
    ConvexPolygon shape;           // canonical form
    std::vector<Point> original;   // as given, for rendering and serialization
};

class Instance {
public:
    Instance() = default;
    // Canonicalizes every polygon; throws Error on non-positive weights,
    // duplicate ids or N < 1 and DegenerateInput on bad polygons.
    Instance(std::int64_t n, std::vector<PolygonInput> polygons, SolverConfig cfg = {});

    std::int64_t n() const { return n_; }
    double side() const { return static_cast<double>(n_); }
    double tol() const { return tolerance_for(side()); }
    const std::vector<Item>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    const Item* find(int id) const;
    const Item& at(int id) const;  // throws UnknownId
    const SolverConfig& config() const { return cfg_; }
    void set_config(const SolverConfig& cfg) { cfg_ = cfg; }

    // A new instance over the same knapsack holding only the given ids.
    Instance subset(const std::vector<int>& ids) const;

private:
    std::int64_t n_ = 1;
    std::vector<Item> items_;
    SolverConfig cfg_;
};

enum class Producer { None, Easy, Medium, HardEnum, TriangleTL, TriangleBR, TriangleCorner, SingleMax, Oracle, RA };

std::string_view to_string(Producer p);
std::optional<Producer> producer_from_string(std::string_view s);

struct SolutionEntry {
    int id = 0;
    Placement placement;
};

struct PackingSolution {
    std::vector<SolutionEntry> entries;
    double total_weight = 0.0;
    Producer producer = Producer::None;
    // Free-form routing note, e.g. which hard solver ran.
    std::string dispatch;
};

// Builds a solution and fills total_weight from the instance weights.
PackingSolution make_solution(const Instance& inst, std::vector<SolutionEntry> entries, Producer producer);

std::vector<Point> placed_vertices(const Instance& inst, const SolutionEntry& e);

enum class ViolationKind { Overlap, OutOfKnapsack, DuplicateId };

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind = ViolationKind::Overlap;
    std::vector<int> ids;
    double magnitude = 0.0;
};

struct ValidationReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

ValidationReport validate_solution(const Instance& inst, const PackingSolution& sol, double ra_factor = 1.0);

}  // namespace polypack
