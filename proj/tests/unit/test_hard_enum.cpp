#include <numbers>

#include "doctest.h"
#include "polypack/classify.hpp"
#include "polypack/easy_solver.hpp"
#include "polypack/errors.hpp"
#include "polypack/hard_enum.hpp"
#include "polypack/io_render.hpp"
#include "polypack/oracle.hpp"
#include "support.hpp"

using namespace polypack;

namespace {

std::vector<int> all_ids(const Instance& inst) {
    std::vector<int> ids;
    for (const auto& it : inst.items()) ids.push_back(it.id);
    return ids;
}

ConvexPolygon canon(std::vector<Point> v) { return canonicalize(ConvexPolygon::from_vertices(std::move(v))); }

}  // namespace

TEST_CASE("every placement keeps the polygon inside the knapsack") {
    SolverConfig cfg;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Instance inst = generate_instance(seed, 8 + std::int64_t(seed), ClassCounts{1, 1, 2});
        for (const auto& it : inst.items()) {
            PlacementSet ps = placement_set(it.shape, it.id, inst.side(), 3, cfg);
            CHECK(ps.id == it.id);
            CHECK_FALSE(ps.placements.empty());
            for (const auto& p : ps.placements) {
                auto pts = apply_placement(it.shape.vertices(), it.shape[0], p);
                CHECK(contains(Rect{0, 0, inst.side(), inst.side()}, pts, inst.tol()));
            }
        }
    }
}

TEST_CASE("the knapsack square itself only fits axis-aligned") {
    ConvexPolygon k = canon({{0, 0}, {6, 0}, {6, 6}, {0, 6}});
    PlacementSet ps = placement_set(k, 1, 6, 1, SolverConfig{});
    REQUIRE_FALSE(ps.placements.empty());
    for (const auto& p : ps.placements) {
        auto pts = apply_placement(k.vertices(), k[0], p);
        Rect b = bounding_box(pts);
        CHECK(b.w == doctest::Approx(6).epsilon(1e-9));
        CHECK(b.h == doctest::Approx(6).epsilon(1e-9));
    }
}

TEST_CASE("polygon longer than the diagonal has no placement") {
    ConvexPolygon s = canon({{0, 0}, {15, 0}, {15, 0.1}, {0, 0.1}});
    CHECK_THROWS_AS(placement_set(s, 1, 10, 1, SolverConfig{}), EmptyPlacementSet);
}

TEST_CASE("near-diagonal sliver placements hug a diagonal") {
    const double n = 10, slack = 0.02;
    const double len = std::numbers::sqrt2 * n - slack;
    ConvexPolygon s = canon({{0, 0}, {len, 0}, {len - 0.001, 0.002}, {0.001, 0.002}});
    PlacementSet ps = placement_set(s, 1, n, 1, SolverConfig{});
    REQUIRE_FALSE(ps.placements.empty());
    auto [i, j] = s.diameter_pair();
    for (const auto& p : ps.placements) {
        auto pts = apply_placement(s.vertices(), s[0], p);
        Point mid = 0.5 * (pts[i] + pts[j]);
        CHECK(dist(mid, {n / 2, n / 2}) < 0.1);
        double diag = std::min(std::abs(pts[i].x - pts[i].y), std::abs(pts[i].x + pts[i].y - n));
        CHECK(diag < 0.1);
    }
}

TEST_CASE("fit angles let a tight triangle in") {
    ConvexPolygon t = canon({{0, 0}, {9, 0}, {0, 9}});
    auto angles = fit_angles(t, 10, tolerance_for(10));
    CHECK_FALSE(angles.empty());
    for (double a : angles) {
        Extent e = rotated_extent(t, std::cos(a), std::sin(a));
        CHECK(e.width() <= 10 + 1e-8);
        CHECK(e.height() <= 10 + 1e-8);
    }
}

TEST_CASE("one hard polygon that fits gets packed") {
    Instance inst(10, {{1, 2.0, {{0, 0}, {9, 0}, {0, 9}}}});
    PackingSolution s = solve_hard_enum(inst, {1}, inst.config());
    CHECK(s.entries.size() == 1);
    CHECK(s.producer == Producer::HardEnum);
    CHECK(testsupport::feasible(inst, s));
}

TEST_CASE("budget one picks the heaviest packable polygon") {
    Instance inst = generate_instance(5, 12, ClassCounts{0, 0, 3});
    SolverConfig cfg = inst.config();
    cfg.hard_budget = 1;
    PackingSolution s = solve_hard_enum(inst, all_ids(inst), cfg);
    REQUIRE(s.entries.size() == 1);
    double heaviest = 0;
    for (const auto& it : inst.items()) heaviest = std::max(heaviest, it.weight);
    CHECK(s.total_weight == doctest::Approx(heaviest));
}

TEST_CASE("hard enumeration is feasible and never beats the oracle") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Instance inst = generate_instance(100 + seed, 6 + std::int64_t(seed), ClassCounts{0, 0, 1 + int(seed % 3)});
        HardEnumReport rep;
        PackingSolution s = solve_hard_enum(inst, all_ids(inst), inst.config(), &rep);
        CHECK(testsupport::feasible(inst, s));
        CHECK(rep.nodes > 0);
        PackingSolution o = brute_force_opt(inst, 3, 256);
        CHECK(s.total_weight <= o.total_weight + 1e-9);
    }
}

TEST_CASE("more budget never hurts") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Instance inst = generate_instance(200 + seed, 16, ClassCounts{0, 0, 4});
        double prev = 0;
        for (int b = 1; b <= 4; ++b) {
            SolverConfig cfg = inst.config();
            cfg.hard_budget = b;
            double w = solve_hard_enum(inst, all_ids(inst), cfg).total_weight;
            CHECK(w >= prev - 1e-12);
            prev = w;
        }
    }
}

TEST_CASE("group bound after shrinking") {
    CHECK(ra_group_bound(1.0) == 2);
    CHECK(ra_group_bound(0.1) == 5);
    CHECK(ra_group_bound(0.25) >= 3);
}

TEST_CASE("augmented solutions validate in the enlarged knapsack") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = generate_instance(300 + seed, 8 + std::int64_t(seed), ClassCounts{2, 2, 3});
        for (double delta : {0.25, 1.0}) {
            RaReport rep;
            PackingSolution s = solve_hard_ra(inst, delta, inst.config(), &rep);
            CHECK(s.producer == Producer::RA);
            CHECK(testsupport::feasible(inst, s, 1 + delta));
            CHECK(rep.group_count <= rep.group_bound);
            CHECK(rep.group_bound == ra_group_bound(delta));
        }
    }
}

TEST_CASE("augmented run on easy polygons matches the easy solver on the shrunk copy") {
    Instance inst = generate_instance(77, 12, ClassCounts{6, 0, 0});
    PackingSolution ra = solve_hard_ra(inst, 0.25, inst.config());
    CHECK(testsupport::feasible(inst, ra, 1.25));
    PackingSolution easy = solve_easy(inst, all_ids(inst), inst.config().eps);
    CHECK(ra.total_weight >= easy.total_weight - 1e-9);
}
