#include <numbers>
#include <random>

#include "doctest.h"
#include "polypack/easy_solver.hpp"
#include "polypack/io_render.hpp"
#include "support.hpp"

using namespace polypack;

namespace {

std::vector<int> all_ids(const Instance& inst) {
    std::vector<int> ids;
    for (const auto& it : inst.items()) ids.push_back(it.id);
    return ids;
}

PolygonInput roof(int id, double s, double w = 1.0) { return {id, w, {{0, 0}, {s, 0}, {0.5 * s, 0.5 * s}}}; }

}  // namespace

TEST_CASE("empty input gives an empty solution") {
    Instance inst(8, {});
    PackingSolution s = solve_easy(inst, {}, 0.1);
    CHECK(s.entries.empty());
    CHECK(s.total_weight == 0);
}

TEST_CASE("single polygon sits at the origin") {
    Instance inst(8, {roof(1, 6)});
    PackingSolution s = solve_easy(inst, {1}, 0.1);
    REQUIRE(s.entries.size() == 1);
    CHECK(s.producer == Producer::Easy);
    CHECK(testsupport::feasible(inst, s));
    Rect b = bounding_box(placed_vertices(inst, s.entries[0]));
    CHECK(b.x == doctest::Approx(0).epsilon(1e-12));
    CHECK(b.y == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("sixteen small squares all get packed") {
    const double n = 16;
    std::vector<PolygonInput> polys;
    for (int i = 0; i < 16; ++i) {
        // A square of side N/8 presented rotated so its canonical box is an
        // axis-parallel square of the same side.
        const double s = n / 8;
        const double h = s / std::sqrt(2.0);
        polys.push_back({i + 1, 1.0, {{0, h}, {h, 0}, {2 * h, h}, {h, 2 * h}}});
    }
    Instance inst(16, polys);
    EasyReport rep;
    PackingSolution s = solve_easy(inst, all_ids(inst), 0.1, &rep);
    CHECK(rep.selection.size() == 16);
    CHECK(s.entries.size() == 16);
    CHECK(s.total_weight == doctest::Approx(16));
    CHECK(testsupport::feasible(inst, s));
}

TEST_CASE("one heavy big polygon beats many light small ones") {
    // Regular octagon of diameter 9.8: about 0.68 N^2.
    PolygonInput big{1, 100.0, {}};
    for (int k = 0; k < 8; ++k) {
        double a = k * std::numbers::pi / 4 + std::numbers::pi / 8;
        big.vertices.push_back({5 + 4.9 * std::cos(a), 5 + 4.9 * std::sin(a)});
    }
    std::vector<PolygonInput> polys{big};
    for (int i = 0; i < 20; ++i) polys.push_back(roof(i + 2, 1.0, 1.0));
    Instance inst(10, polys);
    PackingSolution s = solve_easy(inst, all_ids(inst), 0.1);
    CHECK(testsupport::feasible(inst, s));
    CHECK(s.total_weight >= 100);
    CHECK(polygon_area(inst.at(1).shape) > 0.6 * 100);
}

TEST_CASE("area split gives at most seven parts with small runs") {
    Instance inst = generate_instance(3, 16, ClassCounts{40, 0, 0});
    const double limit = 16.0 * 16.0 / 4;
    auto parts = split_by_area(inst, all_ids(inst), limit);
    std::size_t total = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        total += parts[p].size();
        if (p < 3) {
            CHECK(parts[p].size() == 1);
        } else {
            double a = 0;
            for (int id : parts[p]) a += polygon_area(inst.at(id).shape);
            CHECK((a <= limit + 1e-9 || parts[p].size() == 1));
        }
    }
    CHECK(total == inst.size());
}

TEST_CASE("random easy instances are feasible and keep a seventh of the selection") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::int64_t n = 4 + static_cast<std::int64_t>(seed % 5) * 7;
        Instance inst = generate_instance(seed, n, ClassCounts{static_cast<int>(2 + seed % 15), 0, 0});
        EasyReport rep;
        PackingSolution s = solve_easy(inst, all_ids(inst), 0.1, &rep);
        CHECK(testsupport::feasible(inst, s));
        CHECK(testsupport::max_overlap_area(inst, s) < 1e-6 * n * n);
        double sel_area = 0;
        for (int id : rep.selection) sel_area += polygon_area(inst.at(id).shape);
        CHECK(sel_area <= n * n * (1 + 1e-12));
        CHECK(rep.parts.size() <= 7);
        CHECK(rep.kept_weight >= rep.selection_weight / 7 - 1e-9);
        CHECK(s.total_weight > 0);
    }
}
