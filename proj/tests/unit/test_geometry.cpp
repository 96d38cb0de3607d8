#include <numbers>
#include <random>

#include "doctest.h"
#include "polypack/errors.hpp"
#include "polypack/geometry.hpp"
#include "support.hpp"

using namespace polypack;

namespace {

ConvexPolygon rect(double w, double h) { return ConvexPolygon::from_vertices({{0, 0}, {w, 0}, {w, h}, {0, h}}); }

double brute_diameter(const ConvexPolygon& p) {
    double best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, dist(p[i], p[j]));
    }
    return best;
}

}  // namespace

TEST_CASE("hull of an already convex rectangle keeps its four corners") {
    std::vector<Point> pts{{0, 0}, {4, 0}, {4, 3}, {0, 3}};
    ConvexPolygon h = convex_hull(pts);
    CHECK(h.size() == 4);
    CHECK(polygon_area(h) == doctest::Approx(12));
}

TEST_CASE("hull drops collinear boundary points") {
    std::vector<Point> pts{{0, 0}, {2, 0}, {4, 0}, {4, 3}, {0, 3}};
    ConvexPolygon h = convex_hull(pts);
    CHECK(h.size() == 4);
    for (const auto& v : h.vertices()) CHECK_FALSE((v.x == 2 && v.y == 0));
}

TEST_CASE("hull of random disk points contains every input and uses only inputs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Point> pts;
        while (pts.size() < 50) {
            Point p{u(rng), u(rng)};
            if (norm(p) <= 1) pts.push_back(p);
        }
        ConvexPolygon h = convex_hull(pts);
        for (const auto& v : h.vertices()) {
            bool found = false;
            for (const auto& p : pts) found = found || (p.x == v.x && p.y == v.y);
            CHECK(found);
        }
        for (const auto& p : pts) {
            for (std::size_t i = 0; i < h.size(); ++i) CHECK(orient(h[i], h[(i + 1) % h.size()], p) >= -1e-12);
        }
    }
}

TEST_CASE("hull rejects collinear and tiny inputs") {
    std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(convex_hull(line), DegenerateInput);
    std::vector<Point> two{{0, 0}, {1, 0}, {1, 0}};
    CHECK_THROWS_AS(convex_hull(two), DegenerateInput);
}

TEST_CASE("from_vertices rejects clockwise and reflex rings") {
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {0, 3}, {4, 3}, {4, 0}}), DegenerateInput);
    std::vector<Point> reflex{{0, 0}, {4, 0}, {1, 1}, {0, 4}};
    CHECK_THROWS_AS(ConvexPolygon::from_vertices(reflex), DegenerateInput);
    auto bad = convexity_defect(reflex);
    REQUIRE(bad.has_value());
    CHECK(*bad == 2);
    std::vector<Point> good{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    CHECK_FALSE(convexity_defect(good).has_value());
}

TEST_CASE("diameter of a 4x3 rectangle is a diagonal of length 5") {
    Diameter d = diameter(rect(4, 3));
    CHECK(d.length == doctest::Approx(5));
    CHECK(((d.pair.first == 0 && d.pair.second == 2) || (d.pair.first == 1 && d.pair.second == 3)));
    CHECK(d.pair.first == 0);
}

TEST_CASE("diameter ties go to the lowest index pair") {
    ConvexPolygon tri = ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}});
    Diameter d = diameter(tri);
    CHECK(d.length == doctest::Approx(2));
    CHECK(d.pair.first == 0);
    CHECK(d.pair.second == 1);
}

TEST_CASE("diameter matches the all-pairs maximum on random polygons") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        ConvexPolygon p = testsupport::random_convex(rng, 12, 5.0);
        Diameter d = diameter(p);
        CHECK(d.length == doctest::Approx(brute_diameter(p)).epsilon(1e-12));
        CHECK(dist(p[d.pair.first], p[d.pair.second]) == doctest::Approx(d.length));
    }
}

TEST_CASE("canonical 4x3 rectangle has a 5 by 4.8 box") {
    ConvexPolygon c = canonicalize(rect(4, 3));
    CHECK(c.bbox().w == doctest::Approx(5));
    CHECK(c.bbox().h == doctest::Approx(4.8));
    CHECK(c.bbox().x == doctest::Approx(0).epsilon(1e-12));
    CHECK(c.bbox().y == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("canonical right triangle with legs 9") {
    ConvexPolygon c = canonicalize(ConvexPolygon::from_vertices({{0, 0}, {9, 0}, {0, 9}}));
    CHECK(c.diameter_len() == doctest::Approx(9 * std::numbers::sqrt2));
    CHECK(c.height() == doctest::Approx(9 / std::numbers::sqrt2));
}

TEST_CASE("canonicalize is idempotent and puts the diameter on a horizontal line") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        ConvexPolygon c = canonicalize(testsupport::random_convex(rng, 9, 3.0));
        auto [i, j] = c.diameter_pair();
        CHECK(c[i].y == doctest::Approx(c[j].y).epsilon(1e-12));
        CHECK(c.bbox().w == doctest::Approx(c.diameter_len()));
        CHECK(c.bbox().w >= c.bbox().h);
        ConvexPolygon again = canonicalize(c);
        REQUIRE(again.size() == c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            CHECK(std::abs(again[k].x - c[k].x) < 1e-12);
            CHECK(std::abs(again[k].y - c[k].y) < 1e-12);
        }
        CHECK(polygon_area(c) >= 0.5 * c.bbox().w * c.bbox().h * (1 - 1e-12));
    }
}

TEST_CASE("identity placement leaves the polygon alone") {
    ConvexPolygon r = rect(2, 1);
    ConvexPolygon p = apply_placement(r, Placement{});
    for (std::size_t k = 0; k < r.size(); ++k) {
        CHECK(p[k].x == doctest::Approx(r[k].x));
        CHECK(p[k].y == doctest::Approx(r[k].y));
    }
}

TEST_CASE("quarter turn of the unit square is clockwise about vertex 0") {
    ConvexPolygon p = apply_placement(rect(1, 1), Placement::from_angle(std::numbers::pi / 2));
    CHECK(p[1].x == doctest::Approx(0).epsilon(1e-12));
    CHECK(p[1].y == doctest::Approx(-1));
    CHECK(polygon_area(p) == doctest::Approx(1));
}

TEST_CASE("placements preserve pairwise distances and round trip through placement_between") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi), t(-10, 10);
    for (int rep = 0; rep < 100; ++rep) {
        ConvexPolygon c = canonicalize(testsupport::random_convex(rng, 8, 4.0));
        Placement pl = Placement::from_angle(u(rng), t(rng), t(rng));
        CHECK(pl.cos_a * pl.cos_a + pl.sin_a * pl.sin_a == doctest::Approx(1).epsilon(1e-12));
        ConvexPolygon m = apply_placement(c, pl);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(std::abs(dist(m[i], m[j]) - dist(c[i], c[j])) < 1e-9);
        }
        Placement back = placement_between(c.vertices(), m.vertices());
        CHECK(back.dx == doctest::Approx(pl.dx));
        CHECK(back.dy == doctest::Approx(pl.dy));
        CHECK(back.angle() == doctest::Approx(pl.angle()));
    }
}

TEST_CASE("overlap test on simple configurations") {
    ConvexPolygon a = rect(1, 1);
    CHECK_FALSE(polygons_overlap(a, apply_placement(a, Placement{5, 0, 1, 0}), 1e-9));
    CHECK(polygons_overlap(a, a, 1e-9));
    CHECK_FALSE(polygons_overlap(a, apply_placement(a, Placement{1, 0, 1, 0}), 1e-9));
    CHECK(polygons_overlap(a, apply_placement(a, Placement{0.5, 0.5, 1, 0}), 1e-9));
}

TEST_CASE("overlap test agrees with clipped intersection area and is symmetric") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> t(-4, 4), ang(0, 2 * std::numbers::pi);
    int overlapping = 0, separate = 0;
    for (int rep = 0; rep < 2000; ++rep) {
        ConvexPolygon a = testsupport::random_convex(rng, 7, 2.0);
        ConvexPolygon b = apply_placement(testsupport::random_convex(rng, 6, 2.0), Placement::from_angle(ang(rng), t(rng), t(rng)));
        double area = testsupport::intersection_area(a.vertices(), b.vertices());
        bool ov = polygons_overlap(a, b, 1e-9);
        CHECK(ov == polygons_overlap(b, a, 1e-9));
        if (area > 1e-6) {
            CHECK(ov);
            ++overlapping;
        }
        if (area == 0.0) {
            CHECK_FALSE(ov);
            ++separate;
        }
    }
    CHECK(overlapping > 100);
    CHECK(separate > 100);
}

TEST_CASE("containment respects the tolerance") {
    Rect k{0, 0, 10, 10};
    CHECK(contains(k, rect(1, 1), 1e-8));
    const double tol = 1e-8;
    ConvexPolygon tri = ConvexPolygon::from_vertices({{5, 5}, {10 + 2 * tol, 5}, {5, 6}});
    CHECK_FALSE(contains(k, tri, tol));
    ConvexPolygon edge = ConvexPolygon::from_vertices({{5, 5}, {10 + 0.5 * tol, 5}, {5, 6}});
    CHECK(contains(k, edge, tol));
}

TEST_CASE("a rotated rectangle of full diagonal slack fits at 45 degrees") {
    for (double n : {1.0, 8.0, 64.0}) {
        for (double len : {0.8 * n, n, 1.2 * n, 1.4 * n}) {
            const double hp = std::numbers::sqrt2 * n - len;
            // Long side from (h'/sqrt2, 0) up to the top right.
            const double s = 1 / std::numbers::sqrt2;
            Point v1{hp * s, 0};
            Point v2{v1.x + len * s, v1.y + len * s};
            Point v3{v2.x - hp * s, v2.y + hp * s};
            Point v0{v1.x - hp * s, v1.y + hp * s};
            ConvexPolygon r = ConvexPolygon::from_vertices({v1, v2, v3, v0});
            CHECK(contains(Rect{0, 0, n, n}, r, tolerance_for(n)));
        }
    }
}

TEST_CASE("areas by the shoelace formula") {
    CHECK(polygon_area(rect(4, 3)) == doctest::Approx(12));
    CHECK(polygon_area(ConvexPolygon::from_vertices({{0, 0}, {4, 0}, {0, 3}})) == doctest::Approx(6));
}

TEST_CASE("erosion shrinks inside the original") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 50; ++rep) {
        ConvexPolygon p = testsupport::random_convex(rng, 8, 3.0);
        auto e = eroded(p.vertices(), 0.01);
        REQUIRE(e.size() >= 3);
        CHECK(polygon_area(e) < polygon_area(p));
        for (const auto& v : e) {
            for (std::size_t i = 0; i < p.size(); ++i) CHECK(orient(p[i], p[(i + 1) % p.size()], v) > 0);
        }
    }
}
