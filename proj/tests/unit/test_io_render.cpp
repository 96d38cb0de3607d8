#include <cmath>

#include "doctest.h"
#include "polypack/classify.hpp"
#include "polypack/errors.hpp"
#include "polypack/io_render.hpp"
#include "polypack/pipeline.hpp"
#include "support.hpp"

using namespace polypack;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
    if (a.n() != b.n() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.items()[i];
        const auto& y = b.items()[i];
        if (x.id != y.id || x.weight != y.weight || x.original.size() != y.original.size()) return false;
        for (std::size_t k = 0; k < x.original.size(); ++k) {
            if (x.original[k].x != y.original[k].x || x.original[k].y != y.original[k].y) return false;
        }
    }
    return true;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("minimal instance parses") {
    Instance inst = parse_instance("# comment\nknapsack 10\n\npoly 3 w=2.5 v= 0,0 4,0 4,3 0,3\n");
    CHECK(inst.n() == 10);
    REQUIRE(inst.size() == 1);
    CHECK(inst.items()[0].id == 3);
    CHECK(inst.items()[0].weight == 2.5);
    CHECK(inst.items()[0].original.size() == 4);
}

TEST_CASE("reflex quadrilateral names the bad vertex") {
    try {
        parse_instance("knapsack 10\npoly 1 w=1 v= 0,0 4,0 1,1 0,4\n");
        FAIL("expected InvalidPolygon");
    } catch (const InvalidPolygon& e) {
        CHECK(e.line() == 2);
        CHECK(e.vertex() == 2);
    }
}

TEST_CASE("malformed input errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance("knapsack 10\npoly 1 w=0 v= 0,0 1,0 0,1\n"), InvalidWeight);
    CHECK_THROWS_AS(parse_instance("knapsack 10\npoly 1 w=-2 v= 0,0 1,0 0,1\n"), InvalidWeight);
    CHECK_THROWS_AS(parse_instance("poly 1 w=1 v= 0,0 1,0 0,1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("knapsack 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("knapsack 10\npoly 1 w=1 v= 0,0 1,0\n"), InvalidPolygon);
    CHECK_THROWS_AS(parse_instance("knapsack 10\npoly 1 w=1 v= 0,0 1,x 0,1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("knapsack 10\npoly 1 w=1 v= 0,0 1,0 0,1\npoly 1 w=1 v= 0,0 1,0 0,1\n"),
                    ParseError);
    try {
        parse_instance("knapsack 10\n\npoly 1 w=1 v= 0,0 1,0 0,1\nfrob\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("numbers print in shortest round-trip form") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(3.0) == "3");
    double x = 1.0 / 3.0;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("instances round trip bit for bit") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance inst = generate_instance(seed, 4 + std::int64_t(seed) * 3, ClassCounts{2, 2, 2},
                                          static_cast<Profile>(seed % 3));
        std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        CHECK(same_instance(inst, back));
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("solutions round trip") {
    Instance inst = generate_instance(9, 12, ClassCounts{2, 1, 1});
    PackingSolution sol = solve_full(inst);
    std::string text = serialize_solution(sol);
    CHECK(text.find(std::string(kVersion)) != std::string::npos);
    PackingSolution back = parse_solution(text);
    REQUIRE(back.entries.size() == sol.entries.size());
    for (std::size_t i = 0; i < sol.entries.size(); ++i) {
        CHECK(back.entries[i].id == sol.entries[i].id);
        CHECK(back.entries[i].placement.dx == sol.entries[i].placement.dx);
        CHECK(back.entries[i].placement.dy == sol.entries[i].placement.dy);
        CHECK(back.entries[i].placement.cos_a == sol.entries[i].placement.cos_a);
        CHECK(back.entries[i].placement.sin_a == sol.entries[i].placement.sin_a);
    }
    CHECK(back.producer == sol.producer);
    CHECK(back.dispatch == sol.dispatch);
    CHECK(back.total_weight == sol.total_weight);
    CHECK(serialize_solution(back) == text);
    CHECK_THROWS_AS(parse_solution("place 1 0 0 1 0\n"), ParseError);
}

TEST_CASE("generator is deterministic and honours the requested classes") {
    for (Profile prof : {Profile::Mixed, Profile::NearDiagonal, Profile::Triangles}) {
        Instance a = generate_instance(42, 20, ClassCounts{3, 4, 5}, prof);
        Instance b = generate_instance(42, 20, ClassCounts{3, 4, 5}, prof);
        CHECK(serialize_instance(a) == serialize_instance(b));
        auto cls = classify_all(a);
        REQUIRE(cls.size() == 12);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            PolyClass want = i < 3 ? PolyClass::Easy : i < 7 ? PolyClass::Medium : PolyClass::Hard;
            CHECK(cls[i].cls == want);
            CHECK(a.items()[i].id == int(i) + 1);
            if (prof == Profile::Triangles) CHECK(a.items()[i].shape.size() == 3);
        }
    }
    CHECK(serialize_instance(generate_instance(1, 20, {2, 2, 2})) !=
          serialize_instance(generate_instance(2, 20, {2, 2, 2})));
    CHECK_THROWS_AS(generate_instance(1, 20, {-1, 0, 0}), Error);
    CHECK(profile_from_string("near_diagonal") == Profile::NearDiagonal);
    CHECK_THROWS_AS(profile_from_string("round"), Error);
}

TEST_CASE("near-diagonal profile keeps non-easy groups small") {
    const std::int64_t n = 64;
    Instance inst = generate_instance(5, n, ClassCounts{0, 10, 10}, Profile::NearDiagonal);
    const int cap = static_cast<int>(std::ceil(std::log2(0.03 * n)));
    for (const auto& c : classify_all(inst)) {
        REQUIRE(c.group.has_value());
        if (c.group->kind == GroupKind::Finite) CHECK(c.group->j <= cap);
    }
}

TEST_CASE("svg output is well formed") {
    Instance empty(8, {});
    std::string e = render_svg(empty, PackingSolution{});
    CHECK(testsupport::xml_well_formed(e));
    CHECK(e.find("<svg") != std::string::npos);

    Instance inst = generate_instance(3, 16, ClassCounts{2, 2, 2});
    PackingSolution sol = solve_full(inst);
    RenderOptions opts;
    opts.containers = true;
    opts.midline = true;
    opts.group_colors = true;
    std::string s = render_svg(inst, sol, opts);
    CHECK(testsupport::xml_well_formed(s));
    CHECK(count(s, "<polygon") >= sol.entries.size());
}

TEST_CASE("container overlay for N=8 uses the closed-form corners") {
    Instance inst(8, {});
    RenderOptions opts;
    opts.containers = true;
    std::string s = render_svg(inst, PackingSolution{}, opts);
    CHECK(testsupport::xml_well_formed(s));
    std::size_t title = s.find("<title>R 2</title>");
    REQUIRE(title != std::string::npos);
    std::size_t open = s.rfind("points=\"", title) + 8;
    std::string attr = s.substr(open, s.find('"', open) - open);
    // Undo the drawing transform: 12 px margin, 80 px per unit, y flipped.
    std::vector<Point> got;
    for (std::size_t p = 0; p < attr.size();) {
        std::size_t sp = attr.find(' ', p);
        std::string pair = attr.substr(p, sp == std::string::npos ? std::string::npos : sp - p);
        std::size_t comma = pair.find(',');
        got.push_back({(std::stod(pair.substr(0, comma)) - 12) / 80, 8 - (std::stod(pair.substr(comma + 1)) - 12) / 80});
        p = sp == std::string::npos ? attr.size() : sp + 1;
    }
    const double r2 = std::sqrt(2.0);
    std::vector<Point> want{{r2, 8}, {8, r2}, {8 - 0.5 / r2, 1.5 / r2}, {1.5 / r2, 8 - 0.5 / r2}};
    REQUIRE(got.size() == 4);
    for (const auto& w : want) {
        bool hit = false;
        for (const auto& g : got) hit = hit || dist(g, w) < 1e-9;
        CHECK(hit);
    }
    CHECK_FALSE(testsupport::xml_well_formed("<svg><g></svg>"));
    CHECK_FALSE(testsupport::xml_well_formed("<svg a=1/>"));
}
