#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polypack/errors.hpp"
#include "polypack/geometry.hpp"
#include "polypack/knapsack1d.hpp"
#include "polypack/model.hpp"

namespace testsupport {

using polypack::Point;

// Convex ring clipped against the half-plane left of a->b.
inline std::vector<Point> clip_half(const std::vector<Point>& ring, Point a, Point b) {
    std::vector<Point> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point p = ring[i], q = ring[(i + 1) % n];
        double sp = polypack::orient(a, b, p), sq = polypack::orient(a, b, q);
        if (sp >= 0) out.push_back(p);
        if ((sp >= 0) != (sq >= 0)) {
            double t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

// Area of the intersection of two CCW convex rings.
inline double intersection_area(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> r = a;
    for (std::size_t i = 0; i < b.size() && r.size() >= 3; ++i) r = clip_half(r, b[i], b[(i + 1) % b.size()]);
    if (r.size() < 3) return 0.0;
    return std::abs(polypack::polygon_area(r));
}

// Random strictly convex polygon: hull of points on an ellipse-ish cloud.
inline polypack::ConvexPolygon random_convex(std::mt19937_64& rng, int k, double scale) {
    std::uniform_real_distribution<double> ang(0.0, 2 * 3.141592653589793);
    std::uniform_real_distribution<double> rad(0.6, 1.0);
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < k; ++i) {
            double a = ang(rng), r = rad(rng) * scale;
            pts.push_back({r * std::cos(a), 0.6 * r * std::sin(a)});
        }
        try {
            return polypack::convex_hull(pts);
        } catch (const polypack::Error&) {
        }
    }
}

inline double brute_knapsack(const std::vector<polypack::KnapsackItem>& items, double cap) {
    double best = 0.0;
    const std::size_t n = items.size();
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        double s = 0, p = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m >> i & 1) {
                s += items[i].size;
                p += items[i].profit;
            }
        }
        if (s <= cap + 1e-12) best = std::max(best, p);
    }
    return best;
}

// Every item goes to bin 0, bin 1 or nowhere.
inline double brute_two_knapsack(const std::vector<polypack::KnapsackItem>& items, double cap) {
    const std::size_t n = items.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    double best = 0.0;
    for (std::size_t code = 0; code < total; ++code) {
        double s0 = 0, s1 = 0, p = 0;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) s0 += items[i].size, p += items[i].profit;
            if (c % 3 == 2) s1 += items[i].size, p += items[i].profit;
        }
        if (s0 <= cap + 1e-12 && s1 <= cap + 1e-12) best = std::max(best, p);
    }
    return best;
}

// Minimal XML well-formedness check: balanced tags, quoted attributes,
// a single root element and no stray '<' or '&'.
inline bool xml_well_formed(std::string_view s) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    auto name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.'; };
    while (i < s.size()) {
        char c = s[i];
        if (c == '&') {
            std::size_t semi = s.find(';', i);
            if (semi == std::string_view::npos || semi - i > 8) return false;
            i = semi + 1;
            continue;
        }
        if (c != '<') {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(c))) return false;
            ++i;
            continue;
        }
        if (s.substr(i, 5) == "<?xml") {
            std::size_t e = s.find("?>", i);
            if (e == std::string_view::npos || i != 0) return false;
            i = e + 2;
            continue;
        }
        if (s.substr(i, 4) == "<!--") {
            std::size_t e = s.find("-->", i);
            if (e == std::string_view::npos) return false;
            i = e + 3;
            continue;
        }
        bool closing = i + 1 < s.size() && s[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        std::size_t start = j;
        while (j < s.size() && name_char(s[j])) ++j;
        if (j == start) return false;
        std::string name(s.substr(start, j - start));
        if (closing) {
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            if (j >= s.size() || s[j] != '>') return false;
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            i = j + 1;
            continue;
        }
        // Attributes.
        for (;;) {
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            if (j >= s.size()) return false;
            if (s[j] == '>' || (s[j] == '/' && j + 1 < s.size() && s[j + 1] == '>')) break;
            std::size_t a = j;
            while (j < s.size() && name_char(s[j])) ++j;
            if (j == a || j >= s.size() || s[j] != '=') return false;
            ++j;
            if (j >= s.size() || (s[j] != '"' && s[j] != '\'')) return false;
            char q = s[j];
            std::size_t e = s.find(q, j + 1);
            if (e == std::string_view::npos) return false;
            if (s.substr(j + 1, e - j - 1).find('<') != std::string_view::npos) return false;
            j = e + 1;
        }
        if (stack.empty()) {
            if (root_seen) return false;
            root_seen = true;
        }
        if (s[j] == '/') {
            i = j + 2;
        } else {
            stack.push_back(name);
            i = j + 1;
        }
    }
    return root_seen && stack.empty();
}

// Largest pairwise intersection area among the placed polygons of a solution.
inline double max_overlap_area(const polypack::Instance& inst, const polypack::PackingSolution& sol) {
    std::vector<std::vector<Point>> placed;
    for (const auto& e : sol.entries) placed.push_back(polypack::placed_vertices(inst, e));
    double worst = 0.0;
    for (std::size_t a = 0; a < placed.size(); ++a) {
        for (std::size_t b = a + 1; b < placed.size(); ++b) worst = std::max(worst, intersection_area(placed[a], placed[b]));
    }
    return worst;
}

inline bool feasible(const polypack::Instance& inst, const polypack::PackingSolution& sol, double ra = 1.0) {
    return polypack::validate_solution(inst, sol, ra).feasible;
}

}  // namespace testsupport
