#include "polypack/io_render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "polypack/classify.hpp"
#include "polypack/errors.hpp"
#include "polypack/medium_solver.hpp"

namespace polypack {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size() && std::isfinite(out);
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

// Calls fn(line_number, line) for every meaningful line.
template <class Fn>
void for_lines(std::string_view text, Fn fn) {
    std::size_t no = 0;
    while (!text.empty()) {
        std::size_t e = text.find('\n');
        std::string_view line = text.substr(0, e);
        text = e == std::string_view::npos ? std::string_view{} : text.substr(e + 1);
        ++no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        fn(no, line);
    }
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    if (v == 0.0) v = 0.0;  // no negative zero in output
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

Instance parse_instance(std::string_view text, const SolverConfig& cfg) {
    std::optional<std::int64_t> n;
    std::vector<PolygonInput> polys;
    std::set<int> ids;
    for_lines(text, [&](std::size_t no, std::string_view line) {
        auto tok = split_ws(line);
        if (!n) {
            std::int64_t v = 0;
            if (tok.size() != 2 || tok[0] != "knapsack" || !parse_int(tok[1], v)) {
                throw ParseError(no, "expected 'knapsack <N>'");
            }
            if (v < 1) throw ParseError(no, "knapsack side must be a positive integer");
            n = v;
            return;
        }
        if (tok.empty() || tok[0] != "poly") throw ParseError(no, "expected 'poly <id> w=<weight> v= ...'");
        if (tok.size() < 3) throw ParseError(no, "truncated polygon line");
        PolygonInput p;
        if (!parse_int(tok[1], p.id)) throw ParseError(no, "bad polygon id '" + std::string(tok[1]) + "'");
        if (!ids.insert(p.id).second) throw ParseError(no, "duplicate polygon id " + std::to_string(p.id));
        if (tok[2].substr(0, 2) != "w=" || !parse_double(tok[2].substr(2), p.weight)) {
            throw ParseError(no, "expected w=<weight>");
        }
        if (!(p.weight > 0)) throw InvalidWeight(no, "weight must be positive");
        std::size_t k = 3;
        if (k >= tok.size() || tok[k].substr(0, 2) != "v=") throw ParseError(no, "expected v= followed by vertices");
        std::vector<std::string_view> coords;
        if (tok[k].size() > 2) coords.push_back(tok[k].substr(2));
        for (++k; k < tok.size(); ++k) coords.push_back(tok[k]);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            auto c = coords[i];
            auto comma = c.find(',');
            Point v;
            if (comma == std::string_view::npos || !parse_double(c.substr(0, comma), v.x) ||
                !parse_double(c.substr(comma + 1), v.y)) {
                throw ParseError(no, "bad vertex '" + std::string(c) + "'");
            }
            p.vertices.push_back(v);
        }
        if (p.vertices.size() < 3) throw InvalidPolygon(no, p.vertices.size(), "fewer than 3 vertices");
        if (auto bad = convexity_defect(p.vertices)) throw InvalidPolygon(no, *bad, "polygon is not strictly convex");
        std::vector<Point> ring = p.vertices;
        if (polygon_area(ring) < 0) std::reverse(ring.begin() + 1, ring.end());
        try {
            ConvexPolygon::from_vertices(std::move(ring));
        } catch (const DegenerateInput& e) {
            throw InvalidPolygon(no, 0, e.what());
        }
        polys.push_back(std::move(p));
    });
    if (!n) throw ParseError(1, "missing 'knapsack <N>' header");
    return Instance(*n, std::move(polys), cfg);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "knapsack " << inst.n() << '\n';
    for (const auto& it : inst.items()) {
        os << "poly " << it.id << " w=" << format_number(it.weight) << " v=";
        for (const auto& v : it.original) os << ' ' << format_number(v.x) << ',' << format_number(v.y);
        os << '\n';
    }
    return os.str();
}

PackingSolution parse_solution(std::string_view text) {
    PackingSolution sol;
    bool have_weight = false;
    for_lines(text, [&](std::size_t no, std::string_view line) {
        auto tok = split_ws(line);
        if (tok[0] == "place") {
            SolutionEntry e;
            if (tok.size() != 6 || !parse_int(tok[1], e.id) || !parse_double(tok[2], e.placement.dx) ||
                !parse_double(tok[3], e.placement.dy) || !parse_double(tok[4], e.placement.cos_a) ||
                !parse_double(tok[5], e.placement.sin_a)) {
                throw ParseError(no, "expected 'place <id> <dx> <dy> <cos> <sin>'");
            }
            sol.entries.push_back(e);
        } else if (tok[0] == "producer") {
            auto p = tok.size() == 2 ? producer_from_string(tok[1]) : std::nullopt;
            if (!p) throw ParseError(no, "unknown producer");
            sol.producer = *p;
        } else if (tok[0] == "dispatch") {
            auto rest = line.substr(line.find("dispatch") + 8);
            auto b = rest.find_first_not_of(" \t");
            sol.dispatch = b == std::string_view::npos ? "" : std::string(rest.substr(b));
        } else if (tok[0] == "version") {
        } else if (tok[0] == "weight") {
            if (tok.size() != 2 || !parse_double(tok[1], sol.total_weight)) throw ParseError(no, "bad weight line");
            have_weight = true;
        } else {
            throw ParseError(no, "unknown record '" + std::string(tok[0]) + "'");
        }
    });
    if (!have_weight) throw ParseError(1, "missing 'weight' trailer");
    return sol;
}

std::string serialize_solution(const PackingSolution& sol) {
    std::ostringstream os;
    for (const auto& e : sol.entries) {
        const auto& p = e.placement;
        os << "place " << e.id << ' ' << format_number(p.dx) << ' ' << format_number(p.dy) << ' '
           << format_number(p.cos_a) << ' ' << format_number(p.sin_a) << '\n';
    }
    os << "producer " << to_string(sol.producer) << '\n';
    if (!sol.dispatch.empty()) os << "dispatch " << sol.dispatch << '\n';
    os << "version " << kVersion << '\n';
    os << "weight " << format_number(sol.total_weight) << '\n';
    return os.str();
}

std::string_view to_string(Profile p) {
    switch (p) {
        case Profile::Mixed: return "mixed";
        case Profile::NearDiagonal: return "near_diagonal";
        case Profile::Triangles: return "triangles";
    }
    return "mixed";
}

Profile profile_from_string(std::string_view s) {
    for (Profile p : {Profile::Mixed, Profile::NearDiagonal, Profile::Triangles}) {
        if (to_string(p) == s) return p;
    }
    throw Error("unknown profile '" + std::string(s) + "'");
}

namespace {

constexpr int kRetries = 2000;

class Generator {
public:
    Generator(std::uint64_t seed, std::int64_t n, Profile profile)
        : rng_(seed), n_(static_cast<double>(n)), profile_(profile), quantum_(std::ldexp(static_cast<double>(n), -20)) {}

    std::vector<Point> make(PolyClass cls) {
        for (int attempt = 0; attempt < kRetries; ++attempt) {
            std::vector<Point> pts = shaped(cls);
            std::vector<Point> ring;
            try {
                ring = finish(pts);
            } catch (const DegenerateInput&) {
                continue;
            }
            if (accepts(ring, cls)) return ring;
        }
        throw GenerationFailed("could not generate a " + std::string(to_string(cls)) + " polygon for profile " +
                               std::string(to_string(profile_)));
    }

    double weight() { return 1.0 + std::floor(uni(0.0, 1.0) * 64 * 9) / 64; }

private:
    double uni(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int pick(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    bool triangles() const { return profile_ == Profile::Triangles; }

    // A polygon in a frame where its diameter runs along the x axis.
    std::vector<Point> shaped(PolyClass cls) {
        const double r2 = std::numbers::sqrt2;
        const double gmax = (r2 - 1.0) * n_;
        if (cls == PolyClass::Easy) {
            const double a = uni(0.15, 0.7) * n_, b = uni(0.15, 0.7) * n_;
            const int k = triangles() ? 3 : pick(3, 6);
            std::vector<Point> pts;
            for (int i = 0; i < k; ++i) pts.push_back({uni(0, a), uni(0, b)});
            return pts;
        }
        double g_lo = 0.05, g_hi = 0.95;
        if (profile_ == Profile::NearDiagonal) g_lo = 0.005, g_hi = 0.07;
        const double g = uni(g_lo, g_hi) * gmax;
        const double len = r2 * n_ - g;
        double h;
        if (cls == PolyClass::Medium) {
            h = uni(0.3, 0.9) * g / 8.0;
        } else {
            h = std::min(g / 8.0 * uni(1.3, 10.0), 0.45 * n_);
        }
        std::vector<Point> pts{{0, 0}, {len, 0}};
        const int top = triangles() ? 1 : pick(1, 2);
        for (int i = 0; i < top; ++i) pts.push_back({uni(0.2, 0.8) * len, i == 0 ? h : uni(0.5, 1.0) * h});
        if (!triangles() && pick(0, 2) == 0) {
            // A point below the axis; the top point is lowered to keep the height.
            const double below = uni(0.1, 0.4) * h;
            pts.push_back({uni(0.2, 0.8) * len, -below});
            for (std::size_t i = 2; i < pts.size() - 1; ++i) pts[i].y -= below;
        }
        return pts;
    }

    std::vector<Point> finish(const std::vector<Point>& pts) {
        const double a = uni(0.0, 2.0 * std::numbers::pi);
        const double c = std::cos(a), s = std::sin(a);
        std::vector<Point> rot;
        for (const auto& p : pts) rot.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
        Rect b = bounding_box(rot);
        const double ox = uni(0.0, 0.25) * n_, oy = uni(0.0, 0.25) * n_;
        for (auto& p : rot) {
            p.x = std::round((p.x - b.x + ox) / quantum_) * quantum_;
            p.y = std::round((p.y - b.y + oy) / quantum_) * quantum_;
        }
        std::vector<Point> ring = convex_hull(rot).vertices();
        if (pick(0, 1) == 1) std::reverse(ring.begin(), ring.end());
        return ring;
    }

    bool accepts(const std::vector<Point>& ring, PolyClass cls) const {
        std::vector<Point> ccw = ring;
        if (polygon_area(ccw) < 0) std::reverse(ccw.begin() + 1, ccw.end());
        ConvexPolygon canon;
        try {
            canon = canonicalize(ConvexPolygon::from_vertices(ccw));
        } catch (const DegenerateInput&) {
            return false;
        }
        Classification c = classify_polygon(canon, n_);
        if (c.cls != cls) return false;
        return cls == PolyClass::Easy || (c.group.has_value() && c.diameter > n_);
    }

    std::mt19937_64 rng_;
    double n_;
    Profile profile_;
    double quantum_;
};

}  // namespace

Instance generate_instance(std::uint64_t seed, std::int64_t n, ClassCounts counts, Profile profile,
                           const SolverConfig& cfg) {
    if (counts.easy < 0 || counts.medium < 0 || counts.hard < 0) throw Error("class counts must be non-negative");
    if (n < 1) throw Error("knapsack side must be at least 1");
    Generator gen(seed, n, profile);
    std::vector<PolygonInput> polys;
    int id = 1;
    auto emit = [&](PolyClass cls, int count) {
        for (int k = 0; k < count; ++k) {
            PolygonInput p;
            p.id = id++;
            p.vertices = gen.make(cls);
            p.weight = gen.weight();
            polys.push_back(std::move(p));
        }
    };
    emit(PolyClass::Easy, counts.easy);
    emit(PolyClass::Medium, counts.medium);
    emit(PolyClass::Hard, counts.hard);
    return Instance(n, std::move(polys), cfg);
}

std::string render_svg(const Instance& inst, const PackingSolution& sol, const RenderOptions& opts) {
    const double n = inst.side();
    const double margin = 12.0;
    const double s = opts.size_px / n;
    const double full = opts.size_px + 2 * margin;
    auto X = [&](double x) { return format_number(margin + x * s); };
    auto Y = [&](double y) { return format_number(margin + (n - y) * s); };
    auto points_attr = [&](const std::vector<Point>& pts) {
        std::string out;
        for (const auto& p : pts) {
            if (!out.empty()) out += ' ';
            out += X(p.x) + "," + Y(p.y);
        }
        return out;
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_number(full)
       << "\" height=\"" << format_number(full) << "\" viewBox=\"0 0 " << format_number(full) << ' '
       << format_number(full) << "\">\n";
    os << "  <rect x=\"" << X(0) << "\" y=\"" << Y(n) << "\" width=\"" << format_number(n * s) << "\" height=\""
       << format_number(n * s) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    if (opts.containers) {
        for (const auto& c : build_containers(inst.n())) {
            std::vector<Point> pts(c.corners.begin(), c.corners.end());
            os << "  <polygon class=\"container\" points=\"" << points_attr(pts)
               << "\" fill=\"none\" stroke=\"#7a7a7a\" stroke-dasharray=\"4 3\" stroke-width=\"0.8\">"
               << "<title>" << (c.which == ContainerSide::R ? "R" : "R'") << ' ' << c.j << "</title></polygon>\n";
        }
    }
    if (opts.midline) {
        const Point pl{0, n / 2}, pm{n / 2, n / 2}, pr{n, n / 2};
        os << "  <line x1=\"" << X(pl.x) << "\" y1=\"" << Y(pl.y) << "\" x2=\"" << X(pr.x) << "\" y2=\"" << Y(pr.y)
           << "\" stroke=\"#3060c0\" stroke-width=\"1\"/>\n";
        const std::pair<Point, const char*> marks[] = {{pl, "L"}, {pm, "M"}, {pr, "R"}};
        for (const auto& [p, name] : marks) {
            os << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"3\" fill=\"#3060c0\"/>\n";
            os << "  <text x=\"" << X(p.x) << "\" y=\"" << format_number(margin + (n - p.y) * s - 5)
               << "\" font-size=\"10\" fill=\"#3060c0\">p" << name << "</text>\n";
        }
    }

    for (const auto& e : sol.entries) {
        const Item* it = inst.find(e.id);
        if (!it) continue;
        std::vector<Point> pts = placed_vertices(inst, e);
        double hue = std::fmod(e.id * 137.508, 360.0);
        if (opts.group_colors) {
            Classification c = classify_polygon(it->shape, n, it->id);
            int key = !c.group ? -100 : c.group->kind == GroupKind::NegInfinity ? -50 : c.group->j;
            hue = std::fmod(std::abs(key) * 47.0 + (c.cls == PolyClass::Easy ? 200.0 : 0.0), 360.0);
        }
        os << "  <polygon points=\"" << points_attr(pts) << "\" fill=\"hsl(" << format_number(std::round(hue))
           << ",60%,65%)\" fill-opacity=\"0.8\" stroke=\"#222\" stroke-width=\"0.8\"/>\n";
        Point c = vertex_centroid(pts);
        os << "  <text x=\"" << X(c.x) << "\" y=\"" << Y(c.y)
           << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#111\">"
           << xml_escape(std::to_string(e.id) + "/" + format_number(it->weight)) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace polypack
