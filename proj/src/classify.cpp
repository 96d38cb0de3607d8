#include "polypack/classify.hpp"

#include <cmath>
#include <numbers>

namespace polypack {

namespace {

// Within this fraction of N a value counts as sitting on a boundary.
constexpr double kSnapRel = 1e-12;

int ceil_log2(std::int64_t n) {
    int k = 0;
    while ((std::int64_t{1} << k) < n) ++k;
    return k;
}

}  // namespace

std::string_view to_string(PolyClass c) {
    switch (c) {
        case PolyClass::Easy: return "Easy";
        case PolyClass::Medium: return "Medium";
        case PolyClass::Hard: return "Hard";
    }
    return "Easy";
}

std::string Group::str() const { return kind == GroupKind::NegInfinity ? "-inf" : std::to_string(j); }

bool group_less(const Group& a, const Group& b) {
    if (a.kind != b.kind) return a.kind == GroupKind::NegInfinity;
    return a.kind == GroupKind::Finite && a.j < b.j;
}

std::optional<Group> group_of(double diameter, double n) {
    const double snap = kSnapRel * n;
    const double g = std::numbers::sqrt2 * n - diameter;
    if (std::abs(g) <= snap) return Group{GroupKind::NegInfinity, 0};
    if (g < 0) return std::nullopt;
    // Bucket j holds g in (2^(j-1), 2^j]; near-powers of two snap onto the boundary.
    const int r = static_cast<int>(std::lround(std::log2(g)));
    if (std::abs(g - std::ldexp(1.0, r)) <= snap) return Group{GroupKind::Finite, r};
    int j = static_cast<int>(std::ceil(std::log2(g)));
    while (std::ldexp(1.0, j) < g) ++j;
    while (std::ldexp(1.0, j - 1) >= g) --j;
    return Group{GroupKind::Finite, j};
}

Classification classify_polygon(const ConvexPolygon& canonical, double n, int id) {
    Classification c;
    c.id = id;
    c.diameter = canonical.diameter_len();
    c.height = canonical.height();
    c.h_prime = std::numbers::sqrt2 * n - c.diameter;
    const double lim = n * (1.0 + kSnapRel);
    if (c.diameter <= lim && c.height <= lim) {
        c.cls = PolyClass::Easy;
        return c;
    }
    c.cls = c.height <= c.h_prime / 8.0 ? PolyClass::Medium : PolyClass::Hard;
    c.group = group_of(c.diameter, n);
    return c;
}

std::vector<Classification> classify_all(const Instance& inst) {
    std::vector<Classification> out;
    out.reserve(inst.size());
    for (const auto& it : inst.items()) out.push_back(classify_polygon(it.shape, inst.side(), it.id));
    return out;
}

std::pair<int, int> hard_group_range(std::int64_t n) {
    const int j_min = -ceil_log2(n);
    const double x = (std::numbers::sqrt2 - 1.0) * static_cast<double>(n);
    const int j_max = 1 + static_cast<int>(std::ceil(std::log2(x)));
    return {j_min, j_max};
}

}  // namespace polypack
