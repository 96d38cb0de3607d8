#include "polypack/model.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "polypack/errors.hpp"

namespace polypack {

namespace {

constexpr std::array<std::pair<Producer, std::string_view>, 10> kProducerNames{{
    {Producer::None, "None"},
    {Producer::Easy, "Easy"},
    {Producer::Medium, "Medium"},
    {Producer::HardEnum, "HardEnum"},
    {Producer::TriangleTL, "TriangleTL"},
    {Producer::TriangleBR, "TriangleBR"},
    {Producer::TriangleCorner, "TriangleCorner"},
    {Producer::SingleMax, "SingleMax"},
    {Producer::Oracle, "Oracle"},
    {Producer::RA, "RA"},
}};

// Smallest projection overlap over all edge normals; <= 0 when separated.
double penetration(std::span<const Point> a, std::span<const Point> b) {
    double best = std::numeric_limits<double>::infinity();
    for (auto ring : {a, b}) {
        for (std::size_t i = 0, k = ring.size(); i < k; ++i) {
            Point e = ring[(i + 1) % k] - ring[i];
            Point axis = (1.0 / norm(e)) * Point{-e.y, e.x};
            double amin = std::numeric_limits<double>::infinity(), amax = -amin;
            double bmin = amin, bmax = -amin;
            for (const auto& v : a) {
                amin = std::min(amin, dot(axis, v));
                amax = std::max(amax, dot(axis, v));
            }
            for (const auto& v : b) {
                bmin = std::min(bmin, dot(axis, v));
                bmax = std::max(bmax, dot(axis, v));
            }
            best = std::min(best, std::min(amax, bmax) - std::max(amin, bmin));
        }
    }
    return best;
}

}  // namespace

Instance::Instance(std::int64_t n, std::vector<PolygonInput> polygons, SolverConfig cfg)
    : n_(n), cfg_(cfg) {
    if (n < 1) throw Error("knapsack side must be at least 1");
    std::set<int> seen;
    items_.reserve(polygons.size());
    for (auto& p : polygons) {
        if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
            throw Error("polygon " + std::to_string(p.id) + " has a non-positive weight");
        }
        if (!seen.insert(p.id).second) throw Error("duplicate polygon id " + std::to_string(p.id));
        std::vector<Point> ring = p.vertices;
        if (polygon_area(ring) < 0) std::reverse(ring.begin() + 1, ring.end());
        Item it;
        it.id = p.id;
        it.weight = p.weight;
        it.shape = canonicalize(ConvexPolygon::from_vertices(std::move(ring)));
        it.original = std::move(p.vertices);
        items_.push_back(std::move(it));
    }
}

const Item* Instance::find(int id) const {
    for (const auto& it : items_) {
        if (it.id == id) return &it;
    }
    return nullptr;
}

const Item& Instance::at(int id) const {
    const Item* it = find(id);
    if (!it) throw UnknownId(id);
    return *it;
}

Instance Instance::subset(const std::vector<int>& ids) const {
    Instance out;
    out.n_ = n_;
    out.cfg_ = cfg_;
    for (int id : ids) out.items_.push_back(at(id));
    return out;
}

std::string_view to_string(Producer p) {
    for (const auto& [k, name] : kProducerNames) {
        if (k == p) return name;
    }
    return "None";
}

std::optional<Producer> producer_from_string(std::string_view s) {
    for (const auto& [k, name] : kProducerNames) {
        if (name == s) return k;
    }
    return std::nullopt;
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Overlap: return "Overlap";
        case ViolationKind::OutOfKnapsack: return "OutOfKnapsack";
        case ViolationKind::DuplicateId: return "DuplicateId";
    }
    return "Overlap";
}

PackingSolution make_solution(const Instance& inst, std::vector<SolutionEntry> entries, Producer producer) {
    PackingSolution sol;
    sol.producer = producer;
    for (const auto& e : entries) sol.total_weight += inst.at(e.id).weight;
    sol.entries = std::move(entries);
    return sol;
}

std::vector<Point> placed_vertices(const Instance& inst, const SolutionEntry& e) {
    const auto& shape = inst.at(e.id).shape;
    return apply_placement(shape.vertices(), shape[0], e.placement);
}

ValidationReport validate_solution(const Instance& inst, const PackingSolution& sol, double ra_factor) {
    ValidationReport rep;
    const double side = ra_factor * inst.side();
    const double tol = tolerance_for(side);
    const Rect box{0.0, 0.0, side, side};

    std::vector<std::vector<Point>> shrunk;
    std::vector<int> ids;
    std::set<int> seen;
    for (const auto& e : sol.entries) {
        auto pts = placed_vertices(inst, e);
        if (!seen.insert(e.id).second) {
            rep.violations.push_back({ViolationKind::DuplicateId, {e.id}, 0.0});
        }
        if (!contains(box, pts, tol)) {
            Rect b = bounding_box(pts);
            double excess = std::max({-b.x, -b.y, b.x + b.w - side, b.y + b.h - side});
            rep.violations.push_back({ViolationKind::OutOfKnapsack, {e.id}, excess});
        }
        shrunk.push_back(eroded(pts, tol));
        ids.push_back(e.id);
    }
    for (std::size_t i = 0; i < shrunk.size(); ++i) {
        for (std::size_t j = i + 1; j < shrunk.size(); ++j) {
            if (interiors_overlap(shrunk[i], shrunk[j])) {
                rep.violations.push_back({ViolationKind::Overlap,
                                          {std::min(ids[i], ids[j]), std::max(ids[i], ids[j])},
                                          penetration(shrunk[i], shrunk[j])});
            }
        }
    }
    rep.feasible = rep.violations.empty();
    return rep;
}

}  // namespace polypack
