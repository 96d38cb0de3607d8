#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypack/model.hpp"

namespace polypack {

enum class PolyClass { Easy, Medium, Hard };

std::string_view to_string(PolyClass c);

enum class GroupKind { Finite, NegInfinity };

// Dyadic bucket of sqrt(2)N - diameter; NegInfinity when the diameter
// equals the knapsack diagonal.
struct Group {
    GroupKind kind = GroupKind::Finite;
    int j = 0;

    bool operator==(const Group&) const = default;
    std::string str() const;
};

struct Classification {
    int id = 0;
    PolyClass cls = PolyClass::Easy;
    // Set for non-easy polygons whose diameter fits the diagonal.
    std::optional<Group> group;
    double h_prime = 0.0;  // sqrt(2)N - diameter
    double diameter = 0.0;
    double height = 0.0;
};

// Group of a diameter in a knapsack of side n; nullopt past the diagonal.
std::optional<Group> group_of(double diameter, double n);

Classification classify_polygon(const ConvexPolygon& canonical, double n, int id = 0);
std::vector<Classification> classify_all(const Instance& inst);

// (j_min, j_max) for hard groups in a knapsack of integer side n.
std::pair<int, int> hard_group_range(std::int64_t n);

// Ordering with NegInfinity first.
bool group_less(const Group& a, const Group& b);

}  // namespace polypack
