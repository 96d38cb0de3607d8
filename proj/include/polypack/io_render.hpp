#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "polypack/model.hpp"

namespace polypack {

// Instance text:
//   knapsack <N>
//   poly <id> w=<weight> v= x1,y1 x2,y2 ...
// Blank lines and lines starting with '#' are ignored.
Instance parse_instance(std::string_view text, const SolverConfig& cfg = {});
std::string serialize_instance(const Instance& inst);

// Solution text:
//   place <id> <dx> <dy> <cos> <sin>
//   producer <name>
//   dispatch <note>
//   version <stamp>
//   weight <total>
PackingSolution parse_solution(std::string_view text);
std::string serialize_solution(const PackingSolution& sol);

inline constexpr std::string_view kVersion = "polypack 1.0";

std::string format_number(double v);

struct ClassCounts {
    int easy = 0;
    int medium = 0;
    int hard = 0;
};

enum class Profile { Mixed, NearDiagonal, Triangles };

std::string_view to_string(Profile p);
Profile profile_from_string(std::string_view s);  // throws Error

// Deterministic for a given seed; every polygon is checked against its
// requested class. Throws GenerationFailed when retries run out.
Instance generate_instance(std::uint64_t seed, std::int64_t n, ClassCounts counts, Profile profile = Profile::Mixed,
                           const SolverConfig& cfg = {});

struct RenderOptions {
    double size_px = 640.0;
    bool containers = false;    // the 45-degree medium containers
    bool midline = false;       // the horizontal midline and its marked points
    bool group_colors = false;  // fill by group instead of by id
};

std::string render_svg(const Instance& inst, const PackingSolution& sol, const RenderOptions& opts = {});

}  // namespace polypack
