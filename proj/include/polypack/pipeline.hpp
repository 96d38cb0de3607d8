#pragma once

#include <vector>

#include "polypack/classify.hpp"
#include "polypack/model.hpp"

namespace polypack {

enum class SolveMode { Exact, Augmented };

struct SolveOptions {
    SolveMode mode = SolveMode::Exact;
    double delta = 0.25;  // used in Augmented mode
    int threads = 0;      // 0: POLYPACK_THREADS or 1
};

struct SolveReport {
    std::vector<Classification> classes;
    std::vector<PackingSolution> candidates;  // in tie-break order
    bool hard_triangles_only = false;
};

// POLYPACK_THREADS when set to a positive integer, else 1.
int thread_budget();

// Runs the per-class solvers and keeps the heaviest result; ties go to the
// earlier candidate. In Augmented mode the result is feasible for a knapsack
// of side (1 + delta) N.
PackingSolution solve_full(const Instance& inst, const SolveOptions& opts = {}, SolveReport* report = nullptr);

double ra_factor_for(const SolveOptions& opts);

}  // namespace polypack
