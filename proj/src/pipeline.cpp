#include "polypack/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>

#include "polypack/easy_solver.hpp"
#include "polypack/hard_enum.hpp"
#include "polypack/medium_solver.hpp"
#include "polypack/triangle_dp.hpp"

namespace polypack {

int thread_budget() {
    if (const char* env = std::getenv("POLYPACK_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 64));
    }
    return 1;
}

double ra_factor_for(const SolveOptions& opts) { return opts.mode == SolveMode::Augmented ? 1.0 + opts.delta : 1.0; }

PackingSolution solve_full(const Instance& inst, const SolveOptions& opts, SolveReport* report) {
    const SolverConfig& cfg = inst.config();
    SolveReport rep;
    rep.classes = classify_all(inst);
    std::vector<int> easy, medium, hard, all;
    for (const auto& c : rep.classes) {
        all.push_back(c.id);
        if (c.cls == PolyClass::Easy) easy.push_back(c.id);
        else if (c.cls == PolyClass::Medium) medium.push_back(c.id);
        else hard.push_back(c.id);
    }
    rep.hard_triangles_only = !hard.empty();
    for (int id : hard) rep.hard_triangles_only = rep.hard_triangles_only && inst.at(id).shape.size() == 3;
    const std::string hard_route = rep.hard_triangles_only ? "hard=triangle" : "hard=enum";

    std::vector<std::function<PackingSolution()>> jobs;
    jobs.push_back([&] { return solve_easy(inst, easy, cfg.eps); });
    jobs.push_back([&] { return solve_medium(inst, medium, cfg.eps); });
    if (rep.hard_triangles_only) {
        jobs.push_back([&] { return solve_hard_triangles(inst, hard, cfg); });
    } else {
        jobs.push_back([&] { return solve_hard_enum(inst, hard, cfg); });
    }
    // Small instances also get one enumeration across all classes at once.
    if (inst.size() <= static_cast<std::size_t>(cfg.hard_budget) && inst.size() > 1) {
        jobs.push_back([&] {
            PackingSolution s = solve_hard_enum(inst, all, cfg);
            s.dispatch = "mixed=enum";
            return s;
        });
    }
    if (opts.mode == SolveMode::Augmented) {
        jobs.push_back([&] { return solve_hard_ra(inst, opts.delta, cfg); });
    }

    const int threads = opts.threads > 0 ? opts.threads : thread_budget();
    std::vector<PackingSolution> out(jobs.size());
    if (threads <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k]();
    } else {
        std::vector<std::future<PackingSolution>> fut;
        std::size_t next = 0;
        while (next < jobs.size()) {
            fut.clear();
            std::size_t start = next;
            for (; next < jobs.size() && next - start < static_cast<std::size_t>(threads); ++next) {
                fut.push_back(std::async(std::launch::async, jobs[next]));
            }
            for (std::size_t k = 0; k < fut.size(); ++k) out[start + k] = fut[k].get();
        }
    }

    std::size_t win = 0;
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (out[k].total_weight > out[win].total_weight) win = k;
    }
    PackingSolution best = out[win];
    std::string note = "classes=E" + std::to_string(easy.size()) + "/M" + std::to_string(medium.size()) + "/H" +
                       std::to_string(hard.size()) + " " + hard_route;
    if (!best.dispatch.empty() && best.dispatch != hard_route) note += " winner=" + best.dispatch;
    best.dispatch = note;
    rep.candidates = std::move(out);
    if (report) *report = std::move(rep);
    return best;
}

}  // namespace polypack
