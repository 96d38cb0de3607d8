#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polypack/classify.hpp"
#include "polypack/errors.hpp"
#include "polypack/io_render.hpp"
#include "polypack/oracle.hpp"
#include "polypack/pipeline.hpp"

namespace fs = std::filesystem;
using namespace polypack;

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kInfeasible = 2;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) throw IoFailure("cannot write " + path);
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string fixed(double v, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

int cmd_classify(const std::string& in) {
    Instance inst = load_instance(in);
    auto [jlo, jhi] = hard_group_range(inst.n());
    std::cout << "# N=" << inst.n() << " hard groups in [" << jlo << ", " << jhi << "]\n";
    std::cout << "id\tclass\tgroup\tdiameter\theight\tslack\n";
    for (const auto& c : classify_all(inst)) {
        std::cout << c.id << '\t' << to_string(c.cls) << '\t' << (c.group ? c.group->str() : "-") << '\t'
                  << fixed(c.diameter, 6) << '\t' << fixed(c.height, 6) << '\t' << fixed(c.h_prime, 6) << '\n';
    }
    return kOk;
}

int report_validation(const Instance& inst, const PackingSolution& sol, double ra) {
    ValidationReport rep = validate_solution(inst, sol, ra);
    if (rep.feasible) {
        std::cout << "feasible weight " << format_number(sol.total_weight) << '\n';
        return kOk;
    }
    for (const auto& v : rep.violations) {
        std::cout << to_string(v.kind) << " ids";
        for (int id : v.ids) std::cout << ' ' << id;
        std::cout << " magnitude " << format_number(v.magnitude) << '\n';
    }
    return kInfeasible;
}

int cmd_solve(const std::string& in, const std::string& mode, double delta, const std::string& out,
              const std::string& svg) {
    Instance inst = load_instance(in);
    SolveOptions opts;
    if (mode == "ra") {
        opts.mode = SolveMode::Augmented;
        opts.delta = delta;
    } else if (mode != "exact") {
        throw IoFailure("unknown mode " + mode);
    }
    PackingSolution sol = solve_full(inst, opts);
    const std::string text = serialize_solution(sol);
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    if (!svg.empty()) write_file(svg, render_svg(inst, sol));
    ValidationReport rep = validate_solution(inst, sol, ra_factor_for(opts));
    if (!rep.feasible) {
        std::cerr << "solver produced an infeasible packing\n";
        return kInfeasible;
    }
    return kOk;
}

int cmd_validate(const std::string& in, const std::string& solpath, double ra) {
    Instance inst = load_instance(in);
    PackingSolution sol = parse_solution(read_file(solpath));
    return report_validation(inst, sol, ra);
}

int cmd_generate(std::uint64_t seed, std::int64_t n, ClassCounts counts, const std::string& profile,
                 const std::string& out) {
    Instance inst = generate_instance(seed, n, counts, profile_from_string(profile));
    std::string text = "# seed " + std::to_string(seed) + " profile " + profile + "\n" + serialize_instance(inst);
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    return kOk;
}

int cmd_oracle(const std::string& in, int grid, int max_n, const std::string& out) {
    Instance inst = load_instance(in);
    OracleReport rep;
    PackingSolution sol = brute_force_opt(inst, static_cast<std::size_t>(max_n), grid, &rep);
    const std::string text = serialize_solution(sol);
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    std::cerr << "oracle nodes " << rep.nodes << (rep.exhaustive ? "" : " (budget reached)") << '\n';
    return kOk;
}

int cmd_bench(const std::string& dir, int grid, const std::string& out) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".inst") files.push_back(e.path());
    }
    if (files.empty()) throw IoFailure("no .inst files in " + dir);
    std::sort(files.begin(), files.end());
    std::ostringstream os;
    os << "instance\tn\tsolve\toracle\tratio\tproducer\n";
    double sum = 0.0, lo = 1e300, hi = 0.0;
    auto start = std::chrono::steady_clock::now();
    for (const auto& f : files) {
        Instance inst = load_instance(f.string());
        PackingSolution s = solve_full(inst);
        PackingSolution o = brute_force_opt(inst, 3, grid);
        double ratio = o.total_weight > 0 ? s.total_weight / o.total_weight : (s.total_weight > 0 ? 2.0 : 1.0);
        sum += ratio;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        os << f.filename().string() << '\t' << inst.size() << '\t' << fixed(s.total_weight) << '\t'
           << fixed(o.total_weight) << '\t' << fixed(ratio) << '\t' << to_string(s.producer) << '\n';
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << "# instances " << files.size() << " min " << fixed(lo) << " mean " << fixed(sum / files.size())
       << " max " << fixed(hi) << " seconds " << fixed(secs, 1) << '\n';
    std::cout << os.str();
    if (!out.empty()) write_file(out, os.str());
    return kOk;
}

int cmd_render(const std::string& in, const std::string& solpath, const std::string& out, RenderOptions opts) {
    Instance inst = load_instance(in);
    PackingSolution sol = solpath.empty() ? PackingSolution{} : parse_solution(read_file(solpath));
    const std::string svg = render_svg(inst, sol, opts);
    if (out.empty()) std::cout << svg;
    else write_file(out, svg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex polygon knapsack packer"};
    app.require_subcommand(1);

    std::string in, solpath, out, svg, mode = "exact", profile = "mixed", dir;
    double delta = 0.25, ra = 1.0;
    std::uint64_t seed = 1;
    std::int64_t n = 16;
    ClassCounts counts;
    int grid = 256, max_n = 3;
    RenderOptions ropts;

    auto* classify = app.add_subcommand("classify", "Print class and group of every polygon");
    classify->add_option("instance", in)->required();

    auto* solve = app.add_subcommand("solve", "Pack an instance");
    solve->add_option("instance", in)->required();
    solve->add_option("--mode", mode, "exact or ra")->check(CLI::IsMember({"exact", "ra"}));
    solve->add_option("--delta", delta, "augmentation for --mode ra")->check(CLI::PositiveNumber);
    solve->add_option("--out", out, "solution file (default stdout)");
    solve->add_option("--svg", svg, "also render the packing");

    auto* validate = app.add_subcommand("validate", "Check a solution against an instance");
    validate->add_option("instance", in)->required();
    validate->add_option("solution", solpath)->required();
    validate->add_option("--ra", ra, "knapsack scale factor")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "Write a random instance");
    generate->add_option("--seed", seed);
    generate->add_option("--n", n, "knapsack side")->check(CLI::PositiveNumber);
    generate->add_option("--easy", counts.easy)->check(CLI::NonNegativeNumber);
    generate->add_option("--medium", counts.medium)->check(CLI::NonNegativeNumber);
    generate->add_option("--hard", counts.hard)->check(CLI::NonNegativeNumber);
    generate->add_option("--profile", profile)->check(CLI::IsMember({"mixed", "near_diagonal", "triangles"}));
    generate->add_option("--out", out);

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference packing for tiny instances");
    oracle->add_option("instance", in)->required();
    oracle->add_option("--fine-grid", grid)->check(CLI::PositiveNumber);
    oracle->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    oracle->add_option("--out", out);

    auto* bench = app.add_subcommand("bench", "Solver against oracle on every .inst file in a directory");
    bench->add_option("dir", dir)->required();
    bench->add_option("--fine-grid", grid)->check(CLI::PositiveNumber);
    bench->add_option("--out", out, "also write the table here");

    auto* render = app.add_subcommand("render", "Draw a packing as SVG");
    render->add_option("instance", in)->required();
    render->add_option("solution", solpath);
    render->add_option("--out", out);
    render->add_flag("--containers", ropts.containers);
    render->add_flag("--midline", ropts.midline);
    render->add_flag("--groups", ropts.group_colors);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kIoError;
    }

    try {
        if (*classify) return cmd_classify(in);
        if (*solve) return cmd_solve(in, mode, delta, out, svg);
        if (*validate) return cmd_validate(in, solpath, ra);
        if (*generate) return cmd_generate(seed, n, counts, profile, out);
        if (*oracle) return cmd_oracle(in, grid, max_n, out);
        if (*bench) return cmd_bench(dir, grid, out);
        if (*render) return cmd_render(in, solpath, out, ropts);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kIoError;
    } catch (const IoFailure& e) {
        std::cerr << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kIoError;
}
