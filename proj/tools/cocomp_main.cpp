// cocomp: generate, order, verify and benchmark LexDFS cocomparability
// orderings. Exit codes: 0 pass, 1 verification failure, 2 usage/IO error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocomp/generate.hpp"
#include "cocomp/graph.hpp"
#include "cocomp/lexdfs.hpp"
#include "cocomp/partition.hpp"
#include "cocomp/refine.hpp"
#include "cocomp/verify.hpp"

namespace {

constexpr cocomp::vertex_t exact_check_limit = 4096;
constexpr std::uint64_t spot_check_samples = 500000;

std::string render_segments(const std::vector<std::vector<cocomp::vertex_t>>& segs) {
    std::string out = "(";
    for (const auto& seg : segs) {
        out += "(";
        for (std::size_t i = 0; i < seg.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(seg[i]);
        }
        out += ")";
    }
    out += ")";
    return out;
}

void print_traces(std::ostream& os, const cocomp::PartitionTrace& pt,
                  const cocomp::RefineTrace& rt) {
    os << "# partition classes: index label members\n";
    for (const auto& step : pt.classes) {
        os << (step.cls + 1) << ' ' << step.min_label;
        for (auto v : step.members) os << ' ' << v;
        os << '\n';
    }
    os << "# refinement\n";
    for (const auto& step : rt.classes) {
        os << "class " << (step.cls + 1) << " stack";
        if (step.stack_top_first.empty()) os << " -";
        for (auto v : step.stack_top_first) os << ' ' << v;
        os << '\n';
        for (const auto& piv : step.pivots)
            os << "class " << (step.cls + 1) << " pivot " << piv.pivot << ' '
               << render_segments(piv.segments) << '\n';
        os << "class " << (step.cls + 1) << " tau";
        for (auto v : step.fragment) os << ' ' << v;
        os << '\n';
    }
}

int cmd_gen(const std::string& fixture, std::uint64_t n, double p, std::uint64_t seed,
            const std::string& gen_kind, cocomp::vertex_t width, double q,
            const std::string& out_graph, const std::string& out_sigma) {
    cocomp::Graph g;
    cocomp::Ordering sigma;
    if (!fixture.empty()) {
        auto which = cocomp::fixture_by_name(fixture);
        if (!which) {
            std::cerr << "unknown fixture: " << fixture << " (use fig1 or fig2)\n";
            return 2;
        }
        std::tie(g, sigma) = cocomp::gen_fixture(*which);
    } else if (gen_kind == "layered") {
        std::tie(g, sigma) = cocomp::gen_layered_cocomp(
            {static_cast<cocomp::vertex_t>(n), width, q, seed});
    } else {
        std::tie(g, sigma) =
            cocomp::gen_random_cocomp({static_cast<cocomp::vertex_t>(n), p, seed});
    }
    if (!out_graph.empty()) cocomp::save_graph_file(out_graph, g);
    if (!out_sigma.empty()) cocomp::save_ordering_file(out_sigma, sigma);
    std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
    return 0;
}

int cmd_run(const std::string& graph_path, const std::string& sigma_path, bool plus,
            const std::string& out_path, bool trace, bool against_oracle) {
    if (against_oracle && !plus) {
        std::cerr << "--against-oracle requires --plus\n";
        return 2;
    }
    cocomp::Graph g = cocomp::load_graph_file(graph_path);
    cocomp::Ordering sigma = cocomp::load_ordering_file(sigma_path, g.num_vertices());

    cocomp::PartitionTrace pt;
    cocomp::RefineTrace rt;
    auto result = cocomp::cclexdfs(g, sigma, plus ? cocomp::Mode::Plus : cocomp::Mode::Default,
                                   trace ? &pt : nullptr, trace ? &rt : nullptr);

    if (trace) print_traces(out_path.empty() ? std::cerr : std::cout, pt, rt);
    if (out_path.empty())
        cocomp::save_ordering(std::cout, result.tau);
    else
        cocomp::save_ordering_file(out_path, result.tau);

    if (against_oracle && !(lexdfs_plus_oracle(g, sigma) == result.tau)) {
        std::cerr << "oracle mismatch\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& ordering_path,
               const std::string& checks_csv, const std::string& sigma_path, bool plus,
               bool against_oracle) {
    cocomp::Graph g = cocomp::load_graph_file(graph_path);
    cocomp::Ordering ord = cocomp::load_ordering_file(ordering_path, g.num_vertices());

    std::vector<std::string> checks;
    {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) checks.push_back(item);
        }
    }

    bool need_sigma = against_oracle;
    for (const auto& c : checks) need_sigma |= (c == "flip" || c == "partition");
    cocomp::Ordering sigma;
    if (need_sigma) {
        if (sigma_path.empty()) {
            std::cerr << "--sigma is required for flip/partition checks\n";
            return 2;
        }
        sigma = cocomp::load_ordering_file(sigma_path, g.num_vertices());
    }

    const bool exact = g.num_vertices() <= exact_check_limit;
    if (!exact) std::cerr << "large instance: running sampled spot-checks\n";

    for (const auto& c : checks) {
        cocomp::CheckResult res;
        if (c == "umbrella") {
            res = exact ? cocomp::check_umbrella_free(g, ord)
                        : cocomp::check_umbrella_free_sampled(g, ord, spot_check_samples, 1);
        } else if (c == "4pc") {
            res = exact ? cocomp::check_4pc(g, ord)
                        : cocomp::check_4pc_sampled(g, ord, spot_check_samples, 1);
        } else if (c == "flip") {
            res = exact ? cocomp::check_flipping(g, sigma, ord)
                        : cocomp::check_flipping_sampled(g, sigma, ord, spot_check_samples, 1);
        } else if (c == "partition") {
            auto part = cocomp::build_partition_classes(
                g, sigma, plus ? cocomp::ClassOrder::SigmaReverse : cocomp::ClassOrder::Sigma);
            res = cocomp::check_partition(g, sigma, part);
        } else {
            std::cerr << "unknown check: " << c << '\n';
            return 2;
        }
        if (res) {
            std::cout << res->str() << '\n';
            return 1;
        }
    }

    if (against_oracle) {
        cocomp::Ordering oracle = cocomp::lexdfs_plus_oracle(g, sigma);
        if (!(oracle == ord)) {
            std::cout << "oracle-mismatch\n";
            return 1;
        }
    }
    return 0;
}

int cmd_bench(const std::string& sizes_csv, double p, std::uint32_t seeds,
              const std::string& mode, const std::string& csv_path, const std::string& gen_kind,
              cocomp::vertex_t width, double q, std::uint64_t seed0) {
    std::vector<std::uint64_t> sizes;
    {
        std::stringstream ss(sizes_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) sizes.push_back(std::stoull(item));
        }
    }
    if (sizes.empty()) {
        std::cerr << "--sizes must list at least one size\n";
        return 2;
    }
    const bool plus = mode == "plus";

    bool need_header = true;
    if (std::filesystem::exists(csv_path) && std::filesystem::file_size(csv_path) > 0)
        need_header = false;
    std::ofstream csv(csv_path, std::ios::app);
    if (!csv) {
        std::cerr << "cannot write csv: " << csv_path << '\n';
        return 2;
    }
    if (need_header)
        csv << "n,m,mode,ns,label_touches,bin_moves,pivot_pushes,refine_moves,seed\n";

    for (std::uint64_t n : sizes) {
        for (std::uint32_t s = 0; s < seeds; ++s) {
            const std::uint64_t seed = seed0 + s;
            cocomp::Graph g;
            cocomp::Ordering sigma;
            if (gen_kind == "dag")
                std::tie(g, sigma) =
                    cocomp::gen_random_cocomp({static_cast<cocomp::vertex_t>(n), p, seed});
            else
                std::tie(g, sigma) = cocomp::gen_layered_cocomp(
                    {static_cast<cocomp::vertex_t>(n), width, q, seed});

            auto t0 = std::chrono::steady_clock::now();
            auto result =
                cocomp::cclexdfs(g, sigma, plus ? cocomp::Mode::Plus : cocomp::Mode::Default);
            auto t1 = std::chrono::steady_clock::now();
            auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();

            const auto& c = result.counters;
            csv << g.num_vertices() << ',' << g.num_edges() << ',' << (plus ? "plus" : "default")
                << ',' << ns << ',' << c.label_touches << ',' << c.bin_moves << ','
                << c.pivot_pushes << ',' << c.refine_moves << ',' << seed << '\n';
            std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << " ns=" << ns
                      << " counters=" << c.pipeline_total() << " bound=" << 8 * (g.num_vertices() + g.num_edges())
                      << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LexDFS cocomparability ordering toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a (graph, sigma) pair");
    std::string fixture, gen_kind = "dag", out_graph, out_sigma;
    std::uint64_t gen_n = 0, gen_seed = 1;
    double gen_p = 0.5, gen_q = 0.5;
    cocomp::vertex_t gen_width = 8;
    gen->add_option("--fixture", fixture, "named fixture: fig1 or fig2");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "pre-closure arc probability (dag generator)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--gen", gen_kind, "generator: dag or layered")
        ->check(CLI::IsMember({"dag", "layered"}));
    gen->add_option("--width", gen_width, "layer width (layered generator)");
    gen->add_option("--q", gen_q, "adjacent-layer arc probability (layered generator)");
    gen->add_option("--out-graph", out_graph, "graph output path");
    gen->add_option("--out-sigma", out_sigma, "sigma output path");

    // run
    auto* run = app.add_subcommand("run", "compute the LexDFS cocomparability ordering");
    std::string run_graph, run_sigma, run_out;
    bool run_plus = false, run_trace = false, run_oracle = false;
    run->add_option("--graph", run_graph, "graph file")->required();
    run->add_option("--sigma", run_sigma, "cocomparability ordering file")->required();
    run->add_flag("--plus", run_plus, "plus mode (rightmost tie-breaking against sigma)");
    run->add_option("--out", run_out, "output ordering path (default stdout)");
    run->add_flag("--trace", run_trace, "emit partition and refinement traces");
    run->add_flag("--against-oracle", run_oracle)->group(""); // hidden
    if (const char* env = std::getenv("COCOMP_TRACE"); env && std::string(env) == "1")
        run_trace = true;

    // verify
    auto* verify = app.add_subcommand("verify", "check an ordering against the definitions");
    std::string ver_graph, ver_ordering, ver_checks = "umbrella,4pc", ver_sigma;
    bool ver_plus = false, ver_oracle = false;
    verify->add_option("--graph", ver_graph, "graph file")->required();
    verify->add_option("--ordering", ver_ordering, "ordering to check")->required();
    verify->add_option("--checks", ver_checks, "comma list: umbrella,4pc,flip,partition");
    verify->add_option("--sigma", ver_sigma, "reference sigma (flip/partition)");
    verify->add_flag("--plus", ver_plus, "partition check in plus-mode class order");
    verify->add_flag("--against-oracle", ver_oracle)->group(""); // hidden

    // bench
    auto* bench = app.add_subcommand("bench", "linearity benchmark, one CSV row per run");
    std::string bench_sizes, bench_mode = "default", bench_csv, bench_gen = "layered";
    double bench_p = 0.3, bench_q = 0.5;
    std::uint32_t bench_seeds = 1;
    std::uint64_t bench_seed0 = 1;
    cocomp::vertex_t bench_width = 8;
    bench->add_option("--sizes", bench_sizes, "comma list of vertex counts")->required();
    bench->add_option("--p", bench_p, "dag generator density");
    bench->add_option("--seeds", bench_seeds, "seeds per size");
    bench->add_option("--seed0", bench_seed0, "first seed value");
    bench->add_option("--mode", bench_mode, "default or plus")
        ->check(CLI::IsMember({"default", "plus"}));
    bench->add_option("--csv", bench_csv, "CSV output path")->required();
    bench->add_option("--gen", bench_gen, "generator: layered or dag")
        ->check(CLI::IsMember({"dag", "layered"}));
    bench->add_option("--width", bench_width, "layer width (layered generator)");
    bench->add_option("--q", bench_q, "adjacent-layer arc probability (layered generator)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (fixture.empty() && gen_n == 0) {
                std::cerr << "gen requires --fixture or --n\n";
                return 2;
            }
            return cmd_gen(fixture, gen_n, gen_p, gen_seed, gen_kind, gen_width, gen_q,
                           out_graph, out_sigma);
        }
        if (run->parsed())
            return cmd_run(run_graph, run_sigma, run_plus, run_out, run_trace, run_oracle);
        if (verify->parsed())
            return cmd_verify(ver_graph, ver_ordering, ver_checks, ver_sigma, ver_plus,
                              ver_oracle);
        if (bench->parsed())
            return cmd_bench(bench_sizes, bench_p, bench_seeds, bench_mode, bench_csv, bench_gen,
                             bench_width, bench_q, bench_seed0);
    } catch (const cocomp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
