// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Each criterion pins its tolerances in code; wall-clock linearity is
// reported but never asserted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cocomp/generate.hpp"
#include "cocomp/graph.hpp"
#include "cocomp/lexdfs.hpp"
#include "cocomp/partition.hpp"
#include "cocomp/refine.hpp"
#include "cocomp/verify.hpp"

using namespace cocomp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << idx << ". " << name << " ("
              << static_cast<long>(seconds * 1000) << " ms)";
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << '\n';
    if (!pass) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F&& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(idx, name, pass, secs, detail);
}

std::vector<vertex_t> seq_of(const Ordering& ord) {
    return {ord.seq().begin(), ord.seq().end()};
}

std::string render_label(const LexLabel& label) {
    std::string out;
    for (auto it = label.stamps.rbegin(); it != label.stamps.rend(); ++it)
        out += std::to_string(*it);
    return out;
}

std::string show(const std::vector<vertex_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

// ---- criterion 1: fig1 run from a with the printed intermediate labels ----

bool criterion1(std::string& detail) {
    auto [g, sigma] = gen_fixture(Fixture::Fig1);
    std::map<std::pair<std::uint32_t, vertex_t>, std::string> labels;
    SearchHooks hooks;
    hooks.labeled = [&](std::uint32_t step, vertex_t w, const LexLabel& label) {
        labels[{step, w}] = render_label(label);
    };
    Ordering tau = lexdfs_from(g, 0, {TieBreak::LeftmostInRef, sigma}, &hooks);
    if (seq_of(tau) != std::vector<vertex_t>{0, 1, 2, 3, 4}) {
        detail = "ordering " + show(seq_of(tau)) + " != [0 1 2 3 4]";
        return false;
    }
    const std::vector<std::tuple<std::uint32_t, vertex_t, std::string>> expected = {
        {1, 1, "1"}, {1, 2, "1"}, {1, 3, "1"}, {2, 2, "21"}, {3, 3, "31"}, {3, 4, "3"},
    };
    for (auto& [step, v, want] : expected) {
        if (labels[{step, v}] != want) {
            detail = "label of " + std::to_string(v) + " after step " + std::to_string(step) +
                     " is \"" + labels[{step, v}] + "\", want \"" + want + "\"";
            return false;
        }
    }
    if (labels.size() != expected.size()) {
        detail = "unexpected extra label events";
        return false;
    }
    return true;
}

// ---- criterion 2: fig2 initial labelling ----

bool criterion2(std::string& detail) {
    auto [g, sigma] = gen_fixture(Fixture::Fig2);
    auto labels = compute_initial_labels(g, sigma).label;
    std::vector<std::uint32_t> want{7, 7, 7, 4, 5, 3, 3, 0, 2, 1, 0};
    if (labels != want) {
        std::ostringstream os;
        for (auto l : labels) os << l << ' ';
        detail = "labels " + os.str();
        return false;
    }
    return true;
}

// ---- criterion 3: fig2 classes with the increment trace ----

bool criterion3(std::string& detail) {
    auto [g, sigma] = gen_fixture(Fixture::Fig2);
    using Inc = std::tuple<vertex_t, std::uint32_t, std::uint32_t>;
    std::vector<std::uint32_t> mins;
    std::vector<std::multiset<Inc>> incs;
    PeelHooks hooks;
    hooks.class_selected = [&](std::uint32_t, std::uint32_t min_label,
                               std::span<const std::uint32_t>) {
        mins.push_back(min_label);
        incs.emplace_back();
    };
    hooks.incremented = [&](std::uint32_t cls, vertex_t u, std::uint32_t from, std::uint32_t to) {
        incs[cls].insert({u, from, to});
    };
    Partition part = build_partition_classes(g, sigma, ClassOrder::Sigma, nullptr, &hooks);

    std::vector<std::vector<vertex_t>> want_classes = {
        {7, 10}, {9}, {6, 8}, {3, 4, 5}, {0, 1, 2}};
    if (part.classes != want_classes) {
        detail = "classes differ";
        return false;
    }
    if (mins != std::vector<std::uint32_t>{0, 2, 3, 5, 8}) {
        detail = "class labels differ";
        return false;
    }
    std::vector<std::multiset<Inc>> want_incs = {
        {{9, 1, 2}, {8, 2, 3}, {5, 3, 4}},   // after {h,k}: j->2, i->3, f->4
        {},                                  // after {j}
        {{3, 4, 5}, {5, 4, 5}},              // after {g,i}: d->5, f->5
        {{0, 7, 8}, {1, 7, 8}, {2, 7, 8}},   // after {d,e,f}: a,b,c -> 8
        {},                                  // after {a,b,c}
    };
    if (incs != want_incs) {
        detail = "increment trace differs";
        return false;
    }
    return true;
}

// ---- criterion 4: table-2 refinement, stacks, layouts and final tau ----

bool criterion4(std::string& detail) {
    auto [g, sigma] = gen_fixture(Fixture::Fig2);
    Partition part;
    part.classes = {{7, 10}, {9}, {6, 8}, {3, 4, 5}, {2, 0, 1}};
    part.class_of.assign(11, 0);
    for (std::uint32_t i = 0; i < part.classes.size(); ++i)
        for (vertex_t v : part.classes[i]) part.class_of[v] = i;

    RefineTrace trace;
    Ordering tau = refine_partition(g, part, nullptr, &trace);

    std::vector<vertex_t> want_tau{7, 10, 9, 8, 6, 5, 3, 4, 1, 2, 0};
    if (seq_of(tau) != want_tau) {
        detail = "tau " + show(seq_of(tau)) + " != " + show(want_tau);
        return false;
    }

    using Layout = std::vector<std::vector<vertex_t>>;
    auto check_class = [&](std::size_t cls, std::vector<vertex_t> stack,
                           std::vector<Layout> layouts, std::vector<vertex_t> fragment) {
        const auto& step = trace.classes.at(cls);
        if (step.stack_top_first != stack) return false;
        if (step.pivots.size() != layouts.size()) return false;
        for (std::size_t i = 0; i < layouts.size(); ++i)
            if (step.pivots[i].segments != layouts[i]) return false;
        return step.fragment == fragment;
    };

    if (!check_class(0, {}, {}, {7, 10})) { detail = "class 1 trace"; return false; }
    if (!check_class(1, {7}, {Layout{{9}}}, {9})) { detail = "class 2 trace"; return false; }
    if (!check_class(2, {7}, {Layout{{8}, {6}}}, {8, 6})) { detail = "class 3 trace"; return false; }
    if (!check_class(3, {6, 7}, {Layout{{3, 5}, {4}}, Layout{{5}, {3}, {4}}}, {5, 3, 4})) {
        detail = "class 4 trace (want S4 pops g then h, tau4 = f,d,e)";
        return false;
    }
    if (!check_class(4, {4, 3}, {Layout{{1}, {2, 0}}, Layout{{1}, {2, 0}}}, {1, 2, 0})) {
        detail = "class 5 trace";
        return false;
    }
    return true;
}

// ---- criterion 5: worked refine example with per-pivot layouts ----

bool criterion5(std::string& detail) {
    using Layout = std::vector<std::vector<vertex_t>>;
    // ids: a=0 b=1 d=2 e=3 f=4; P = (b,a,f,e,d)
    ClassRefiner refiner(5);
    refiner.load(std::vector<vertex_t>{1, 0, 4, 3, 2});

    refiner.apply_pivot(std::vector<vertex_t>{1, 0, 3, 2});
    if (refiner.segments() != Layout{{1, 0, 3, 2}, {4}}) { detail = "layout after x"; return false; }
    refiner.apply_pivot(std::vector<vertex_t>{0, 4, 3});
    if (refiner.segments() != Layout{{0, 3}, {1, 2}, {4}}) { detail = "layout after y"; return false; }
    refiner.apply_pivot(std::vector<vertex_t>{1, 0});
    if (refiner.segments() != Layout{{0}, {3}, {1}, {2}, {4}}) { detail = "layout after z"; return false; }
    if (refiner.finish() != std::vector<vertex_t>{0, 3, 1, 2, 4}) {
        detail = "result != (a,e,b,d,f)";
        return false;
    }
    return true;
}

// ---- criterion 6: property suite over generated instances ----

bool criterion6(std::string& detail) {
    const double ps[4] = {0.1, 0.3, 0.5, 0.8};
    const int instances = 500;
    for (int i = 0; i < instances; ++i) {
        vertex_t n = 2 + static_cast<vertex_t>((static_cast<std::uint64_t>(i) * 198) / (instances - 1));
        auto [g, sigma] = gen_random_cocomp({n, ps[i % 4], 1000 + static_cast<std::uint64_t>(i)});
        for (Mode mode : {Mode::Default, Mode::Plus}) {
            auto result = cclexdfs(g, sigma, mode);
            if (auto v = check_umbrella_free(g, result.tau)) {
                detail = "instance " + std::to_string(i) + ": " + v->str();
                return false;
            }
            if (auto v = check_4pc(g, result.tau)) {
                detail = "instance " + std::to_string(i) + ": " + v->str();
                return false;
            }
            if (auto v = check_flipping(g, sigma, result.tau)) {
                detail = "instance " + std::to_string(i) + ": " + v->str();
                return false;
            }
            if (auto v = check_partition(g, sigma, result.partition)) {
                detail = "instance " + std::to_string(i) + ": " + v->str();
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 7: plus mode equals the oracle, exactly ----

bool criterion7(std::string& detail) {
    const double ps[4] = {0.1, 0.3, 0.5, 0.8};
    const int instances = 200;
    for (int i = 0; i < instances; ++i) {
        vertex_t n = 2 + static_cast<vertex_t>((static_cast<std::uint64_t>(i) * 498) / (instances - 1));
        auto [g, sigma] = gen_random_cocomp({n, ps[i % 4], 2000 + static_cast<std::uint64_t>(i)});
        auto result = cclexdfs(g, sigma, Mode::Plus);
        Ordering oracle = lexdfs_plus_oracle(g, sigma);
        if (!(result.tau == oracle)) {
            detail = "mismatch on instance " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
            return false;
        }
    }
    return true;
}

// ---- criterion 8: label-gap invariant at every peel step ----

bool criterion8(std::string& detail) {
    const double ps[4] = {0.1, 0.3, 0.5, 0.8};
    const int instances = 100;
    for (int i = 0; i < instances; ++i) {
        vertex_t n = 2 + static_cast<vertex_t>((static_cast<std::uint64_t>(i) * 98) / (instances - 1));
        auto [g, sigma] = gen_random_cocomp({n, ps[i % 4], 3000 + static_cast<std::uint64_t>(i)});

        std::vector<std::pair<vertex_t, vertex_t>> nonedges; // (earlier, later) in sigma
        {
            std::vector<std::uint8_t> edge(static_cast<std::size_t>(n) * n, 0);
            for (auto [u, v] : g.edges()) edge[u * n + v] = edge[v * n + u] = 1;
            for (vertex_t a = 0; a < n; ++a)
                for (vertex_t b = a + 1; b < n; ++b) {
                    vertex_t u = sigma.at(a), v = sigma.at(b);
                    if (!edge[u * n + v]) nonedges.emplace_back(u, v);
                }
        }

        bool ok = true;
        PeelHooks hooks;
        hooks.class_selected = [&](std::uint32_t, std::uint32_t,
                                   std::span<const std::uint32_t> labels) {
            for (auto [u, v] : nonedges)
                if (labels[u] <= labels[v]) ok = false;
        };
        build_partition_classes(g, sigma, ClassOrder::Sigma, nullptr, &hooks);
        if (!ok) {
            detail = "gap violated on instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 9: linearity by counters on the layered family ----

bool criterion9(std::string& detail) {
    const vertex_t sizes[3] = {1000, 10000, 100000};
    double min_ratio = 1e30, max_ratio = 0;
    std::ostringstream wall;
    for (vertex_t n : sizes) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto [g, sigma] = gen_layered_cocomp({n, 8, 0.5, seed});
            auto t0 = Clock::now();
            auto result = cclexdfs(g, sigma);
            auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
            const std::uint64_t total = result.counters.pipeline_total();
            const std::uint64_t size = n + g.num_edges();
            if (total > 8 * size) {
                detail = "counters " + std::to_string(total) + " exceed 8*(n+m)=" +
                         std::to_string(8 * size);
                return false;
            }
            double ratio = static_cast<double>(total) / static_cast<double>(size);
            min_ratio = std::min(min_ratio, ratio);
            max_ratio = std::max(max_ratio, ratio);
            if (seed == 1)
                wall << " n=" << n << ":" << ns.count() / 1000000 << "ms";
        }
    }
    double spread = (max_ratio - min_ratio) / min_ratio;
    std::cout << "       counters/(n+m) in [" << min_ratio << ", " << max_ratio
              << "], spread " << static_cast<int>(spread * 100) << "%; wall-clock (reported only):"
              << wall.str() << '\n';
    if (spread >= 0.25) {
        detail = "ratio spread " + std::to_string(spread) + " >= 0.25 across the size range";
        return false;
    }
    return true;
}

// ---- criterion 10: exhaustive agreement on small connected graphs ----

bool connected_mask(vertex_t n, std::uint32_t mask,
                    const std::vector<std::pair<vertex_t, vertex_t>>& pairs) {
    std::uint32_t adj[8] = {0};
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if ((mask >> t) & 1) {
            adj[pairs[t].first] |= 1u << pairs[t].second;
            adj[pairs[t].second] |= 1u << pairs[t].first;
        }
    }
    std::uint32_t reached = 1, frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (vertex_t v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (n == 32 ? ~0u : (1u << n) - 1);
}

// every pipeline run and every check owns its state, so graphs can be
// sharded across threads freely
bool check_mask_range(vertex_t n, std::uint32_t first, std::uint32_t stride, std::uint32_t count,
                      const std::vector<std::pair<vertex_t, vertex_t>>& pairs,
                      std::uint64_t& accepted, std::uint64_t& rejected, std::string& error) {
    for (std::uint32_t mask = first; mask < count; mask += stride) {
        if (!connected_mask(n, mask, pairs)) continue;
        std::vector<std::pair<vertex_t, vertex_t>> edges;
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if ((mask >> t) & 1) edges.push_back(pairs[t]);
        Graph g = Graph::from_edges(n, std::move(edges));

        auto sigma = brute_force_cocomp_order(g);
        if (!sigma) {
            ++rejected;
            continue;
        }
        ++accepted;

        for (Mode mode : {Mode::Default, Mode::Plus}) {
            auto result = cclexdfs(g, *sigma, mode);
            if (check_umbrella_free(g, result.tau) || check_4pc(g, result.tau) ||
                check_flipping(g, *sigma, result.tau) ||
                check_partition(g, *sigma, result.partition)) {
                error = "verifier failed for n=" + std::to_string(n) + " mask " +
                        std::to_string(mask);
                return false;
            }
            if (mode == Mode::Plus && !(result.tau == lexdfs_plus_oracle(g, *sigma))) {
                error = "oracle mismatch for n=" + std::to_string(n) + " mask " +
                        std::to_string(mask);
                return false;
            }
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    // C5 itself is the canonical rejection
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    if (brute_force_cocomp_order(c5).has_value()) {
        detail = "C5 unexpectedly accepted";
        return false;
    }

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t accepted = 0, rejected = 0;
    for (vertex_t n = 1; n <= 7; ++n) {
        std::vector<std::pair<vertex_t, vertex_t>> pairs;
        for (vertex_t i = 0; i < n; ++i)
            for (vertex_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        const std::uint32_t masks = 1u << pairs.size();

        std::vector<std::thread> threads;
        std::vector<std::uint64_t> acc(workers, 0), rej(workers, 0);
        std::vector<std::string> errors(workers);
        std::vector<char> ok(workers, 1);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                ok[w] = check_mask_range(n, w, workers, masks, pairs, acc[w], rej[w], errors[w])
                            ? 1
                            : 0;
            });
        }
        for (auto& t : threads) t.join();
        for (unsigned w = 0; w < workers; ++w) {
            if (!ok[w]) {
                detail = errors[w];
                return false;
            }
            accepted += acc[w];
            rejected += rej[w];
        }
    }
    std::cout << "       " << accepted << " connected graphs accepted, " << rejected
              << " rejected as non-cocomparability\n";
    return accepted > 0 && rejected > 0;
}

} // namespace

int main() {
    criterion(1, "fig1 LexDFS run with intermediate labels", criterion1);
    criterion(2, "fig2 initial labelling", criterion2);
    criterion(3, "fig2 partition classes and increment trace", criterion3);
    criterion(4, "fig2 refinement: stacks, layouts, final tau", criterion4);
    criterion(5, "worked refine example with segment layouts", criterion5);
    criterion(6, "property suite on 500 generated instances", criterion6);
    criterion(7, "plus pipeline equals the oracle on 200 instances", criterion7);
    criterion(8, "label-gap invariant at every peel step", criterion8);
    criterion(9, "linearity by counters on the layered family", criterion9);
    criterion(10, "exhaustive small-graph agreement", criterion10);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
