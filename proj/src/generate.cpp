#include "cocomp/generate.hpp"

#include <cassert>
#include <stdexcept>

namespace cocomp {

std::pair<Graph, Ordering> gen_random_cocomp(const PosetSpec& spec) {
    const vertex_t n = spec.n;
    if (n == 0) throw std::invalid_argument("gen_random_cocomp: n must be positive");
    Rng rng(spec.seed);

    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> arcs(static_cast<std::size_t>(n) * words, 0);
    auto arc_row = [&](vertex_t i) { return arcs.data() + static_cast<std::size_t>(i) * words; };
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = i + 1; j < n; ++j)
            if (rng.next_unit() < spec.p) arc_row(i)[j >> 6] |= std::uint64_t(1) << (j & 63);

    // reach[i] = union of {j} + reach[j] over arcs i->j; sweep right to left
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
    auto reach_row = [&](vertex_t i) { return reach.data() + static_cast<std::size_t>(i) * words; };
    for (vertex_t i = n; i-- > 0;) {
        auto* ri = reach_row(i);
        const auto* ai = arc_row(i);
        for (std::size_t w = 0; w < words; ++w) ri[w] = ai[w];
        for (vertex_t j = i + 1; j < n; ++j) {
            if ((ai[j >> 6] >> (j & 63)) & 1) {
                const auto* rj = reach_row(j);
                for (std::size_t w = 0; w < words; ++w) ri[w] |= rj[w];
            }
        }
    }

    // complement of the closed poset's comparability graph
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (vertex_t i = 0; i < n; ++i) {
        const auto* ri = reach_row(i);
        for (vertex_t j = i + 1; j < n; ++j)
            if (((ri[j >> 6] >> (j & 63)) & 1) == 0) edges.emplace_back(i, j);
    }
    return {Graph::from_edges(n, std::move(edges)), Ordering::identity(n)};
}

std::pair<Graph, Ordering> gen_layered_cocomp(const LayeredSpec& spec) {
    const vertex_t n = spec.n;
    const vertex_t w = spec.width;
    if (n == 0) throw std::invalid_argument("gen_layered_cocomp: n must be positive");
    if (w == 0 || w > 64) throw std::invalid_argument("gen_layered_cocomp: width must be in 1..64");
    Rng rng(spec.seed);

    const vertex_t layers = (n + w - 1) / w;
    auto layer_begin = [&](vertex_t t) { return t * w; };
    auto layer_size = [&](vertex_t t) { return std::min<vertex_t>(w, n - t * w); };
    auto full_mask = [&](vertex_t t) -> std::uint64_t {
        vertex_t s = layer_size(t);
        return s == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << s) - 1;
    };

    // out-arc bitmasks into the next layer; every vertex gets one forced
    // out-arc and every next-layer vertex one forced in-arc, so reachability
    // frontiers saturate quickly and the complement stays sparse
    std::vector<std::uint64_t> out(n, 0);
    for (vertex_t t = 0; t + 1 < layers; ++t) {
        const vertex_t sz = layer_size(t), nsz = layer_size(t + 1);
        for (vertex_t o = 0; o < sz; ++o) {
            vertex_t u = layer_begin(t) + o;
            out[u] |= std::uint64_t(1) << rng.next_below(nsz);
            for (vertex_t x = 0; x < nsz; ++x)
                if (rng.next_unit() < spec.q) out[u] |= std::uint64_t(1) << x;
        }
        std::uint64_t covered = 0;
        for (vertex_t o = 0; o < sz; ++o) covered |= out[layer_begin(t) + o];
        for (vertex_t x = 0; x < nsz; ++x) {
            if ((covered >> x) & 1) continue;
            out[layer_begin(t) + rng.next_below(sz)] |= std::uint64_t(1) << x;
        }
    }

    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (vertex_t t = 0; t < layers; ++t) {
        const vertex_t sz = layer_size(t);
        for (vertex_t o = 0; o < sz; ++o) {
            vertex_t u = layer_begin(t) + o;
            // same layer: pairwise incomparable, hence a clique here
            for (vertex_t o2 = o + 1; o2 < sz; ++o2) edges.emplace_back(u, layer_begin(t) + o2);
            // walk the reach frontier until it covers a whole layer; every
            // vertex has an in-arc, so full stays full from there on
            std::uint64_t frontier = out[u];
            for (vertex_t d = t + 1; d < layers; ++d) {
                std::uint64_t miss = full_mask(d) & ~frontier;
                if (miss == 0) break;
                const vertex_t dsz = layer_size(d);
                for (vertex_t x = 0; x < dsz; ++x)
                    if ((miss >> x) & 1) edges.emplace_back(u, layer_begin(d) + x);
                std::uint64_t next = 0;
                for (vertex_t x = 0; x < dsz; ++x)
                    if ((frontier >> x) & 1) next |= out[layer_begin(d) + x];
                frontier = next;
            }
        }
    }
    return {Graph::from_edges(n, std::move(edges)), Ordering::identity(n)};
}

std::pair<Graph, Ordering> gen_fixture(Fixture which) {
    if (which == Fixture::Fig1) {
        // 5 vertices a..e = 0..4, ordering a,b,c,d,e
        std::vector<std::pair<vertex_t, vertex_t>> edges = {
            {0, 3}, {0, 2}, {0, 1}, {3, 2}, {2, 4}, {2, 1},
        };
        return {Graph::from_edges(5, std::move(edges)), Ordering::identity(5)};
    }
    // 11 vertices a..k = 0..10, ordering a..k
    std::vector<std::pair<vertex_t, vertex_t>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5},
        {3, 6}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}, {7, 9}, {7, 10},
    };
    return {Graph::from_edges(11, std::move(edges)), Ordering::identity(11)};
}

std::optional<Fixture> fixture_by_name(std::string_view name) {
    if (name == "fig1") return Fixture::Fig1;
    if (name == "fig2") return Fixture::Fig2;
    return std::nullopt;
}

} // namespace cocomp
