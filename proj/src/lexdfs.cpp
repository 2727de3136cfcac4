#include "cocomp/lexdfs.hpp"

#include <cassert>

namespace cocomp {

int compare(const LexLabel& a, const LexLabel& b) {
    // stamps are appended oldest-first, so newest-first order is back-to-front
    auto ia = a.stamps.rbegin();
    auto ib = b.stamps.rbegin();
    for (; ia != a.stamps.rend() && ib != b.stamps.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib ? -1 : 1;
    }
    if (a.stamps.size() == b.stamps.size()) return 0;
    return a.stamps.size() < b.stamps.size() ? -1 : 1;
}

namespace {

Ordering run_lexdfs(const Graph& g, vertex_t start, const TieRule& tie, SearchHooks* hooks) {
    const vertex_t n = g.num_vertices();
    assert(tie.ref.size() == n);

    std::vector<LexLabel> label(n);
    std::vector<std::uint8_t> numbered(n, 0);
    if (start != no_vertex) label[start].prepend(0); // beats the empty labels at step 1

    const bool rightmost = tie.rule == TieBreak::RightmostInRef;
    std::vector<vertex_t> seq;
    seq.reserve(n);

    for (std::uint32_t step = 1; step <= n; ++step) {
        vertex_t best = no_vertex;
        for (vertex_t p = 0; p < n; ++p) {
            // scanning the reference ordering makes the tie rule a plain >/>= choice
            vertex_t v = tie.ref.at(rightmost ? n - 1 - p : p);
            if (numbered[v]) continue;
            if (best == no_vertex || compare(label[v], label[best]) > 0) best = v;
        }
        numbered[best] = 1;
        seq.push_back(best);
        if (hooks != nullptr && hooks->numbered) hooks->numbered(step, best);
        for (vertex_t w : g.neighbors(best)) {
            if (numbered[w]) continue;
            label[w].prepend(step);
            if (hooks != nullptr && hooks->labeled) hooks->labeled(step, w, label[w]);
        }
    }
    return Ordering(std::move(seq));
}

} // namespace

Ordering lexdfs_generic(const Graph& g, const TieRule& tie, SearchHooks* hooks) {
    return run_lexdfs(g, no_vertex, tie, hooks);
}

Ordering lexdfs_from(const Graph& g, vertex_t start, const TieRule& tie, SearchHooks* hooks) {
    assert(start < g.num_vertices());
    return run_lexdfs(g, start, tie, hooks);
}

Ordering lexdfs_plus_oracle(const Graph& g, const Ordering& sigma) {
    TieRule tie{TieBreak::RightmostInRef, sigma};
    return lexdfs_generic(g, tie);
}

} // namespace cocomp
