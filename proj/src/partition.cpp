#include "cocomp/partition.hpp"

#include <cassert>

namespace cocomp {

std::vector<vertex_t> Partition::concatenation() const {
    std::vector<vertex_t> pi;
    pi.reserve(class_of.size());
    for (const auto& cls : classes) pi.insert(pi.end(), cls.begin(), cls.end());
    return pi;
}

LabelState compute_initial_labels(const Graph& g, const Ordering& sigma, Counters* counters) {
    const vertex_t n = g.num_vertices();
    LabelState state;
    state.label.assign(n, 0);
    state.visited.assign(n, 0);

    std::uint64_t touches = 0;
    for (vertex_t pos = 0; pos < n; ++pos) {
        vertex_t v = sigma.at(pos);
        ++touches;
        std::uint32_t later_neighbors = 0;
        for (vertex_t u : g.neighbors(v)) {
            ++touches;
            if (sigma.position_of(u) > pos) ++later_neighbors;
        }
        state.label[v] = (n - 1 - pos) - later_neighbors;
    }
    if (counters != nullptr) counters->label_touches += touches;
    return state;
}

namespace {

// Bins B_0..B_{n-1} as intrusive doubly linked lists over vertex ids;
// moving a vertex one bin up is O(1).
struct BinArray {
    std::vector<vertex_t> head, tail, next, prev;
    std::vector<std::uint32_t> bin_of;
    std::vector<std::uint32_t> count;

    explicit BinArray(vertex_t n)
        : head(n, no_vertex), tail(n, no_vertex), next(n, no_vertex), prev(n, no_vertex),
          bin_of(n, 0), count(n, 0) {}

    void push_back(std::uint32_t b, vertex_t v) {
        bin_of[v] = b;
        next[v] = no_vertex;
        prev[v] = tail[b];
        if (tail[b] == no_vertex)
            head[b] = v;
        else
            next[tail[b]] = v;
        tail[b] = v;
        ++count[b];
    }

    void unlink(vertex_t v) {
        std::uint32_t b = bin_of[v];
        if (prev[v] != no_vertex)
            next[prev[v]] = next[v];
        else
            head[b] = next[v];
        if (next[v] != no_vertex)
            prev[next[v]] = prev[v];
        else
            tail[b] = prev[v];
        --count[b];
    }

    void move_up(vertex_t v) {
        std::uint32_t b = bin_of[v];
        unlink(v);
        push_back(b + 1, v);
    }
};

} // namespace

Partition build_partition_classes(const Graph& g, const Ordering& sigma, ClassOrder order,
                                  Counters* counters, PeelHooks* hooks) {
    const vertex_t n = g.num_vertices();
    assert(sigma.size() == n);

    LabelState state = compute_initial_labels(g, sigma, counters);

    BinArray bins(n);
    for (vertex_t pos = 0; pos < n; ++pos) {
        vertex_t v = sigma.at(pos);
        bins.push_back(state.label[v], v);
    }

    Partition part;
    part.class_of.assign(n, 0);

    std::uint64_t moves = 0;
    vertex_t emitted = 0;
    std::vector<vertex_t> members;
    for (std::uint32_t b = 0; b < n && emitted < n; ++b) {
        if (bins.count[b] == 0) continue;
        // every unvisited vertex sits at label >= b, so bin b is complete
        const std::uint32_t cls = part.size();
        members.clear();
        for (vertex_t v = bins.head[b]; v != no_vertex; v = bins.next[v]) members.push_back(v);
        bins.head[b] = bins.tail[b] = no_vertex;
        bins.count[b] = 0;

        if (hooks != nullptr && hooks->class_selected) hooks->class_selected(cls, b, state.label);

        for (vertex_t v : members) {
            state.visited[v] = 1;
            part.class_of[v] = cls;
        }
        emitted += static_cast<vertex_t>(members.size());
        for (vertex_t v : members) {
            for (vertex_t u : g.neighbors(v)) {
                if (state.visited[u]) continue;
                assert(state.label[u] > b);
                bins.move_up(u);
                ++moves;
                ++state.label[u];
                if (hooks != nullptr && hooks->incremented)
                    hooks->incremented(cls, u, state.label[u] - 1, state.label[u]);
            }
        }
        part.classes.emplace_back(); // interiors filled below
    }
    if (counters != nullptr) counters->bin_moves += moves;

    // One sigma sweep fixes the order inside every class at once.
    for (vertex_t i = 0; i < n; ++i) {
        vertex_t v = order == ClassOrder::Sigma ? sigma.at(i) : sigma.at(n - 1 - i);
        part.classes[part.class_of[v]].push_back(v);
    }
    return part;
}

} // namespace cocomp
