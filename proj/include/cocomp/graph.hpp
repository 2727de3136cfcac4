#ifndef COCOMP_GRAPH_HPP
#define COCOMP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocomp {

using vertex_t = std::uint32_t;
inline constexpr vertex_t no_vertex = static_cast<vertex_t>(-1);

// Work counters for the linear-time pipeline stages. Every stage has a fixed
// per-stage bound (see bench docs); the harness reports them per run.
struct Counters {
    std::uint64_t label_touches = 0;   // initial labelling work, <= 2(n+m)
    std::uint64_t bin_moves = 0;       // bin relocations while peeling, <= m
    std::uint64_t pivot_pushes = 0;    // pivot stack pushes, <= m
    std::uint64_t refine_moves = 0;    // element moves + split walks, <= 2m
    std::uint64_t reorder_touches = 0; // adjacency rebuild touches, <= 2(n+m)

    std::uint64_t pipeline_total() const {
        return label_touches + bin_moves + pivot_pushes + refine_moves;
    }
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph. Adjacency sequences keep a defined
// neighbor order: input order after construction, pi order after
// reorder_adjacency.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: rejects self-loops, duplicate edges, ids >= n.
    // line_of, when given, maps edge index -> input line for error messages.
    static Graph from_edges(vertex_t n, std::vector<std::pair<vertex_t, vertex_t>> edges,
                            const std::vector<std::uint32_t>* line_of = nullptr);

    vertex_t num_vertices() const { return n_; }
    std::uint64_t num_edges() const { return edges_.size(); }

    std::span<const vertex_t> neighbors(vertex_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }

    // O(deg) scan; verifiers build their own matrices for bulk queries.
    bool has_edge(vertex_t u, vertex_t v) const;

    // Edge list in construction order, as loaded/generated.
    const std::vector<std::pair<vertex_t, vertex_t>>& edges() const { return edges_; }

    // Same edge set, each adjacency sequence rewritten in the given order.
    friend Graph reorder_adjacency(const Graph& g, const class Ordering& pi, Counters* counters);

private:
    void build_adjacency();

    vertex_t n_ = 0;
    std::vector<std::uint32_t> offsets_;
    std::vector<vertex_t> adj_;
    std::vector<std::pair<vertex_t, vertex_t>> edges_;
};

// Bijection between positions 0..n-1 and vertex ids. Positions are 1-based
// in the file formats and docs; this type is the 0-based boundary.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<vertex_t> seq);
    static Ordering identity(vertex_t n);

    vertex_t size() const { return static_cast<vertex_t>(seq_.size()); }
    vertex_t at(vertex_t pos) const { return seq_[pos]; }
    vertex_t position_of(vertex_t v) const { return pos_[v]; }
    std::span<const vertex_t> seq() const { return seq_; }
    std::span<const vertex_t> positions() const { return pos_; }

    Ordering reversed() const;

    bool operator==(const Ordering& other) const { return seq_ == other.seq_; }

private:
    std::vector<vertex_t> seq_; // position -> vertex
    std::vector<vertex_t> pos_; // vertex -> position
};

// Edge-list file: line 1 "n m", then m lines "u v" with 0 <= u,v < n.
// Lines starting with '#' are ignored. Errors name the offending line.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(std::ostream& out, const Graph& g);
void save_graph_file(const std::string& path, const Graph& g);

// Ordering file: one line of n whitespace-separated vertex ids.
Ordering load_ordering(std::istream& in, vertex_t n);
Ordering load_ordering_file(const std::string& path, vertex_t n);
void save_ordering(std::ostream& out, const Ordering& ord);
void save_ordering_file(const std::string& path, const Ordering& ord);

Graph reorder_adjacency(const Graph& g, const Ordering& pi, Counters* counters = nullptr);

} // namespace cocomp

#endif
