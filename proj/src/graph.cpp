#include "cocomp/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cocomp {

Graph Graph::from_edges(vertex_t n, std::vector<std::pair<vertex_t, vertex_t>> edges,
                        const std::vector<std::uint32_t>* line_of) {
    auto line_str = [&](std::size_t e) -> std::string {
        if (line_of != nullptr && e < line_of->size())
            return " (line " + std::to_string((*line_of)[e]) + ")";
        return " (edge " + std::to_string(e + 1) + ")";
    };

    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u >= n || v >= n)
            throw ParseError("vertex id out of range: " + std::to_string(std::max(u, v)) +
                             " >= " + std::to_string(n) + line_str(e));
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u) + line_str(e));
    }

    // Duplicate detection over the normalized list; m stays unambiguous.
    std::vector<std::pair<std::pair<vertex_t, vertex_t>, std::size_t>> norm(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        norm[e] = {{std::min(u, v), std::max(u, v)}, e};
    }
    std::sort(norm.begin(), norm.end());
    for (std::size_t i = 1; i < norm.size(); ++i) {
        if (norm[i].first == norm[i - 1].first) {
            std::size_t e = std::max(norm[i].second, norm[i - 1].second);
            throw ParseError("duplicate edge " + std::to_string(edges[e].first) + " " +
                             std::to_string(edges[e].second) + line_str(e));
        }
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (vertex_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    adj_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    for (vertex_t w : neighbors(u))
        if (w == v) return true;
    return false;
}

Ordering::Ordering(std::vector<vertex_t> seq) : seq_(std::move(seq)) {
    const vertex_t n = static_cast<vertex_t>(seq_.size());
    pos_.assign(n, no_vertex);
    for (vertex_t i = 0; i < n; ++i) {
        vertex_t v = seq_[i];
        if (v >= n) throw ParseError("ordering entry out of range: " + std::to_string(v));
        if (pos_[v] != no_vertex) throw ParseError("ordering repeats vertex " + std::to_string(v));
        pos_[v] = i;
    }
}

Ordering Ordering::identity(vertex_t n) {
    std::vector<vertex_t> seq(n);
    for (vertex_t i = 0; i < n; ++i) seq[i] = i;
    return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
    std::vector<vertex_t> seq(seq_.rbegin(), seq_.rend());
    return Ordering(std::move(seq));
}

namespace {

// Strips comments/blank lines, hands out payload lines with their numbers.
struct LineReader {
    std::istream& in;
    std::uint32_t line_no = 0;

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

} // namespace

Graph load_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("missing header line \"n m\"");

    std::uint64_t n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("malformed header (line " + std::to_string(reader.line_no) + "): expected \"n m\"");
    }
    if (n > static_cast<std::uint64_t>(no_vertex))
        throw ParseError("vertex count too large (line " + std::to_string(reader.line_no) + ")");

    std::vector<std::pair<vertex_t, vertex_t>> edges;
    std::vector<std::uint32_t> lines;
    edges.reserve(m);
    lines.reserve(m);
    for (std::uint64_t e = 0; e < m; ++e) {
        if (!reader.next(line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(e));
        std::istringstream es(line);
        std::uint64_t u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("malformed edge (line " + std::to_string(reader.line_no) + "): " + line);
        if (u >= n || v >= n)
            throw ParseError("vertex id out of range (line " + std::to_string(reader.line_no) + "): " + line);
        edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
        lines.push_back(reader.line_no);
    }
    if (reader.next(line))
        throw ParseError("trailing content after " + std::to_string(m) + " edges (line " +
                         std::to_string(reader.line_no) + ")");
    return Graph::from_edges(static_cast<vertex_t>(n), std::move(edges), &lines);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return load_graph(in);
}

void save_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write graph file: " + path);
    save_graph(out, g);
}

Ordering load_ordering(std::istream& in, vertex_t n) {
    std::vector<vertex_t> seq;
    seq.reserve(n);
    std::uint64_t v = 0;
    while (in >> v) {
        if (v >= n) throw ParseError("ordering entry out of range: " + std::to_string(v));
        seq.push_back(static_cast<vertex_t>(v));
    }
    if (!in.eof() && in.fail()) throw ParseError("malformed ordering file");
    if (seq.size() != n)
        throw ParseError("ordering has " + std::to_string(seq.size()) + " entries, expected " +
                         std::to_string(n));
    return Ordering(std::move(seq));
}

Ordering load_ordering_file(const std::string& path, vertex_t n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ordering file: " + path);
    return load_ordering(in, n);
}

void save_ordering(std::ostream& out, const Ordering& ord) {
    for (vertex_t i = 0; i < ord.size(); ++i) {
        if (i) out << ' ';
        out << ord.at(i);
    }
    out << '\n';
}

void save_ordering_file(const std::string& path, const Ordering& ord) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write ordering file: " + path);
    save_ordering(out, ord);
}

Graph reorder_adjacency(const Graph& g, const Ordering& pi, Counters* counters) {
    const vertex_t n = g.num_vertices();
    Graph out;
    out.n_ = n;
    out.edges_ = g.edges_;
    out.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (vertex_t v = 0; v < n; ++v) out.offsets_[v + 1] = out.offsets_[v] + g.degree(v);
    out.adj_.resize(g.adj_.size());

    std::uint64_t touches = 0;
    std::vector<std::uint32_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
    // One pass over pi; each x lands in its neighbors' lists in pi order.
    for (vertex_t p = 0; p < n; ++p) {
        vertex_t x = pi.at(p);
        ++touches;
        for (vertex_t u : g.neighbors(x)) {
            out.adj_[cursor[u]++] = x;
            ++touches;
        }
    }
    if (counters != nullptr) counters->reorder_touches += touches;
    return out;
}

} // namespace cocomp
