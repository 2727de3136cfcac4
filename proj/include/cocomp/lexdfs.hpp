#ifndef COCOMP_LEXDFS_HPP
#define COCOMP_LEXDFS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cocomp/graph.hpp"

namespace cocomp {

// Visit label of an unnumbered vertex: the visit numbers of its already
// numbered neighbors, newest first. Stored oldest-first so that prepending
// a new (always larger) visit number is an O(1) append.
struct LexLabel {
    std::vector<std::uint32_t> stamps;

    void prepend(std::uint32_t visit_number) { stamps.push_back(visit_number); }
    bool empty() const { return stamps.empty(); }
};

// Newest-first lexicographic comparison; when one label is a prefix of the
// other, the longer one is larger ("31" beats "3"). Returns <0, 0, >0.
int compare(const LexLabel& a, const LexLabel& b);

enum class TieBreak { LeftmostInRef, RightmostInRef };

struct TieRule {
    TieBreak rule;
    Ordering ref; // must cover all vertices
};

struct SearchHooks {
    // step is the 1-based visit number
    std::function<void(std::uint32_t step, vertex_t v)> numbered;
    std::function<void(std::uint32_t step, vertex_t w, const LexLabel& label)> labeled;
};

// Label-based LexDFS, the quadratic reference the fast pipeline is tested
// against. The start vertex falls out of the tie rule (all labels empty at
// step 1); lexdfs_from pins it explicitly instead.
Ordering lexdfs_generic(const Graph& g, const TieRule& tie, SearchHooks* hooks = nullptr);
Ordering lexdfs_from(const Graph& g, vertex_t start, const TieRule& tie, SearchHooks* hooks = nullptr);

// LexDFS with ties broken by the rightmost vertex in sigma; starts at
// sigma's last vertex.
Ordering lexdfs_plus_oracle(const Graph& g, const Ordering& sigma);

} // namespace cocomp

#endif
