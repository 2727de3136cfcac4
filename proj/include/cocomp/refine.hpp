#ifndef COCOMP_REFINE_HPP
#define COCOMP_REFINE_HPP

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "cocomp/graph.hpp"
#include "cocomp/partition.hpp"

namespace cocomp {

// One partition class as a doubly linked vertex sequence tiled by segments.
// Each segment carries first/last cursors plus a current cursor; a pivot's
// neighbors are pulled to the front region of their segment, then every
// touched segment is split at its current cursor. A segment whose
// first == last == current is a permanent singleton and never splits again.
//
// Pivot neighbor lists must be restricted to the loaded class and given in
// pi order (the order the class was loaded in); the pipeline guarantees both
// by slicing pi-reordered adjacency lists.
class ClassRefiner {
public:
    explicit ClassRefiner(vertex_t n);

    void load(std::span<const vertex_t> members_in_pi_order);
    void apply_pivot(std::span<const vertex_t> neighbors_in_class, Counters* counters = nullptr);

    // current segment layout, outermost order (for traces and tests)
    std::vector<std::vector<vertex_t>> segments() const;

    // concatenated refined order; the refiner can be reloaded afterwards
    std::vector<vertex_t> finish() const;

private:
    struct Segment {
        vertex_t first = no_vertex;
        vertex_t last = no_vertex;
        vertex_t cursor = no_vertex;
        bool permanent = false;
    };

    void unlink(vertex_t w, Segment& seg);
    void insert_front(vertex_t w, Segment& seg);
    void insert_after(vertex_t c, vertex_t w, Segment& seg);

    std::vector<vertex_t> next_, prev_;
    std::vector<std::uint32_t> seg_of_;
    std::vector<Segment> segs_;
    std::vector<std::uint32_t> touched_;
    vertex_t head_ = no_vertex;
    vertex_t tail_ = no_vertex;
};

// Pivot entry: the pivot id plus the slice of its (pi-ordered) adjacency
// list that falls inside the target class. Slicing keeps every pop linear
// in the pivot's edges into that class.
struct PivotRef {
    vertex_t pivot;
    std::uint32_t begin; // offsets into the pivot's adjacency list
    std::uint32_t end;
};

struct RefineTrace {
    struct PivotStep {
        vertex_t pivot;
        std::vector<std::vector<vertex_t>> segments; // layout after this pivot
    };
    struct ClassStep {
        std::uint32_t cls = 0;
        std::vector<vertex_t> stack_top_first; // pop order at refinement start
        std::vector<PivotStep> pivots;
        std::vector<vertex_t> fragment;
    };
    std::vector<ClassStep> classes;
};

struct PartitionTrace {
    struct ClassStep {
        std::uint32_t cls = 0;
        std::uint32_t min_label = 0;
        std::vector<vertex_t> members;
        std::vector<std::tuple<vertex_t, std::uint32_t, std::uint32_t>> increments;
    };
    std::vector<ClassStep> classes;
};

// Refinement stage: takes the classes in their pi order, reorders adjacency
// by pi, then refines class by class while feeding the later pivot stacks
// (scan each finished fragment left to right; stacks pop newest first).
Ordering refine_partition(const Graph& g, const Partition& part, Counters* counters = nullptr,
                          RefineTrace* trace = nullptr);

enum class Mode { Default, Plus };

struct PipelineResult {
    Ordering tau;
    Partition partition;
    Counters counters;
};

// Full pipeline: peel classes on sigma (interiors in sigma order, or
// reversed sigma in plus mode), then refine. For a cocomparability ordering
// sigma the result is a LexDFS cocomparability ordering; in plus mode it
// equals lexdfs_plus_oracle(g, sigma) exactly. Inputs are unchecked; feed a
// non-umbrella-free sigma and the guarantees are void.
PipelineResult cclexdfs(const Graph& g, const Ordering& sigma, Mode mode = Mode::Default,
                        PartitionTrace* ptrace = nullptr, RefineTrace* rtrace = nullptr);

} // namespace cocomp

#endif
