#ifndef COCOMP_PARTITION_HPP
#define COCOMP_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cocomp/graph.hpp"

namespace cocomp {

// Per-vertex labels while peeling: for an unvisited u, label(u) equals the
// number of its non-neighbors after it in sigma plus its visited neighbors.
// Always within [0, n-1], which fixes the bin range.
struct LabelState {
    std::vector<std::uint32_t> label;
    std::vector<std::uint8_t> visited;
};

// label(v) = number of non-neighbors of v strictly after it in sigma,
// computed as (n - 1 - pos) minus the later-neighbor count. O(n+m).
LabelState compute_initial_labels(const Graph& g, const Ordering& sigma, Counters* counters = nullptr);

// Ordered partition classes; their concatenation is the ordering pi.
struct Partition {
    std::vector<std::vector<vertex_t>> classes;
    std::vector<std::uint32_t> class_of;

    std::uint32_t size() const { return static_cast<std::uint32_t>(classes.size()); }
    std::vector<vertex_t> concatenation() const;
};

// Order of vertices inside each class: sigma order by default, reversed
// sigma for the plus pipeline.
enum class ClassOrder { Sigma, SigmaReverse };

struct PeelHooks {
    // fired when a class is selected, with the labels of that iteration
    // (previous classes' increments applied, this class's not yet)
    std::function<void(std::uint32_t cls, std::uint32_t min_label,
                       std::span<const std::uint32_t> labels)>
        class_selected;
    std::function<void(std::uint32_t cls, vertex_t u, std::uint32_t from, std::uint32_t to)>
        incremented;
};

// Peels classes of minimum label using bins B_0..B_{n-1}; emitting a class
// bumps each unvisited neighbor one bin up. The bin consumed per class has a
// strictly increasing index, so one left-to-right sweep suffices. Class
// interiors are then normalized to the requested order in one sigma sweep.
// sigma must be umbrella-free for the downstream guarantees to hold; this is
// deliberately not checked here (the verifiers are the explicit check).
Partition build_partition_classes(const Graph& g, const Ordering& sigma,
                                  ClassOrder order = ClassOrder::Sigma,
                                  Counters* counters = nullptr, PeelHooks* hooks = nullptr);

} // namespace cocomp

#endif
