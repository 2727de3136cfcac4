#include "cocomp/refine.hpp"

#include <cassert>

namespace cocomp {

ClassRefiner::ClassRefiner(vertex_t n)
    : next_(n, no_vertex), prev_(n, no_vertex), seg_of_(n, 0) {}

void ClassRefiner::load(std::span<const vertex_t> members) {
    segs_.clear();
    touched_.clear();
    head_ = tail_ = no_vertex;
    if (members.empty()) return;

    for (std::size_t i = 0; i < members.size(); ++i) {
        vertex_t v = members[i];
        prev_[v] = i == 0 ? no_vertex : members[i - 1];
        next_[v] = i + 1 == members.size() ? no_vertex : members[i + 1];
        seg_of_[v] = 0;
    }
    head_ = members.front();
    tail_ = members.back();
    segs_.push_back({head_, tail_, no_vertex, false});
}

void ClassRefiner::unlink(vertex_t w, Segment& seg) {
    if (seg.first == w) seg.first = next_[w];
    if (seg.last == w) seg.last = prev_[w];
    if (prev_[w] != no_vertex)
        next_[prev_[w]] = next_[w];
    else
        head_ = next_[w];
    if (next_[w] != no_vertex)
        prev_[next_[w]] = prev_[w];
    else
        tail_ = prev_[w];
}

void ClassRefiner::insert_front(vertex_t w, Segment& seg) {
    vertex_t f = seg.first;
    prev_[w] = prev_[f];
    next_[w] = f;
    if (prev_[f] != no_vertex)
        next_[prev_[f]] = w;
    else
        head_ = w;
    prev_[f] = w;
    seg.first = w;
}

void ClassRefiner::insert_after(vertex_t c, vertex_t w, Segment& seg) {
    next_[w] = next_[c];
    prev_[w] = c;
    if (next_[c] != no_vertex)
        prev_[next_[c]] = w;
    else
        tail_ = w;
    next_[c] = w;
    if (seg.last == c) seg.last = w;
}

void ClassRefiner::apply_pivot(std::span<const vertex_t> neighbors, Counters* counters) {
    std::uint64_t moves = 0;
    for (vertex_t w : neighbors) {
        ++moves;
        std::uint32_t s = seg_of_[w];
        Segment& seg = segs_[s];
        if (seg.permanent) continue;
        if (seg.cursor == no_vertex) {
            if (seg.first != w) {
                unlink(w, seg);
                insert_front(w, seg);
            }
            seg.cursor = w;
            touched_.push_back(s);
        } else {
            // w sits in the untouched tail of its segment, strictly after the cursor
            assert(w != seg.cursor);
            if (next_[seg.cursor] != w) {
                unlink(w, seg);
                insert_after(seg.cursor, w, seg);
            }
            seg.cursor = w;
        }
    }

    for (std::uint32_t s : touched_) {
        if (segs_[s].cursor == segs_[s].last) {
            // everything was pulled; order is unchanged, no split
            if (segs_[s].first == segs_[s].last)
                segs_[s].permanent = true; // first == last == cursor stays set
            else
                segs_[s].cursor = no_vertex;
            continue;
        }
        // split [first..cursor] off as a fresh segment in front of the rest
        vertex_t split_at = segs_[s].cursor;
        std::uint32_t left = static_cast<std::uint32_t>(segs_.size());
        segs_.push_back({segs_[s].first, split_at, no_vertex, false});
        for (vertex_t v = segs_[left].first;; v = next_[v]) {
            seg_of_[v] = left;
            ++moves;
            if (v == split_at) break;
        }
        if (segs_[left].first == segs_[left].last) {
            segs_[left].cursor = split_at;
            segs_[left].permanent = true;
        }
        segs_[s].first = next_[split_at];
        segs_[s].cursor = no_vertex;
    }
    touched_.clear();
    if (counters != nullptr) counters->refine_moves += moves;
}

std::vector<std::vector<vertex_t>> ClassRefiner::segments() const {
    std::vector<std::vector<vertex_t>> out;
    for (vertex_t v = head_; v != no_vertex; v = next_[v]) {
        if (out.empty() || seg_of_[v] != seg_of_[out.back().back()]) out.emplace_back();
        out.back().push_back(v);
    }
    return out;
}

std::vector<vertex_t> ClassRefiner::finish() const {
    std::vector<vertex_t> out;
    for (vertex_t v = head_; v != no_vertex; v = next_[v]) out.push_back(v);
    return out;
}

Ordering refine_partition(const Graph& g, const Partition& part, Counters* counters,
                          RefineTrace* trace) {
    const vertex_t n = g.num_vertices();
    const std::uint32_t p = part.size();
    Ordering pi(part.concatenation());
    Graph gp = reorder_adjacency(g, pi, counters);

    std::vector<std::vector<PivotRef>> stacks(p);
    ClassRefiner refiner(n);
    std::vector<vertex_t> tau;
    tau.reserve(n);
    std::uint64_t pushes = 0;

    for (std::uint32_t i = 0; i < p; ++i) {
        refiner.load(part.classes[i]);

        RefineTrace::ClassStep* step = nullptr;
        if (trace != nullptr) {
            step = &trace->classes.emplace_back();
            step->cls = i;
            for (auto it = stacks[i].rbegin(); it != stacks[i].rend(); ++it)
                step->stack_top_first.push_back(it->pivot);
        }

        while (!stacks[i].empty()) {
            PivotRef top = stacks[i].back();
            stacks[i].pop_back();
            auto slice = gp.neighbors(top.pivot).subspan(top.begin, top.end - top.begin);
            refiner.apply_pivot(slice, counters);
            if (step != nullptr) step->pivots.push_back({top.pivot, refiner.segments()});
        }

        std::vector<vertex_t> fragment = refiner.finish();
        if (step != nullptr) step->fragment = fragment;

        // scan the fragment left to right; with pi-ordered adjacency each
        // later class shows up as one contiguous run, so one push per class
        for (vertex_t v : fragment) {
            auto adj = gp.neighbors(v);
            std::uint32_t j = 0;
            while (j < adj.size()) {
                std::uint32_t cls = part.class_of[adj[j]];
                std::uint32_t k = j;
                while (k < adj.size() && part.class_of[adj[k]] == cls) ++k;
                if (cls > i) {
                    stacks[cls].push_back({v, j, k});
                    ++pushes;
                }
                j = k;
            }
        }
        tau.insert(tau.end(), fragment.begin(), fragment.end());
    }
    if (counters != nullptr) counters->pivot_pushes += pushes;
    return Ordering(std::move(tau));
}

PipelineResult cclexdfs(const Graph& g, const Ordering& sigma, Mode mode, PartitionTrace* ptrace,
                        RefineTrace* rtrace) {
    PipelineResult result;

    PeelHooks hooks;
    if (ptrace != nullptr) {
        hooks.class_selected = [ptrace](std::uint32_t cls, std::uint32_t min_label,
                                        std::span<const std::uint32_t>) {
            auto& step = ptrace->classes.emplace_back();
            step.cls = cls;
            step.min_label = min_label;
        };
        hooks.incremented = [ptrace](std::uint32_t cls, vertex_t u, std::uint32_t from,
                                     std::uint32_t to) {
            ptrace->classes[cls].increments.emplace_back(u, from, to);
        };
    }

    result.partition = build_partition_classes(
        g, sigma, mode == Mode::Plus ? ClassOrder::SigmaReverse : ClassOrder::Sigma,
        &result.counters, ptrace != nullptr ? &hooks : nullptr);

    if (ptrace != nullptr)
        for (auto& step : ptrace->classes) step.members = result.partition.classes[step.cls];

    result.tau = refine_partition(g, result.partition, &result.counters, rtrace);
    return result;
}

} // namespace cocomp
