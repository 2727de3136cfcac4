#ifndef COCOMP_GENERATE_HPP
#define COCOMP_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>

#include "cocomp/graph.hpp"

namespace cocomp {

// Seedable, portable source: mt19937_64 with fixed derivations, so one seed
// gives bit-identical instances everywhere. Draw order is part of each
// generator's contract.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next_u64() { return eng(); }
    // 53-bit mantissa in [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }
};

struct PosetSpec {
    vertex_t n = 0;
    double p = 0.5; // pre-closure arc probability
    std::uint64_t seed = 0;
};

// Random DAG on 0..n-1 (arc i->j, i<j, with probability p; draws row by
// row), transitively closed into a poset; returns the complement of its
// comparability graph with sigma = identity. Umbrella-free by construction.
// The bitset closure is cubic-ish, fine up to a few thousand vertices.
std::pair<Graph, Ordering> gen_random_cocomp(const PosetSpec& spec);

struct LayeredSpec {
    vertex_t n = 0;
    vertex_t width = 8; // layer width, at most 64
    double q = 0.5;     // extra arc probability between adjacent layers
    std::uint64_t seed = 0;
};

// Sparse family for benchmark scale: consecutive layers of fixed width,
// arcs only between adjacent layers (one forced out-arc and one forced
// in-arc per vertex keep the closure's complement sparse), closure walked
// layer by layer. sigma = identity, umbrella-free by construction.
std::pair<Graph, Ordering> gen_layered_cocomp(const LayeredSpec& spec);

enum class Fixture { Fig1, Fig2 };

// The two worked examples used throughout the tests: a 5-vertex and an
// 11-vertex cocomparability graph with their printed orderings.
std::pair<Graph, Ordering> gen_fixture(Fixture which);
std::optional<Fixture> fixture_by_name(std::string_view name);

} // namespace cocomp

#endif
