#ifndef COCOMP_VERIFY_HPP
#define COCOMP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocomp/graph.hpp"
#include "cocomp/partition.hpp"

namespace cocomp {

struct Violation {
    enum class Kind { Umbrella, FourPoint, Flip, NonClique, NonMaximal, LabelGap };
    Kind kind;
    std::vector<vertex_t> witness;

    std::string str() const;
};

// nullopt means the check passed
using CheckResult = std::optional<Violation>;

// Exact checkers. They favor clarity over speed (quadratic-ish with bitset
// rows) and are meant for desk-scale instances; use the sampled variants
// beyond that.

// ok iff no triple a < b < c in ord has ac in E, ab not in E, bc not in E.
CheckResult check_umbrella_free(const Graph& g, const Ordering& ord);

// ok iff every triple a < b < c with ac in E, ab not in E admits a d with
// a < d < b, db in E, dc not in E (the LexDFS vertex ordering condition).
CheckResult check_4pc(const Graph& g, const Ordering& ord);

// ok iff every non-edge uv has u before v in sigma exactly when v is
// before u in tau.
CheckResult check_flipping(const Graph& g, const Ordering& sigma, const Ordering& tau);

// ok iff every class is a clique and no v in P_i has a later sigma
// non-neighbor in a class >= i.
CheckResult check_partition(const Graph& g, const Ordering& sigma, const Partition& part);

// Random spot-checks of the same predicates, for instances too large for
// the exact versions. A pass is evidence, not proof.
CheckResult check_umbrella_free_sampled(const Graph& g, const Ordering& ord,
                                        std::uint64_t samples, std::uint64_t seed);
CheckResult check_4pc_sampled(const Graph& g, const Ordering& ord, std::uint64_t samples,
                              std::uint64_t seed);
CheckResult check_flipping_sampled(const Graph& g, const Ordering& sigma, const Ordering& tau,
                                   std::uint64_t samples, std::uint64_t seed);

// Lexicographically first umbrella-free ordering by pruned permutation
// search, or nullopt if none exists. Throws std::invalid_argument for n > 10.
std::optional<Ordering> brute_force_cocomp_order(const Graph& g);

} // namespace cocomp

#endif
