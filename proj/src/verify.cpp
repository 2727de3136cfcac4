#include "cocomp/verify.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

namespace cocomp {

std::string Violation::str() const {
    const char* name = "";
    switch (kind) {
        case Kind::Umbrella: name = "umbrella"; break;
        case Kind::FourPoint: name = "four-point"; break;
        case Kind::Flip: name = "flip"; break;
        case Kind::NonClique: name = "non-clique"; break;
        case Kind::NonMaximal: name = "non-maximal"; break;
        case Kind::LabelGap: name = "label-gap"; break;
    }
    std::string out = name;
    for (vertex_t v : witness) out += " " + std::to_string(v);
    return out;
}

namespace {

// Fixed-width bit rows over positions (or ids); one row per vertex.
struct BitRows {
    std::size_t words;
    std::vector<std::uint64_t> bits;

    BitRows(std::size_t rows, std::size_t cols) : words((cols + 63) / 64), bits(rows * words, 0) {}

    std::uint64_t* row(std::size_t r) { return bits.data() + r * words; }
    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
    void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= std::uint64_t(1) << (c & 63); }
    bool test(std::size_t r, std::size_t c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1;
    }
};

// adjacency in position space: rows[i] marks positions adjacent to ord[i]
BitRows position_adjacency(const Graph& g, const Ordering& ord) {
    BitRows rows(ord.size(), ord.size());
    for (auto [u, v] : g.edges()) {
        vertex_t pu = ord.position_of(u), pv = ord.position_of(v);
        rows.set(pu, pv);
        rows.set(pv, pu);
    }
    return rows;
}

// adjacency in id space
BitRows id_adjacency(const Graph& g) {
    BitRows rows(g.num_vertices(), g.num_vertices());
    for (auto [u, v] : g.edges()) {
        rows.set(u, v);
        rows.set(v, u);
    }
    return rows;
}

// highest set position < limit in (row & extra), or -1
long highest_below(const std::uint64_t* row, const std::uint64_t* negate_row, std::size_t limit) {
    if (limit == 0) return -1;
    std::size_t last_word = (limit - 1) >> 6;
    for (std::size_t w = last_word + 1; w-- > 0;) {
        std::uint64_t x = row[w];
        if (negate_row != nullptr) x &= ~negate_row[w];
        if (w == last_word && (limit & 63) != 0) x &= (std::uint64_t(1) << (limit & 63)) - 1;
        if (x != 0) return static_cast<long>(w * 64 + 63 - __builtin_clzll(x));
    }
    return -1;
}

} // namespace

CheckResult check_umbrella_free(const Graph& g, const Ordering& ord) {
    BitRows rows = position_adjacency(g, ord);
    for (auto [u, v] : g.edges()) {
        vertex_t i = ord.position_of(u), k = ord.position_of(v);
        if (i > k) std::swap(i, k);
        for (vertex_t j = i + 1; j < k; ++j) {
            if (!rows.test(i, j) && !rows.test(k, j))
                return Violation{Violation::Kind::Umbrella, {ord.at(i), ord.at(j), ord.at(k)}};
        }
    }
    return std::nullopt;
}

CheckResult check_4pc(const Graph& g, const Ordering& ord) {
    const vertex_t n = g.num_vertices();
    BitRows rows = position_adjacency(g, ord);
    // For each b at j and c at k > j: among positions below j, let A hold
    // candidates a (adjacent to c, not to b) and D hold witnesses d
    // (adjacent to b, not to c). The triple (a, b, c) fails exactly when
    // no witness lies right of a, i.e. when max(A) > max(D).
    for (vertex_t j = 0; j < n; ++j) {
        for (vertex_t k = j + 1; k < n; ++k) {
            long max_a = highest_below(rows.row(k), rows.row(j), j);
            if (max_a < 0) continue;
            long max_d = highest_below(rows.row(j), rows.row(k), j);
            if (max_a > max_d)
                return Violation{Violation::Kind::FourPoint,
                                 {ord.at(static_cast<vertex_t>(max_a)), ord.at(j), ord.at(k)}};
        }
    }
    return std::nullopt;
}

CheckResult check_flipping(const Graph& g, const Ordering& sigma, const Ordering& tau) {
    const vertex_t n = g.num_vertices();
    BitRows adj = id_adjacency(g);
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            if (adj.test(u, v)) continue;
            bool sig_uv = sigma.position_of(u) < sigma.position_of(v);
            bool tau_vu = tau.position_of(v) < tau.position_of(u);
            if (sig_uv != tau_vu) return Violation{Violation::Kind::Flip, {u, v}};
        }
    }
    return std::nullopt;
}

CheckResult check_partition(const Graph& g, const Ordering& sigma, const Partition& part) {
    const vertex_t n = g.num_vertices();
    BitRows adj = id_adjacency(g);
    for (const auto& cls : part.classes) {
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (!adj.test(cls[a], cls[b]))
                    return Violation{Violation::Kind::NonClique, {cls[a], cls[b]}};
    }
    // maximality through sigma as a linear extension: a later non-neighbor
    // must sit in a strictly earlier class
    for (vertex_t i = 0; i < n; ++i) {
        vertex_t v = sigma.at(i);
        for (vertex_t j = i + 1; j < n; ++j) {
            vertex_t u = sigma.at(j);
            if (!adj.test(v, u) && part.class_of[u] >= part.class_of[v])
                return Violation{Violation::Kind::NonMaximal, {v, u}};
        }
    }
    return std::nullopt;
}

namespace {

struct SampleRng {
    std::mt19937_64 eng;
    explicit SampleRng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng() % bound; }
};

} // namespace

CheckResult check_umbrella_free_sampled(const Graph& g, const Ordering& ord,
                                        std::uint64_t samples, std::uint64_t seed) {
    if (g.num_edges() == 0) return std::nullopt;
    SampleRng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto [u, v] = g.edges()[rng.below(g.num_edges())];
        vertex_t i = ord.position_of(u), k = ord.position_of(v);
        if (i > k) std::swap(i, k);
        if (k - i < 2) continue;
        vertex_t j = i + 1 + static_cast<vertex_t>(rng.below(k - i - 1));
        vertex_t b = ord.at(j);
        if (!g.has_edge(ord.at(i), b) && !g.has_edge(b, ord.at(k)))
            return Violation{Violation::Kind::Umbrella, {ord.at(i), b, ord.at(k)}};
    }
    return std::nullopt;
}

CheckResult check_4pc_sampled(const Graph& g, const Ordering& ord, std::uint64_t samples,
                              std::uint64_t seed) {
    if (g.num_edges() == 0) return std::nullopt;
    SampleRng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto [u, v] = g.edges()[rng.below(g.num_edges())];
        vertex_t i = ord.position_of(u), k = ord.position_of(v);
        if (i > k) std::swap(i, k);
        if (k - i < 2) continue;
        vertex_t j = i + 1 + static_cast<vertex_t>(rng.below(k - i - 1));
        vertex_t a = ord.at(i), b = ord.at(j), c = ord.at(k);
        if (g.has_edge(a, b)) continue;
        bool found = false;
        for (vertex_t d : g.neighbors(b)) {
            vertex_t pd = ord.position_of(d);
            if (pd > i && pd < j && !g.has_edge(d, c)) {
                found = true;
                break;
            }
        }
        if (!found) return Violation{Violation::Kind::FourPoint, {a, b, c}};
    }
    return std::nullopt;
}

CheckResult check_flipping_sampled(const Graph& g, const Ordering& sigma, const Ordering& tau,
                                   std::uint64_t samples, std::uint64_t seed) {
    const vertex_t n = g.num_vertices();
    if (n < 2) return std::nullopt;
    SampleRng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        vertex_t u = static_cast<vertex_t>(rng.below(n));
        vertex_t v = static_cast<vertex_t>(rng.below(n));
        if (u == v || g.has_edge(u, v)) continue;
        bool sig_uv = sigma.position_of(u) < sigma.position_of(v);
        bool tau_vu = tau.position_of(v) < tau.position_of(u);
        if (sig_uv != tau_vu) return Violation{Violation::Kind::Flip, {u, v}};
    }
    return std::nullopt;
}

std::optional<Ordering> brute_force_cocomp_order(const Graph& g) {
    const vertex_t n = g.num_vertices();
    if (n > 10) throw std::invalid_argument("brute_force_cocomp_order: n must be <= 10");
    if (n == 0) return Ordering(std::vector<vertex_t>{});

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    std::vector<vertex_t> perm;
    perm.reserve(n);
    std::vector<std::uint32_t> before(n, 0); // placed mask strictly before position j
    std::uint32_t placed = 0;

    // depth-first in ascending candidate order gives the lexicographically
    // first valid permutation; a prefix dies as soon as some placed pair
    // (a, b) with ab not in E has a candidate x with ax in E, bx not in E
    auto dfs = [&](auto&& self) -> bool {
        if (perm.size() == n) return true;
        for (vertex_t x = 0; x < n; ++x) {
            if (placed & (1u << x)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < perm.size() && ok; ++j) {
                vertex_t b = perm[j];
                if ((adj[x] >> b) & 1) continue;
                if ((before[j] & adj[x] & ~adj[b]) != 0) ok = false;
            }
            if (!ok) continue;
            before[perm.size()] = placed;
            perm.push_back(x);
            placed |= 1u << x;
            if (self(self)) return true;
            placed &= ~(1u << x);
            perm.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    return Ordering(std::move(perm));
}

} // namespace cocomp
