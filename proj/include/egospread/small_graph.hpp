#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "egospread/graph.hpp"
#include "egospread/util.hpp"

namespace egospread {

inline constexpr int kMaxSmallOrder = 10;

// Dense graph on <= 10 vertices stored as an upper-triangle bitmask.
// Pair (i,j), i<j, sits at bit j*(j-1)/2 + i, so all bits involving the
// highest vertex are contiguous; that makes vertex-by-vertex extension and
// prefix comparisons cheap.
struct SmallGraph {
    int n = 0;
    u64 bits = 0;

    static constexpr int pair_index(int i, int j) {  // requires i < j
        return j * (j - 1) / 2 + i;
    }
    bool adj(int i, int j) const {
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        return (bits >> pair_index(i, j)) & 1u;
    }
    void set_edge(int i, int j) {
        if (i > j) std::swap(i, j);
        bits |= u64(1) << pair_index(i, j);
    }
    int edge_count() const { return __builtin_popcountll(bits); }
    int total_pairs() const { return n * (n - 1) / 2; }
    u64 full_mask() const { return total_pairs() == 64 ? ~u64(0) : (u64(1) << total_pairs()) - 1; }

    SmallGraph complement() const { return {n, ~bits & full_mask()}; }
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u) d += (u != v && adj(u, v));
        return d;
    }
    // Image under vertex relabeling: vertex v of the result is perm[v] of *this.
    SmallGraph relabeled(const std::array<int, kMaxSmallOrder>& perm) const {
        SmallGraph r{n, 0};
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (adj(perm[i], perm[j])) r.bits |= u64(1) << pair_index(i, j);
        return r;
    }

    bool operator==(const SmallGraph&) const = default;
    auto operator<=>(const SmallGraph&) const = default;
};

SmallGraph from_graph(const Graph& g);
Graph to_graph(const SmallGraph& g);
SmallGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

// Canonical form: the lexicographically minimal upper-triangle bitstring over
// all vertex relabelings (bit order as in pair_index, earliest pair most
// significant). Two graphs of equal order get equal codes iff isomorphic.
struct CanonicalCode {
    int order = 0;
    u64 bits = 0;
    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;
    std::string to_string() const;
};

CanonicalCode canonical_code(const SmallGraph& g);
CanonicalCode canonical_code(const Graph& g);

// One canonical representative per isomorphism class of simple graphs on n
// vertices, 1 <= n <= 8, sorted by edge count then code bits. Built by
// orderly generation (canonical extension of the classes one order below);
// results are cached.
const std::vector<SmallGraph>& enumerate_graph_classes(int n);

// Exact induced density of `target` in `host` (both small), as a ratio of
// 64-bit integers: count of |target|-subsets inducing it over C(n,k).
std::pair<i64, i64> induced_density(const SmallGraph& target, const SmallGraph& host);

}  // namespace egospread
