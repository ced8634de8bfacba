#pragma once

#include <array>
#include <cstdint>

#include "egospread/catalog.hpp"
#include "egospread/graph.hpp"

namespace egospread {

// Exact induced counts of every 3- and 4-vertex class in one ego network,
// indexed in catalog order (counts3[0] = K3bar, ..., counts4[10] = K4).
struct MotifCensus {
    i64 n = 0;  // ego-net order
    i64 m = 0;  // ego-net edge count
    std::array<i64, kOrder3Count> counts3{};
    std::array<i64, kOrder4Count> counts4{};

    i64 count(int catalog_index) const {
        return catalog_index < kOrder3Count ? counts3[size_t(catalog_index)]
                                            : counts4[size_t(catalog_index - kOrder3Count)];
    }
    // count / C(n, 3 or 4) as an exact integer ratio (0/1 when n < order).
    std::pair<i64, i64> density(int catalog_index) const;
    // m / C(n,2); 0/1 for n < 2.
    std::pair<i64, i64> edge_density() const;

    // Partition identities: counts sum to C(n,3) and C(n,4).
    void validate() const;
};

// Exact census via non-induced primitive counts (wedges, triangles, paths,
// stars, tailed triangles, 4-cycles, diamonds, 4-cliques plus the
// disconnected patterns by inclusion-exclusion), converted to induced counts
// with the derived linear transformation. O(m * d_max + n^2 * n/64) per ego.
MotifCensus census(const Graph& ego);

// Oracle: enumerate all k-subsets and classify each induced subgraph.
// Guarded to C(n,k) <= 10^7 subsets.
std::array<i64, kOrder3Count> brute_force_census3(const Graph& ego);
std::array<i64, kOrder4Count> brute_force_census4(const Graph& ego);

// Non-induced -> induced conversion, derived at startup by brute force over
// all labeled graphs on 3 (resp. 4) vertices; never hand-typed. Entry [p][h]
// counts spanning subgraphs of class h isomorphic to class p. The inverse is
// integral because the matrix is unitriangular in catalog (edge count) order.
struct ConversionTables {
    std::array<std::array<i64, 4>, 4> contain3;
    std::array<std::array<i64, 4>, 4> inverse3;
    std::array<std::array<i64, 11>, 11> contain4;
    std::array<std::array<i64, 11>, 11> inverse4;
};
const ConversionTables& conversion_tables();

namespace detail {
// Census forced through the sorted-merge fallback (normally taken only for
// ego networks too large for the dense bit matrix).
MotifCensus census_merge_path(const Graph& ego);
}  // namespace detail

}  // namespace egospread
