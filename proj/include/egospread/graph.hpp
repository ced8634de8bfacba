#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "egospread/util.hpp"

namespace egospread {

// Simple undirected graph with contiguous vertex ids. Immutable after
// construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;
    // Builds from an edge list; dedupes and drops self loops unconditionally,
    // sorts adjacency. Edges must reference vertices < n.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    i64 edge_count() const { return m_; }
    int degree(int v) const { return int(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as sorted (u < v) pairs, ascending.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    i64 m_ = 0;
    std::vector<std::vector<int>> adj_;
};

struct LoadOptions {
    bool dedupe = true;
    bool drop_self_loops = true;
    bool relabel = true;
};

struct LoadStats {
    i64 lines_parsed = 0;
    i64 self_loops_dropped = 0;
    i64 duplicates_collapsed = 0;
};

struct LoadedGraph {
    Graph graph;
    std::vector<i64> original_ids;  // position v holds the input id of vertex v
    LoadStats stats;

    std::string summary() const;  // structured one-record text summary
};

// Parses "u v" or "u,v" lines; '#'/'%' start comments; ids are arbitrary
// nonnegative integers remapped to 0..n-1 in first-appearance order.
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& opts = {});
LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& opts = {});

// Induced subgraph on N(v), vertex order = sorted neighbor order. The ego
// vertex itself is not part of the result.
Graph ego_network(const Graph& g, int v);

// Round-trip text form (one "u v" line per edge, ascending).
std::string to_edge_list(const Graph& g);

}  // namespace egospread
