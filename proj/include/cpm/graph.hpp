#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cpm/rational.hpp"

namespace cpm {

// Simple undirected graph: no self-loops, no duplicate edges, node ids
// 0..n-1. Immutable after construction and safe to share across threads.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int degree(int i) const { return static_cast<int>(adj[i].size()); }
    bool has_edge(int u, int v) const;
};

// Deduplicates and symmetrizes the edge list; rejects self-loops and ids
// outside [0, n).
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Text format: one "u v" pair per line, '#' starts a comment, optional first
// line "n <count>" declares the node count (otherwise 1 + max id is used).
// Malformed lines, self-loops and out-of-range ids are reported with their
// line number.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(std::ostream& out, const Graph& g);

// 2m / (n(n-1)) as an exact reduced fraction; requires n >= 2.
Resolution edge_density(const Graph& g);

}  // namespace cpm
