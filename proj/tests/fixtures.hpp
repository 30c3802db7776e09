#pragma once

#include <vector>

#include "cpm/graph.hpp"
#include "cpm/partition.hpp"
#include "cpm/rng.hpp"

namespace fixtures {

// 4-node star-plus-edge: 0-1, 0-2, 0-3, 1-2.
inline cpm::Graph star4() {
    return cpm::graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
}

// Two triangles {0,1,2} and {3,4,5} bridged by 1-4.
inline cpm::Graph two_triangles() {
    return cpm::graph_from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 4}});
}

inline cpm::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return cpm::graph_from_edges(n, edges);
}

inline cpm::Graph random_graph(int n, double p, std::uint64_t seed) {
    cpm::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return cpm::graph_from_edges(n, edges);
}

inline cpm::Partition random_partition(int n, int k, std::uint64_t seed) {
    cpm::Rng rng(seed);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) {
        sigma[i] = static_cast<int>(rng.below(static_cast<std::uint32_t>(k)));
    }
    return cpm::partition_from_sigma(std::move(sigma), k);
}

inline cpm::Resolution random_resolution(std::uint64_t seed, int max_den = 50) {
    cpm::Rng rng(seed);
    long long den = 1 + rng.below(static_cast<std::uint32_t>(max_den));
    long long num = rng.below(static_cast<std::uint32_t>(den + 1));
    return cpm::make_rational(num, den);
}

}  // namespace fixtures
