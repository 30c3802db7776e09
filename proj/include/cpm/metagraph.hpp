#pragma once

#include <string>
#include <vector>

#include "cpm/partition.hpp"
#include "cpm/robustness.hpp"

namespace cpm {

// Brute-force oracle over the whole partition space of a small graph.
// Metanodes are the Bell(n) unlabeled set partitions in canonical form
// (restricted growth: labels appear in first-occurrence order, which equals
// "blocks sorted by minimum element"). An edge joins two partitions that
// differ by relocating a single node, including moves into a fresh block and
// moves that dissolve a block.

inline constexpr int kMetagraphNodeCap = 10;  // Bell(10) = 115975

long long bell_number(int n);

std::vector<std::vector<int>> enumerate_partitions(int n);  // throws above the cap

std::vector<int> canonicalize(const std::vector<int>& sigma);
std::vector<int> canonical_sigma(const Partition& part);  // drops empty slots

std::string block_string(const std::vector<int>& canonical);  // "{0,1}|{2,3}"

// Labeled bridge: canonical partition plus `extra_slots` empty slots, so the
// fixed-K dynamics can emulate the metagraph's block-split moves.
Partition labeled_partition(const std::vector<int>& canonical, int extra_slots = 1);

struct MetaEdge {
    int a = 0;  // metanode ids, a < b
    int b = 0;
    int moving_node = 0;
    // Deltas of the a -> b sense; the b -> a sense is their negation.
    long long delta_neighbors = 0;
    long long delta_non_neighbors = 0;
    MoveClassification forward;   // a -> b
    MoveClassification backward;  // b -> a
};

struct MetaGraph {
    int n = 0;
    std::vector<std::vector<int>> metanodes;
    std::vector<MetaEdge> edges;
};

MetaGraph build_metagraph(const Graph& g);

// Every edge directed toward strictly higher partition potential at the given
// gamma; zero-gain edges are dropped. Acyclic by construction.
struct OrientedMetaGraph {
    int metanode_count = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> out_degree;
};

OrientedMetaGraph orient(const MetaGraph& meta, Resolution gamma);

std::vector<int> sinks(const OrientedMetaGraph& oriented);

bool is_acyclic(const OrientedMetaGraph& oriented);

std::string metagraph_dot(const MetaGraph& meta);
std::string metagraph_json(const MetaGraph& meta);
std::string metagraph_json(const MetaGraph& meta, Resolution gamma);  // adds sinks

}  // namespace cpm
