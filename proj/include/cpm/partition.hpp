#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpm/graph.hpp"

namespace cpm {

// Assignment of n nodes to K labeled community slots. Empty slots are legal
// states: K is fixed, not the number of occupied communities. Mutable value
// owned by one worker at a time.
struct Partition {
    std::vector<int> sigma;  // sigma[i] in [0, K)
    int k = 0;
    std::vector<int> sizes;  // sizes[s] = |{i : sigma[i] = s}|

    int n() const { return static_cast<int>(sigma.size()); }
    void move(int node, int target);

    bool operator==(const Partition&) const = default;
};

// k = -1 infers 1 + max label (at least 1).
Partition partition_from_sigma(std::vector<int> sigma, int k = -1);
Partition singleton_partition(int n);
Partition grand_coalition(int n, int k = 1);
Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks, int k = -1);

int occupied_slots(const Partition& part);

// Text format: one community index per line (line i = sigma_i), or a JSON
// integer array. expected_n / k of -1 mean "infer".
Partition load_partition(std::istream& in, int expected_n = -1, int k = -1);
Partition load_partition_file(const std::string& path, int expected_n = -1, int k = -1);
void save_partition(std::ostream& out, const Partition& part);

// Neighbors / non-neighbors of a node inside one slot, with the node itself
// excluded from its own slot: non_neighbors = n_k - neighbors - [sigma_i = k].
struct DegreePair {
    int neighbors = 0;
    int non_neighbors = 0;
};

DegreePair degrees_in(const Graph& g, const Partition& part, int node, int slot);

struct SlotStats {
    int size = 0;        // n_k
    long long edges = 0; // m_k, both endpoints in the slot
};

std::vector<SlotStats> community_stats(const Graph& g, const Partition& part);

}  // namespace cpm
