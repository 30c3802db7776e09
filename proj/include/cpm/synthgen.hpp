#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "cpm/partition.hpp"

namespace cpm {

// Symmetric assortative planted partition: `communities` blocks of
// `nodes_per_community` nodes each; intra-block pairs are edged with
// probability p, inter-block pairs with q = p * difficulty.
struct SappmSpec {
    int communities = 2;
    int nodes_per_community = 10;
    double intra_probability = 0.1;  // p
    double difficulty = 0.5;         // lambda = q / p, in [0, 1]
    std::uint64_t seed = 0;
};

std::string spec_json(const SappmSpec& spec);

// Returns the sampled graph and the ground truth (block b = nodes
// b*N .. b*N+N-1). Identical spec => identical edge set.
std::pair<Graph, Partition> generate(const SappmSpec& spec);

// Relabeling noise for community tracking: floor(eta*n) nodes are chosen
// uniformly without replacement and their membership labels are permuted
// uniformly among themselves, so all community sizes are preserved. The
// permutation may leave some chosen nodes in place.
struct NoiseSpec {
    double eta = 0.0;
    std::uint64_t seed = 0;
};

Partition perturb(const Partition& truth, const NoiseSpec& noise);

}  // namespace cpm
