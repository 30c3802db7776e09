#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpm/partition.hpp"
#include "cpm/synthgen.hpp"

namespace cpm {

struct ContingencyTable {
    std::vector<std::vector<long long>> counts;  // counts[k][l] = |C_k ∩ C*_l|
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    long long total = 0;
};

ContingencyTable contingency_table(const Partition& part, const Partition& reference);

// Adjusted Rand index in [-1, 1], computed with exact integer binomials and
// converted to floating point only at the final division. When the chance
// correction degenerates (both partitions all-singleton or both one block)
// returns 1 for identical groupings and 0 otherwise.
double ari(const Partition& part, const Partition& reference);

struct ExperimentRecord {
    std::uint64_t seed = 0;
    int communities = 0;
    int nodes_per_community = 0;
    double intra_probability = 0.0;
    double difficulty = 0.0;
    double eta = 0.0;
    std::string method;
    long long moves = 0;
    long long node_evaluations = 0;
    double runtime_ms = 0.0;
    double robustness = 0.0;
    double ari = 0.0;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRecord& rec);

ExperimentRecord summarize(const SappmSpec& spec, double eta, const std::string& method,
                           const Graph& g, const Partition& result, const Partition& truth,
                           long long moves, long long node_evaluations, double runtime_ms);

}  // namespace cpm
