#include "cpm/evalmetrics.hpp"

#include <cstdio>
#include <stdexcept>

#include "cpm/metagraph.hpp"
#include "cpm/robustness.hpp"

namespace cpm {

ContingencyTable contingency_table(const Partition& part, const Partition& reference) {
    if (part.n() != reference.n()) throw std::invalid_argument("partition sizes differ");
    ContingencyTable table;
    table.total = part.n();
    table.counts.assign(part.k, std::vector<long long>(reference.k, 0));
    table.row_sums.assign(part.k, 0);
    table.col_sums.assign(reference.k, 0);
    for (int i = 0; i < part.n(); ++i) {
        ++table.counts[part.sigma[i]][reference.sigma[i]];
        ++table.row_sums[part.sigma[i]];
        ++table.col_sums[reference.sigma[i]];
    }
    return table;
}

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

double ari(const Partition& part, const Partition& reference) {
    ContingencyTable table = contingency_table(part, reference);
    long long same_both = 0;
    for (const auto& row : table.counts) {
        for (long long cell : row) same_both += choose2(cell);
    }
    long long same_a = 0;
    for (long long r : table.row_sums) same_a += choose2(r);
    long long same_b = 0;
    for (long long c : table.col_sums) same_b += choose2(c);
    long long total_pairs = choose2(table.total);

    // ari = (S - ab/T) / ((a+b)/2 - ab/T), kept integral until the division.
    __int128 numerator = 2 * (static_cast<__int128>(total_pairs) * same_both -
                              static_cast<__int128>(same_a) * same_b);
    __int128 denominator = static_cast<__int128>(total_pairs) * (same_a + same_b) -
                           2 * static_cast<__int128>(same_a) * same_b;
    if (denominator == 0) {
        return canonical_sigma(part) == canonical_sigma(reference) ? 1.0 : 0.0;
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string experiment_csv_header() {
    return "seed,K,N,p,lambda,eta,method,moves,evals,runtime_ms,robustness,ari";
}

namespace {

std::string trimmed_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

}  // namespace

std::string experiment_csv_row(const ExperimentRecord& rec) {
    std::string out;
    out += std::to_string(rec.seed);
    out += ',' + std::to_string(rec.communities);
    out += ',' + std::to_string(rec.nodes_per_community);
    out += ',' + trimmed_double(rec.intra_probability);
    out += ',' + trimmed_double(rec.difficulty);
    out += ',' + trimmed_double(rec.eta);
    out += ',' + rec.method;
    out += ',' + std::to_string(rec.moves);
    out += ',' + std::to_string(rec.node_evaluations);
    out += ',' + trimmed_double(rec.runtime_ms);
    out += ',' + trimmed_double(rec.robustness);
    out += ',' + trimmed_double(rec.ari);
    return out;
}

ExperimentRecord summarize(const SappmSpec& spec, double eta, const std::string& method,
                           const Graph& g, const Partition& result, const Partition& truth,
                           long long moves, long long node_evaluations, double runtime_ms) {
    ExperimentRecord rec;
    rec.seed = spec.seed;
    rec.communities = spec.communities;
    rec.nodes_per_community = spec.nodes_per_community;
    rec.intra_probability = spec.intra_probability;
    rec.difficulty = spec.difficulty;
    rec.eta = eta;
    rec.method = method;
    rec.moves = moves;
    rec.node_evaluations = node_evaluations;
    rec.runtime_ms = runtime_ms;
    rec.robustness = to_double(partition_robustness(g, result));
    rec.ari = ari(result, truth);
    return rec;
}

}  // namespace cpm
