#include "cpm/potential.hpp"

#include <stdexcept>

namespace cpm {

Rational to_rational(ScaledValue v) { return make_rational(v.units, v.scale); }

double to_double(ScaledValue v) {
    return static_cast<double>(v.units) / static_cast<double>(v.scale);
}

std::string to_string(ScaledValue v) { return to_string(to_rational(v)); }

Rational gain_value(const MoveGain& g) { return make_rational(g.gain_units, g.scale); }

ScaledValue pair_value(bool adjacent, bool same_community, Resolution gamma) {
    if (!same_community) return ScaledValue{0, gamma.den};
    if (adjacent) return ScaledValue{gamma.den - gamma.num, gamma.den};
    return ScaledValue{-gamma.num, gamma.den};
}

ScaledValue node_potential(const Graph& g, const Partition& part, int node, int slot,
                           Resolution gamma) {
    DegreePair dp = degrees_in(g, part, node, slot);
    // (1-gamma)d - gamma*dhat = d - gamma*(d + dhat), in units of 1/den.
    long long units = gamma.den * static_cast<long long>(dp.neighbors) -
                      gamma.num * static_cast<long long>(dp.neighbors + dp.non_neighbors);
    return ScaledValue{units, gamma.den};
}

ScaledValue partition_potential(const Graph& g, const Partition& part, Resolution gamma) {
    long long intra_edges = 0;
    long long intra_pairs = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (u < v && part.sigma[u] == part.sigma[v]) ++intra_edges;
        }
    }
    for (int s = 0; s < part.k; ++s) {
        long long size = part.sizes[s];
        intra_pairs += size * (size - 1) / 2;
    }
    return ScaledValue{gamma.den * intra_edges - gamma.num * intra_pairs, gamma.den};
}

MoveGain gain_from_deltas(long long delta_neighbors, long long delta_non_neighbors,
                          Resolution gamma) {
    MoveGain out;
    out.delta_neighbors = delta_neighbors;
    out.delta_non_neighbors = delta_non_neighbors;
    out.delta_size = delta_neighbors + delta_non_neighbors;
    out.scale = gamma.den;
    out.gain_units = gamma.den * delta_neighbors - gamma.num * out.delta_size;
    return out;
}

MoveGain move_gain(const Graph& g, const Partition& part, int node, int target,
                   Resolution gamma) {
    if (node < 0 || node >= g.n) throw std::out_of_range("node out of range");
    if (target < 0 || target >= part.k) throw std::out_of_range("target slot out of range");
    if (target == part.sigma[node]) throw std::invalid_argument("move to current slot");
    DegreePair from = degrees_in(g, part, node, part.sigma[node]);
    DegreePair to = degrees_in(g, part, node, target);
    return gain_from_deltas(to.neighbors - from.neighbors,
                            to.non_neighbors - from.non_neighbors, gamma);
}

}  // namespace cpm
