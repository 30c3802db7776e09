#pragma once

#include <string>

#include "cpm/partition.hpp"
#include "cpm/rational.hpp"

namespace cpm {

// A quality value carried as an integer count of 1/scale units, where scale
// is the denominator of the active resolution. Exact by construction: for
// gamma = num/den every pair value is an integer multiple of 1/den.
struct ScaledValue {
    long long units = 0;
    long long scale = 1;
};

Rational to_rational(ScaledValue v);
double to_double(ScaledValue v);
std::string to_string(ScaledValue v);  // reduced fraction

inline bool operator==(ScaledValue a, ScaledValue b) {
    return to_rational(a) == to_rational(b);
}

// Single-node relocation, described by the change in neighbors, in
// non-neighbors, and in perceived community size (delta_size = the sum of the
// first two). gain_units = scale * gain, an exact integer.
struct MoveGain {
    long long delta_neighbors = 0;      // d_target - d_current
    long long delta_non_neighbors = 0;  // dhat_target - dhat_current
    long long delta_size = 0;           // n_target - n_current + 1
    long long gain_units = 0;           // scale*delta_neighbors - num*delta_size
    long long scale = 1;
};

Rational gain_value(const MoveGain& g);

// Value of an (ordered-pair-free) node pair: 1-gamma for an intra-community
// edge, -gamma for an intra-community non-edge, 0 across communities.
ScaledValue pair_value(bool adjacent, bool same_community, Resolution gamma);

// Value of a node measured against slot `slot` as if it were a member:
// (1-gamma)*d - gamma*dhat.
ScaledValue node_potential(const Graph& g, const Partition& part, int node, int slot,
                           Resolution gamma);

// Sum over slots of m_k - gamma*C(n_k, 2). Bounded by n^2 in absolute value.
ScaledValue partition_potential(const Graph& g, const Partition& part, Resolution gamma);

MoveGain gain_from_deltas(long long delta_neighbors, long long delta_non_neighbors,
                          Resolution gamma);

// Gain of relocating `node` to slot `target`; equals the partition-potential
// change of actually performing the move. Requires target != sigma[node].
MoveGain move_gain(const Graph& g, const Partition& part, int node, int target,
                   Resolution gamma);

}  // namespace cpm
