#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpm/potential.hpp"

namespace cpm {

enum class NodeRule { Best, Better };
enum class Selection { QueueOrder, GlobalBest };
enum class QueueInit { IdOrder, SeededShuffle };
enum class TieBreak { LowestIndex };

struct DynamicsConfig {
    NodeRule node_rule = NodeRule::Best;
    Selection selection = Selection::QueueOrder;  // GlobalBest implies NodeRule::Best
    QueueInit queue_init = QueueInit::IdOrder;
    TieBreak tie_break = TieBreak::LowestIndex;
    bool allow_empty_target = true;
    std::uint64_t seed = 0;
    bool record_trajectory = true;
};

struct MoveRecord {
    int node = 0;
    int from = 0;
    int to = 0;
    long long gain_units = 0;
};

struct RunStats {
    long long moves = 0;
    long long node_evaluations = 0;
    ScaledValue final_potential;
    std::vector<MoveRecord> trajectory;
};

// Local-move dynamics over the K slots of the starting partition. Each
// applied move has strictly positive gain (>= 1 unit), so the run terminates
// after at most 2*scale*n^2 moves and the returned partition is an
// equilibrium: no node can strictly improve by relocating.
std::pair<Partition, RunStats> run_dynamics(const Graph& g, Partition start, Resolution gamma,
                                            const DynamicsConfig& config = {});

// Applies one relocation unconditionally and returns its realized gain.
// Requires target != sigma[node].
MoveGain apply_move(const Graph& g, Partition& part, int node, int target, Resolution gamma);

struct Witness {
    int node = 0;
    int target = 0;
    long long gain_units = 0;
};

// First strictly improving (node, target) over all K slots, or nullopt.
std::optional<Witness> find_improving_move(const Graph& g, const Partition& part,
                                           Resolution gamma);
bool is_equilibrium(const Graph& g, const Partition& part, Resolution gamma);

// Single simultaneous sweep: every node whose best neighbor count in another
// slot strictly beats its current one (ties broken toward the lowest slot) is
// moved, all against the original membership.
Partition one_pass(const Graph& g, const Partition& part);

// Identity baseline: returns the input partition unchanged.
Partition mirror(const Partition& part);

}  // namespace cpm
