#include "cpm/dynamics.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "cpm/rng.hpp"

namespace cpm {

namespace {

// Per-node slot evaluation with a reusable neighbor-count buffer. Only the
// slots of node's neighbors are touched, so clearing is O(deg).
class MoveScanner {
public:
    MoveScanner(const Graph& g, Resolution gamma) : g_(g), gamma_(gamma) {}

    struct Choice {
        int target = -1;
        long long gain_units = 0;
    };

    // Best target by gain, ties toward the lowest slot; target = -1 when no
    // strictly improving move exists. stop_at_first switches to the
    // better-response rule: take the lowest-indexed improving slot.
    Choice scan(const Partition& part, int node, bool stop_at_first, bool allow_empty_target) {
        counts_.assign(part.k, 0);  // cheap at desk-scale K; avoids stale state
        for (int j : g_.adj[node]) ++counts_[part.sigma[j]];
        int cur = part.sigma[node];
        long long d_cur = counts_[cur];
        long long n_cur = part.sizes[cur];
        Choice best;
        for (int s = 0; s < part.k; ++s) {
            if (s == cur) continue;
            if (!allow_empty_target && part.sizes[s] == 0) continue;
            long long dd = counts_[s] - d_cur;
            long long dn = part.sizes[s] - n_cur + 1;
            long long units = gamma_.den * dd - gamma_.num * dn;
            if (units <= 0) continue;
            if (stop_at_first) return Choice{s, units};
            if (units > best.gain_units) {
                best.target = s;
                best.gain_units = units;
            }
        }
        return best;
    }

private:
    const Graph& g_;
    Resolution gamma_;
    std::vector<long long> counts_;
};

}  // namespace

MoveGain apply_move(const Graph& g, Partition& part, int node, int target, Resolution gamma) {
    MoveGain gain = move_gain(g, part, node, target, gamma);
    part.move(node, target);
    return gain;
}

std::optional<Witness> find_improving_move(const Graph& g, const Partition& part,
                                           Resolution gamma) {
    MoveScanner scanner(g, gamma);
    for (int i = 0; i < g.n; ++i) {
        auto choice = scanner.scan(part, i, false, true);
        if (choice.target >= 0) return Witness{i, choice.target, choice.gain_units};
    }
    return std::nullopt;
}

bool is_equilibrium(const Graph& g, const Partition& part, Resolution gamma) {
    return !find_improving_move(g, part, gamma).has_value();
}

std::pair<Partition, RunStats> run_dynamics(const Graph& g, Partition part, Resolution gamma,
                                            const DynamicsConfig& config) {
    if (static_cast<int>(part.sigma.size()) != g.n) {
        throw std::invalid_argument("partition size does not match graph");
    }
    if (config.selection == Selection::GlobalBest && config.node_rule != NodeRule::Best) {
        throw std::invalid_argument("global-best selection requires the node-best rule");
    }

    RunStats stats;
    MoveScanner scanner(g, gamma);
    const bool better = config.node_rule == NodeRule::Better;

    auto record = [&](int node, int from, int to, long long units) {
        ++stats.moves;
        if (config.record_trajectory) stats.trajectory.push_back({node, from, to, units});
    };

    if (config.selection == Selection::GlobalBest) {
        for (;;) {
            int best_node = -1;
            MoveScanner::Choice best;
            for (int i = 0; i < g.n; ++i) {
                ++stats.node_evaluations;
                auto choice = scanner.scan(part, i, false, config.allow_empty_target);
                if (choice.target >= 0 && choice.gain_units > best.gain_units) {
                    best = choice;
                    best_node = i;  // strict > keeps the lowest node id on ties
                }
            }
            if (best_node < 0) break;
            record(best_node, part.sigma[best_node], best.target, best.gain_units);
            part.move(best_node, best.target);
        }
    } else {
        std::vector<int> order(g.n);
        std::iota(order.begin(), order.end(), 0);
        if (config.queue_init == QueueInit::SeededShuffle) {
            Rng rng(derive_stream(config.seed, 0x71756575656f7264ull));
            for (int i = g.n - 1; i > 0; --i) {
                std::swap(order[i], order[rng.below(static_cast<std::uint32_t>(i + 1))]);
            }
        }
        std::vector<char> queued(g.n, 0);
        std::deque<int> queue;
        bool changed = true;
        while (changed) {
            changed = false;
            queue.assign(order.begin(), order.end());
            std::fill(queued.begin(), queued.end(), 1);
            while (!queue.empty()) {
                int i = queue.front();
                queue.pop_front();
                queued[i] = 0;
                ++stats.node_evaluations;
                auto choice = scanner.scan(part, i, better, config.allow_empty_target);
                if (choice.target < 0) continue;
                record(i, part.sigma[i], choice.target, choice.gain_units);
                part.move(i, choice.target);
                changed = true;
                for (int j : g.adj[i]) {
                    if (part.sigma[j] != choice.target && !queued[j]) {
                        queued[j] = 1;
                        queue.push_back(j);
                    }
                }
            }
        }
    }

    stats.final_potential = partition_potential(g, part, gamma);
    return {std::move(part), std::move(stats)};
}

Partition one_pass(const Graph& g, const Partition& part) {
    std::vector<long long> counts(part.k, 0);
    std::vector<std::pair<int, int>> marked;  // node -> target
    for (int i = 0; i < g.n; ++i) {
        for (int j : g.adj[i]) ++counts[part.sigma[j]];
        int cur = part.sigma[i];
        long long best = counts[cur];
        int target = -1;
        for (int s = 0; s < part.k; ++s) {
            if (s != cur && counts[s] > best) {
                best = counts[s];
                target = s;
            }
        }
        if (target >= 0) marked.emplace_back(i, target);
        for (int j : g.adj[i]) counts[part.sigma[j]] = 0;
    }
    Partition out = part;
    for (auto [node, target] : marked) out.move(node, target);
    return out;
}

Partition mirror(const Partition& part) { return part; }

}  // namespace cpm
