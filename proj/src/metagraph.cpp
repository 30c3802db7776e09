#include "cpm/metagraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cpm {

long long bell_number(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    // Bell triangle.
    std::vector<long long> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (long long v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::vector<std::vector<int>> enumerate_partitions(int n) {
    if (n > kMetagraphNodeCap) {
        throw std::invalid_argument("partition enumeration capped at n = " +
                                    std::to_string(kMetagraphNodeCap));
    }
    std::vector<std::vector<int>> out;
    if (n <= 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: sigma[0] = 0, sigma[i] <= 1 + max(prefix).
    std::vector<int> sigma(n, 0);
    auto rec = [&](auto&& self, int pos, int max_label) -> void {
        if (pos == n) {
            out.push_back(sigma);
            return;
        }
        for (int s = 0; s <= max_label + 1; ++s) {
            sigma[pos] = s;
            self(self, pos + 1, std::max(max_label, s));
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<int> canonicalize(const std::vector<int>& sigma) {
    std::vector<int> relabel(sigma.size() + 1, -1);
    std::vector<int> out(sigma.size());
    int next = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        int s = sigma[i];
        if (relabel[s] == -1) relabel[s] = next++;
        out[i] = relabel[s];
    }
    return out;
}

std::vector<int> canonical_sigma(const Partition& part) { return canonicalize(part.sigma); }

std::string block_string(const std::vector<int>& canonical) {
    int blocks = 0;
    for (int s : canonical) blocks = std::max(blocks, s + 1);
    std::ostringstream out;
    for (int b = 0; b < blocks; ++b) {
        if (b > 0) out << "|";
        out << "{";
        bool first = true;
        for (size_t i = 0; i < canonical.size(); ++i) {
            if (canonical[i] != b) continue;
            if (!first) out << ",";
            out << i;
            first = false;
        }
        out << "}";
    }
    return out.str();
}

Partition labeled_partition(const std::vector<int>& canonical, int extra_slots) {
    int blocks = 0;
    for (int s : canonical) blocks = std::max(blocks, s + 1);
    if (blocks == 0) blocks = 1;
    return partition_from_sigma(canonical, blocks + extra_slots);
}

MetaGraph build_metagraph(const Graph& g) {
    if (g.n > kMetagraphNodeCap) {
        throw std::invalid_argument("metagraph capped at n = " +
                                    std::to_string(kMetagraphNodeCap));
    }
    MetaGraph meta;
    meta.n = g.n;
    meta.metanodes = enumerate_partitions(g.n);

    std::map<std::vector<int>, int> index;
    for (size_t id = 0; id < meta.metanodes.size(); ++id) {
        index[meta.metanodes[id]] = static_cast<int>(id);
    }

    std::map<std::pair<int, int>, MetaEdge> edges;
    std::vector<int> moved;
    for (size_t a = 0; a < meta.metanodes.size(); ++a) {
        const auto& sigma = meta.metanodes[a];
        int blocks = 0;
        for (int s : sigma) blocks = std::max(blocks, s + 1);
        std::vector<int> sizes(blocks + 1, 0);
        for (int s : sigma) ++sizes[s];

        for (int i = 0; i < g.n; ++i) {
            int cur = sigma[i];
            for (int target = 0; target <= blocks; ++target) {
                if (target == cur) continue;
                if (target == blocks && sizes[cur] == 1) continue;  // singleton to fresh block: no-op
                moved = sigma;
                moved[i] = target;
                int b = index.at(canonicalize(moved));
                int lo = std::min(static_cast<int>(a), b);
                int hi = std::max(static_cast<int>(a), b);
                if (edges.count({lo, hi})) continue;

                int d_cur = 0;
                int d_target = 0;
                for (int j : g.adj[i]) {
                    if (sigma[j] == cur) ++d_cur;
                    if (target < blocks && sigma[j] == target) ++d_target;
                }
                int n_target = target < blocks ? sizes[target] : 0;
                long long dd = d_target - d_cur;
                long long dh = (n_target - d_target) - (sizes[cur] - d_cur - 1);
                if (static_cast<int>(a) != lo) {
                    dd = -dd;
                    dh = -dh;
                }
                MetaEdge edge;
                edge.a = lo;
                edge.b = hi;
                edge.moving_node = i;
                edge.delta_neighbors = dd;
                edge.delta_non_neighbors = dh;
                edge.forward = classify_move(gain_from_deltas(dd, dh, Rational{0, 1}));
                edge.backward = classify_move(gain_from_deltas(-dd, -dh, Rational{0, 1}));
                edges[{lo, hi}] = edge;
            }
        }
    }
    meta.edges.reserve(edges.size());
    for (auto& [key, edge] : edges) meta.edges.push_back(edge);
    return meta;
}

OrientedMetaGraph orient(const MetaGraph& meta, Resolution gamma) {
    OrientedMetaGraph out;
    out.metanode_count = static_cast<int>(meta.metanodes.size());
    out.out_degree.assign(out.metanode_count, 0);
    for (const auto& edge : meta.edges) {
        long long units = gamma.den * edge.delta_neighbors -
                          gamma.num * (edge.delta_neighbors + edge.delta_non_neighbors);
        if (units > 0) {
            out.arcs.emplace_back(edge.a, edge.b);
            ++out.out_degree[edge.a];
        } else if (units < 0) {
            out.arcs.emplace_back(edge.b, edge.a);
            ++out.out_degree[edge.b];
        }
    }
    return out;
}

std::vector<int> sinks(const OrientedMetaGraph& oriented) {
    std::vector<int> out;
    for (int id = 0; id < oriented.metanode_count; ++id) {
        if (oriented.out_degree[id] == 0) out.push_back(id);
    }
    return out;
}

bool is_acyclic(const OrientedMetaGraph& oriented) {
    std::vector<std::vector<int>> succ(oriented.metanode_count);
    std::vector<int> indegree(oriented.metanode_count, 0);
    for (auto [from, to] : oriented.arcs) {
        succ[from].push_back(to);
        ++indegree[to];
    }
    std::vector<int> ready;
    for (int id = 0; id < oriented.metanode_count; ++id) {
        if (indegree[id] == 0) ready.push_back(id);
    }
    int seen = 0;
    while (!ready.empty()) {
        int id = ready.back();
        ready.pop_back();
        ++seen;
        for (int next : succ[id]) {
            if (--indegree[next] == 0) ready.push_back(next);
        }
    }
    return seen == oriented.metanode_count;
}

namespace {

std::string threshold_string(const MoveClassification& cls) {
    return cls.has_threshold ? to_string(cls.threshold) : "none";
}

nlohmann::json sense_json(const MoveClassification& cls, long long dd, long long dh) {
    nlohmann::json out;
    out["delta_neighbors"] = dd;
    out["delta_non_neighbors"] = dh;
    out["type"] = move_class_name(cls.kind);
    out["gamma_star"] = threshold_string(cls);
    return out;
}

}  // namespace

std::string metagraph_dot(const MetaGraph& meta) {
    std::ostringstream out;
    out << "digraph metagraph {\n";
    out << "  node [shape=box];\n";
    for (size_t id = 0; id < meta.metanodes.size(); ++id) {
        out << "  p" << id << " [label=\"" << block_string(meta.metanodes[id]) << "\"];\n";
    }
    for (const auto& edge : meta.edges) {
        const char* dir = "both";
        int tail = edge.a;
        int head = edge.b;
        switch (edge.forward.kind) {
            case MoveClass::AlwaysPreferred: dir = "forward"; break;
            case MoveClass::NeverPreferred:
                dir = "forward";
                std::swap(tail, head);
                break;
            case MoveClass::Neutral: dir = "none"; break;
            default: dir = "both"; break;
        }
        out << "  p" << tail << " -> p" << head << " [dir=" << dir << ", label=\""
            << edge.moving_node << "; g*=" << threshold_string(edge.forward) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

nlohmann::json metagraph_json_impl(const MetaGraph& meta, const Resolution* gamma) {
    nlohmann::json out;
    out["n"] = meta.n;
    out["bell"] = static_cast<long long>(meta.metanodes.size());
    std::vector<std::string> names;
    names.reserve(meta.metanodes.size());
    for (const auto& sigma : meta.metanodes) names.push_back(block_string(sigma));
    out["metanodes"] = names;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& edge : meta.edges) {
        nlohmann::json je;
        je["a"] = edge.a;
        je["b"] = edge.b;
        je["node"] = edge.moving_node;
        je["forward"] = sense_json(edge.forward, edge.delta_neighbors, edge.delta_non_neighbors);
        je["backward"] =
            sense_json(edge.backward, -edge.delta_neighbors, -edge.delta_non_neighbors);
        edges.push_back(je);
    }
    out["edges"] = edges;
    if (gamma != nullptr) {
        out["gamma"] = to_string(*gamma);
        std::vector<std::string> sink_names;
        for (int id : sinks(orient(meta, *gamma))) sink_names.push_back(names[id]);
        out["sinks"] = sink_names;
    }
    return out;
}

}  // namespace

std::string metagraph_json(const MetaGraph& meta) {
    return metagraph_json_impl(meta, nullptr).dump(2);
}

std::string metagraph_json(const MetaGraph& meta, Resolution gamma) {
    return metagraph_json_impl(meta, &gamma).dump(2);
}

}  // namespace cpm
