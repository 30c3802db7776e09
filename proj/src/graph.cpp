#include "cpm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cpm {

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative node count");
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop");
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.n = n;
    g.m = static_cast<long long>(canon.size());
    g.adj.assign(n, {});
    for (auto [u, v] : canon) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace {

[[noreturn]] void line_error(int line_no, const std::string& what) {
    throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    long long declared_n = -1;
    long long max_id = -1;
    std::string line;
    int line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;  // blank line

        if (first_content && a == "n") {
            if (!(fields >> b) || (fields >> extra)) line_error(line_no, "malformed header");
            try {
                declared_n = std::stoll(b);
            } catch (const std::exception&) {
                line_error(line_no, "malformed header count '" + b + "'");
            }
            if (declared_n < 0) line_error(line_no, "negative node count");
            first_content = false;
            continue;
        }
        first_content = false;

        if (!(fields >> b) || (fields >> extra)) {
            line_error(line_no, "expected two node ids");
        }
        long long u, v;
        try {
            u = std::stoll(a);
            v = std::stoll(b);
        } catch (const std::exception&) {
            line_error(line_no, "malformed node id");
        }
        if (u < 0 || v < 0) line_error(line_no, "negative node id");
        if (u > 1000000000 || v > 1000000000) line_error(line_no, "node id overflow");
        if (u == v) line_error(line_no, "self-loop on node " + std::to_string(u));
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
            line_error(line_no, "node id beyond declared count");
        }
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long n = declared_n >= 0 ? declared_n : max_id + 1;
    return graph_from_edges(static_cast<int>(n), edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in);
}

void save_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.n << "\n";
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (u < v) out << u << " " << v << "\n";
        }
    }
}

Resolution edge_density(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("edge density needs at least 2 nodes");
    Rational r = make_rational(2 * g.m, static_cast<long long>(g.n) * (g.n - 1));
    if (r.num < 0) return Rational{0, 1};
    if (rat_cmp(r, Rational{1, 1}) > 0) return Rational{1, 1};
    return r;
}

}  // namespace cpm
