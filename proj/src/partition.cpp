#include "cpm/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cpm {

void Partition::move(int node, int target) {
    if (node < 0 || node >= n()) throw std::out_of_range("node out of range");
    if (target < 0 || target >= k) throw std::out_of_range("target slot out of range");
    int from = sigma[node];
    if (from == target) return;
    --sizes[from];
    ++sizes[target];
    sigma[node] = target;
}

Partition partition_from_sigma(std::vector<int> sigma, int k) {
    int max_label = -1;
    for (int s : sigma) {
        if (s < 0) throw std::invalid_argument("negative community index");
        max_label = std::max(max_label, s);
    }
    if (k < 0) k = max_label + 1;
    if (k < 1) k = 1;
    if (max_label >= k) throw std::invalid_argument("community index beyond slot count");
    Partition part;
    part.k = k;
    part.sizes.assign(k, 0);
    for (int s : sigma) ++part.sizes[s];
    part.sigma = std::move(sigma);
    return part;
}

Partition singleton_partition(int n) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    return partition_from_sigma(std::move(sigma), n > 0 ? n : 1);
}

Partition grand_coalition(int n, int k) {
    return partition_from_sigma(std::vector<int>(n, 0), std::max(k, 1));
}

Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks, int k) {
    std::vector<int> sigma(n, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int node : blocks[b]) {
            if (node < 0 || node >= n) throw std::invalid_argument("block node out of range");
            if (sigma[node] != -1) throw std::invalid_argument("node in two blocks");
            sigma[node] = static_cast<int>(b);
        }
    }
    for (int s : sigma) {
        if (s == -1) throw std::invalid_argument("node missing from blocks");
    }
    if (k < 0) k = static_cast<int>(blocks.size());
    return partition_from_sigma(std::move(sigma), k);
}

int occupied_slots(const Partition& part) {
    int count = 0;
    for (int s : part.sizes) {
        if (s > 0) ++count;
    }
    return count;
}

Partition load_partition(std::istream& in, int expected_n, int k) {
    std::vector<int> sigma;
    // JSON array form starts with '['; otherwise one index per line.
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        in.get();
        c = in.peek();
    }
    if (c == '[') {
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::string cleaned;
        for (char ch : all) {
            if (ch == '[' || ch == ']' || ch == ',') {
                cleaned.push_back(' ');
            } else {
                cleaned.push_back(ch);
            }
        }
        std::istringstream fields(cleaned);
        long long value;
        while (fields >> value) sigma.push_back(static_cast<int>(value));
        std::string rest;
        if (fields.clear(), fields >> rest) {
            throw std::runtime_error("partition JSON array holds a non-integer");
        }
    } else {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream fields(line);
            std::string tok, extra;
            if (!(fields >> tok)) continue;
            if (fields >> extra) {
                throw std::runtime_error("partition line " + std::to_string(line_no) +
                                         ": expected one community index");
            }
            try {
                sigma.push_back(static_cast<int>(std::stoll(tok)));
            } catch (const std::exception&) {
                throw std::runtime_error("partition line " + std::to_string(line_no) +
                                         ": malformed community index '" + tok + "'");
            }
        }
    }
    if (expected_n >= 0 && static_cast<int>(sigma.size()) != expected_n) {
        throw std::runtime_error("partition holds " + std::to_string(sigma.size()) +
                                 " entries, expected " + std::to_string(expected_n));
    }
    return partition_from_sigma(std::move(sigma), k);
}

Partition load_partition_file(const std::string& path, int expected_n, int k) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file: " + path);
    return load_partition(in, expected_n, k);
}

void save_partition(std::ostream& out, const Partition& part) {
    for (int s : part.sigma) out << s << "\n";
}

DegreePair degrees_in(const Graph& g, const Partition& part, int node, int slot) {
    if (node < 0 || node >= g.n) throw std::out_of_range("node out of range");
    if (slot < 0 || slot >= part.k) throw std::out_of_range("slot out of range");
    int d = 0;
    for (int j : g.adj[node]) {
        if (part.sigma[j] == slot) ++d;
    }
    int member = part.sigma[node] == slot ? 1 : 0;
    return DegreePair{d, part.sizes[slot] - d - member};
}

std::vector<SlotStats> community_stats(const Graph& g, const Partition& part) {
    std::vector<SlotStats> stats(part.k);
    for (int s = 0; s < part.k; ++s) stats[s].size = part.sizes[s];
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (u < v && part.sigma[u] == part.sigma[v]) ++stats[part.sigma[u]].edges;
        }
    }
    return stats;
}

}  // namespace cpm
