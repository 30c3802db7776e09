#include "cpm/synthgen.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "cpm/rng.hpp"

namespace cpm {

namespace {

void validate(const SappmSpec& spec) {
    if (spec.communities < 1) throw std::invalid_argument("need at least one community");
    if (spec.nodes_per_community < 1) throw std::invalid_argument("need at least one node per community");
    if (spec.intra_probability < 0.0 || spec.intra_probability > 1.0) {
        throw std::invalid_argument("intra probability outside [0, 1]");
    }
    if (spec.difficulty < 0.0 || spec.difficulty > 1.0) {
        throw std::invalid_argument("difficulty outside [0, 1]");
    }
}

}  // namespace

std::string spec_json(const SappmSpec& spec) {
    nlohmann::json out;
    out["communities"] = spec.communities;
    out["nodes_per_community"] = spec.nodes_per_community;
    out["intra_probability"] = spec.intra_probability;
    out["difficulty"] = spec.difficulty;
    out["seed"] = spec.seed;
    return out.dump();
}

std::pair<Graph, Partition> generate(const SappmSpec& spec) {
    validate(spec);
    const int k = spec.communities;
    const int per = spec.nodes_per_community;
    const int n = k * per;
    const double p = spec.intra_probability;
    const double q = p * spec.difficulty;

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            Rng rng(derive_stream(spec.seed, static_cast<std::uint64_t>(a),
                                  static_cast<std::uint64_t>(b)));
            double prob = a == b ? p : q;
            if (a == b) {
                for (int i = a * per; i < (a + 1) * per; ++i) {
                    for (int j = i + 1; j < (a + 1) * per; ++j) {
                        if (rng.bernoulli(prob)) edges.emplace_back(i, j);
                    }
                }
            } else {
                for (int i = a * per; i < (a + 1) * per; ++i) {
                    for (int j = b * per; j < (b + 1) * per; ++j) {
                        if (rng.bernoulli(prob)) edges.emplace_back(i, j);
                    }
                }
            }
        }
    }

    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i / per;
    return {graph_from_edges(n, edges), partition_from_sigma(std::move(sigma), k)};
}

Partition perturb(const Partition& truth, const NoiseSpec& noise) {
    if (noise.eta < 0.0 || noise.eta > 1.0) throw std::invalid_argument("eta outside [0, 1]");
    const int n = truth.n();
    const int count = static_cast<int>(std::floor(noise.eta * n + 1e-9));
    if (count <= 1) return truth;  // permuting one label is the identity

    Rng rng(derive_stream(noise.seed, 0x6c6162656c706d74ull));
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int t = 0; t < count; ++t) {
        int pick = t + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - t)));
        std::swap(ids[t], ids[pick]);
    }
    std::vector<int> labels(count);
    for (int t = 0; t < count; ++t) labels[t] = truth.sigma[ids[t]];
    for (int t = count - 1; t > 0; --t) {
        int pick = static_cast<int>(rng.below(static_cast<std::uint32_t>(t + 1)));
        std::swap(labels[t], labels[pick]);
    }
    std::vector<int> sigma = truth.sigma;
    for (int t = 0; t < count; ++t) sigma[ids[t]] = labels[t];
    return partition_from_sigma(std::move(sigma), truth.k);
}

}  // namespace cpm
