#include "cpm/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cpm/dynamics.hpp"
#include "cpm/rng.hpp"

namespace cpm {

bool is_known_method(const std::string& method) {
    for (const char* name : kMethodNames) {
        if (method == name) return true;
    }
    return false;
}

namespace {

constexpr std::uint64_t kNoiseTag = 0x6e6f697365746167ull;

struct MethodResult {
    Partition partition;
    long long moves = 0;
    long long node_evaluations = 0;
    double runtime_ms = 0.0;
};

MethodResult run_method(const std::string& method, const Graph& g, const Partition& start,
                        Resolution gamma, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    MethodResult out{start, 0, 0, 0.0};
    if (method == "mirror") {
        out.partition = mirror(start);
    } else if (method == "one-pass") {
        out.partition = one_pass(g, start);
        out.node_evaluations = g.n;
        for (int i = 0; i < g.n; ++i) {
            if (out.partition.sigma[i] != start.sigma[i]) ++out.moves;
        }
    } else if (method == "dynamics-queue" || method == "dynamics-best") {
        DynamicsConfig config;
        config.selection =
            method == "dynamics-best" ? Selection::GlobalBest : Selection::QueueOrder;
        config.seed = seed;
        config.record_trajectory = false;
        auto [result, stats] = run_dynamics(g, start, gamma, config);
        out.partition = std::move(result);
        out.moves = stats.moves;
        out.node_evaluations = stats.node_evaluations;
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    auto t1 = std::chrono::steady_clock::now();
    out.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

struct Cell {
    int communities;
    double intra_probability;
    double difficulty;
    double eta;
    std::size_t index;
};

}  // namespace

std::vector<ExperimentRecord> run_grid(const ExperimentGrid& grid, int jobs) {
    if (grid.samples < 1) throw std::invalid_argument("samples must be positive");
    if (grid.methods.empty()) throw std::invalid_argument("no methods selected");
    for (const auto& method : grid.methods) {
        if (!is_known_method(method)) throw std::invalid_argument("unknown method: " + method);
    }

    std::vector<Cell> cells;
    for (int k : grid.communities) {
        for (double p : grid.intra_probabilities) {
            for (double lambda : grid.difficulties) {
                for (double eta : grid.noise_levels) {
                    cells.push_back({k, p, lambda, eta, cells.size()});
                }
            }
        }
    }

    const std::size_t methods = grid.methods.size();
    const std::size_t tasks = cells.size() * static_cast<std::size_t>(grid.samples);
    std::vector<ExperimentRecord> records(tasks * methods);

    auto run_task = [&](std::size_t task) {
        const Cell& cell = cells[task / grid.samples];
        const int sample = static_cast<int>(task % grid.samples);
        std::uint64_t seed = derive_stream(grid.base_seed, cell.index,
                                           static_cast<std::uint64_t>(sample));
        SappmSpec spec{cell.communities, grid.nodes_per_community, cell.intra_probability,
                       cell.difficulty, seed};
        auto [g, truth] = generate(spec);
        Partition start = perturb(truth, NoiseSpec{cell.eta, derive_stream(seed, kNoiseTag)});
        Resolution gamma = grid.gamma ? *grid.gamma : edge_density(g);
        for (std::size_t mi = 0; mi < methods; ++mi) {
            MethodResult result = run_method(grid.methods[mi], g, start, gamma, seed);
            records[task * methods + mi] =
                summarize(spec, cell.eta, grid.methods[mi], g, result.partition, truth,
                          result.moves, result.node_evaluations, result.runtime_ms);
        }
    };

    if (jobs < 1) jobs = 1;
    if (jobs == 1 || tasks <= 1) {
        for (std::size_t task = 0; task < tasks; ++task) run_task(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int worker_count = static_cast<int>(
            std::min<std::size_t>(tasks, static_cast<std::size_t>(jobs)));
        workers.reserve(worker_count);
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t task = next.fetch_add(1);
                    if (task >= tasks) break;
                    run_task(task);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }
    return records;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << experiment_csv_header() << "\n";
    for (const auto& rec : records) out << experiment_csv_row(rec) << "\n";
}

namespace {

struct Aggregate {
    int samples = 0;
    double ari_sum = 0, ari_sq = 0;
    double rob_sum = 0, rob_sq = 0;
    double runtime_sum = 0;
    double moves_sum = 0;
};

std::pair<double, double> mean_ci(double sum, double sq, int count) {
    double mean = sum / count;
    if (count < 2) return {mean, 0.0};
    double variance = (sq - sum * sum / count) / (count - 1);
    if (variance < 0) variance = 0;
    double half_width = 1.96 * std::sqrt(variance / count);
    return {mean, half_width};
}

std::string num(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

}  // namespace

void write_plot_data_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    // Keyed by cell + method, in first-appearance order. CI is mean +/- 1.96*stderr.
    std::vector<std::string> order;
    std::map<std::string, Aggregate> groups;
    std::map<std::string, const ExperimentRecord*> witness;
    for (const auto& rec : records) {
        std::string key = std::to_string(rec.communities) + "," +
                          std::to_string(rec.nodes_per_community) + "," +
                          num(rec.intra_probability) + "," + num(rec.difficulty) + "," +
                          num(rec.eta) + "," + rec.method;
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            witness[key] = &rec;
        }
        Aggregate& agg = it->second;
        ++agg.samples;
        agg.ari_sum += rec.ari;
        agg.ari_sq += rec.ari * rec.ari;
        agg.rob_sum += rec.robustness;
        agg.rob_sq += rec.robustness * rec.robustness;
        agg.runtime_sum += rec.runtime_ms;
        agg.moves_sum += static_cast<double>(rec.moves);
    }
    out << "K,N,p,lambda,eta,method,samples,ari_mean,ari_ci95,robustness_mean,"
           "robustness_ci95,runtime_ms_mean,moves_mean\n";
    for (const auto& key : order) {
        const Aggregate& agg = groups[key];
        auto [ari_mean, ari_ci] = mean_ci(agg.ari_sum, agg.ari_sq, agg.samples);
        auto [rob_mean, rob_ci] = mean_ci(agg.rob_sum, agg.rob_sq, agg.samples);
        out << key << "," << agg.samples << "," << num(ari_mean) << "," << num(ari_ci) << ","
            << num(rob_mean) << "," << num(rob_ci) << "," << num(agg.runtime_sum / agg.samples)
            << "," << num(agg.moves_sum / agg.samples) << "\n";
    }
}

int default_job_count() {
    if (const char* env = std::getenv("CPMTOOL_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace cpm
