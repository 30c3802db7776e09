// Command-line driver: synthetic network generation, equilibrium detection,
// robustness reports, metagraph export, and the community-tracking sweep.
//
// Exit codes: 0 success, 2 unreadable/unwritable file, 3 invalid fraction or
// argument value, 4 input format error; CLI11 parse failures (unknown flags,
// missing arguments) use CLI11's own nonzero codes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpm/bench.hpp"
#include "cpm/dynamics.hpp"
#include "cpm/metagraph.hpp"
#include "cpm/rng.hpp"
#include "cpm/robustness.hpp"

namespace {

constexpr int kExitFile = 2;
constexpr int kExitValue = 3;
constexpr int kExitFormat = 4;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot write file: " + path);
    return out;
}

cpm::Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open graph file: " + path);
    return cpm::load_edge_list(in);
}

cpm::Partition read_partition(const std::string& path, int expected_n, int k) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open partition file: " + path);
    return cpm::load_partition(in, expected_n, k);
}

cpm::Resolution resolve_gamma(const std::string& gamma_text, const cpm::Graph& g) {
    if (!gamma_text.empty()) return cpm::parse_resolution(gamma_text);
    return cpm::edge_density(g);
}

struct GenerateArgs {
    int communities = 2;
    int nodes_per_community = 10;
    double p = 0.1;
    double lambda = 0.5;
    double eta = -1.0;
    std::uint64_t seed = 0;
    std::string out;
    std::string truth_out;
    std::string start_out;
};

int cmd_generate(const GenerateArgs& args) {
    cpm::SappmSpec spec{args.communities, args.nodes_per_community, args.p, args.lambda,
                        args.seed};
    auto [graph, truth] = cpm::generate(spec);
    {
        auto out = open_output(args.out);
        cpm::save_edge_list(out, graph);
    }
    if (!args.truth_out.empty()) {
        auto out = open_output(args.truth_out);
        cpm::save_partition(out, truth);
    }
    if (args.eta >= 0.0 && !args.start_out.empty()) {
        cpm::Partition start =
            cpm::perturb(truth, cpm::NoiseSpec{args.eta, cpm::derive_stream(args.seed, 1)});
        auto out = open_output(args.start_out);
        cpm::save_partition(out, start);
    }
    std::cout << cpm::spec_json(spec) << "\n";
    std::cout << "n " << graph.n << "\nm " << graph.m << "\n";
    return 0;
}

struct DetectArgs {
    std::string graph;
    std::string partition;
    std::string truth;
    std::string gamma;
    std::string method = "dynamics-queue";
    std::string node_rule = "best";
    std::string selection;
    std::string out;
    std::string trajectory;
    int k = -1;
    std::uint64_t seed = 0;
    bool shuffle_queue = false;
    bool no_empty_target = false;
};

int cmd_detect(const DetectArgs& args) {
    cpm::Graph graph = read_graph(args.graph);
    cpm::Partition start = read_partition(args.partition, graph.n, args.k);
    cpm::Resolution gamma = resolve_gamma(args.gamma, graph);

    cpm::Partition result = start;
    long long moves = 0;
    long long evals = 0;
    std::vector<cpm::MoveRecord> trajectory;
    auto t0 = std::chrono::steady_clock::now();
    if (args.method == "mirror") {
        result = cpm::mirror(start);
    } else if (args.method == "one-pass") {
        result = cpm::one_pass(graph, start);
        evals = graph.n;
        for (int i = 0; i < graph.n; ++i) {
            if (result.sigma[i] != start.sigma[i]) ++moves;
        }
    } else if (args.method == "dynamics-queue" || args.method == "dynamics-best") {
        cpm::DynamicsConfig config;
        config.selection = args.method == "dynamics-best" ? cpm::Selection::GlobalBest
                                                          : cpm::Selection::QueueOrder;
        if (!args.selection.empty()) {
            config.selection = args.selection == "global-best" ? cpm::Selection::GlobalBest
                                                               : cpm::Selection::QueueOrder;
        }
        config.node_rule =
            args.node_rule == "better" ? cpm::NodeRule::Better : cpm::NodeRule::Best;
        config.queue_init =
            args.shuffle_queue ? cpm::QueueInit::SeededShuffle : cpm::QueueInit::IdOrder;
        config.allow_empty_target = !args.no_empty_target;
        config.seed = args.seed;
        config.record_trajectory = true;
        auto [partition, stats] = cpm::run_dynamics(graph, start, gamma, config);
        result = std::move(partition);
        moves = stats.moves;
        evals = stats.node_evaluations;
        trajectory = std::move(stats.trajectory);
    } else {
        throw std::invalid_argument("unknown method: " + args.method);
    }
    auto t1 = std::chrono::steady_clock::now();
    double runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!args.out.empty()) {
        auto out = open_output(args.out);
        cpm::save_partition(out, result);
    }
    if (!args.trajectory.empty()) {
        auto out = open_output(args.trajectory);
        out << "step,node,from,to,gain_num,gain_den\n";
        for (std::size_t step = 0; step < trajectory.size(); ++step) {
            const auto& mv = trajectory[step];
            cpm::Rational gain = cpm::make_rational(mv.gain_units, gamma.den);
            out << step << "," << mv.node << "," << mv.from << "," << mv.to << "," << gain.num
                << "," << gain.den << "\n";
        }
    }

    cpm::ScaledValue potential = cpm::partition_potential(graph, result, gamma);
    std::cout << "method " << args.method << "\n";
    std::cout << "gamma " << cpm::to_string(gamma) << "\n";
    std::cout << "moves " << moves << "\n";
    std::cout << "node_evaluations " << evals << "\n";
    std::cout << "final_potential " << cpm::to_string(potential) << " "
              << cpm::to_double(potential) << "\n";
    cpm::Rational robustness = cpm::partition_robustness(graph, result);
    std::cout << "robustness " << cpm::to_string(robustness) << " "
              << cpm::to_double(robustness) << "\n";
    if (!args.truth.empty()) {
        cpm::Partition truth = read_partition(args.truth, graph.n, -1);
        std::cout << "ari " << cpm::ari(result, truth) << "\n";
    }
    std::cout << "runtime_ms " << runtime_ms << "\n";
    return 0;
}

int cmd_robustness(const std::string& graph_path, const std::string& partition_path, int k,
                   const std::string& out_path) {
    cpm::Graph graph = read_graph(graph_path);
    cpm::Partition part = read_partition(partition_path, graph.n, k);
    std::string report = cpm::robustness_report_json(graph, part);
    if (out_path.empty()) {
        std::cout << report << "\n";
    } else {
        open_output(out_path) << report << "\n";
    }
    return 0;
}

int cmd_gamma_range(const std::string& graph_path, const std::string& partition_path, int k) {
    cpm::Graph graph = read_graph(graph_path);
    cpm::Partition part = read_partition(partition_path, graph.n, k);
    std::cout << cpm::to_string(cpm::equilibrium_gamma_range(graph, part)) << "\n";
    return 0;
}

int cmd_metagraph(const std::string& graph_path, const std::string& json_path,
                  const std::string& dot_path, const std::string& gamma_text) {
    cpm::Graph graph = read_graph(graph_path);
    cpm::MetaGraph meta = cpm::build_metagraph(graph);
    std::string json = gamma_text.empty()
                           ? cpm::metagraph_json(meta)
                           : cpm::metagraph_json(meta, cpm::parse_resolution(gamma_text));
    if (!dot_path.empty()) open_output(dot_path) << cpm::metagraph_dot(meta);
    if (!json_path.empty()) {
        open_output(json_path) << json << "\n";
    } else {
        std::cout << json << "\n";
    }
    return 0;
}

int cmd_ari(const std::string& a_path, const std::string& b_path) {
    cpm::Partition a = read_partition(a_path, -1, -1);
    cpm::Partition b = read_partition(b_path, -1, -1);
    std::cout << cpm::ari(a, b) << "\n";
    return 0;
}

struct TrackArgs {
    std::vector<int> communities = {2, 4};
    int nodes_per_community = 50;
    std::vector<double> p_values = {0.05, 0.1};
    std::vector<double> lambda_values = {0.1, 0.3, 0.5};
    std::vector<double> eta_values = {0.0, 0.5, 1.0};
    int samples = 5;
    std::vector<std::string> methods = {"dynamics-queue", "dynamics-best", "one-pass", "mirror"};
    std::string gamma;
    std::uint64_t seed = 0;
    std::string out;
    std::string plot_data;
    int jobs = 0;
    bool full_grid = false;
};

int cmd_track(TrackArgs args) {
    cpm::ExperimentGrid grid;
    if (args.full_grid) {
        // Paper-scale sweep: n = 1020 nodes split across K communities,
        // 100 samples per cell. Hours of compute; opt-in only.
        grid.communities = {2, 3, 4, 5, 6};
        grid.intra_probabilities = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10};
        grid.difficulties = {0.1, 0.2, 0.3, 0.4, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75};
        grid.noise_levels = {0.1, 0.25, 0.5, 0.75, 1.0};
        grid.samples = 100;
        grid.nodes_per_community = -1;  // derived per K below
    } else {
        grid.communities = args.communities;
        grid.intra_probabilities = args.p_values;
        grid.difficulties = args.lambda_values;
        grid.noise_levels = args.eta_values;
        grid.samples = args.samples;
        grid.nodes_per_community = args.nodes_per_community;
    }
    grid.methods = args.methods;
    grid.base_seed = args.seed;
    if (!args.gamma.empty()) grid.gamma = cpm::parse_resolution(args.gamma);

    std::vector<cpm::ExperimentRecord> records;
    if (args.full_grid) {
        // Equal-size communities with n fixed at 1020 requires a per-K node
        // count, so the full grid runs one sub-grid per K.
        for (int k : grid.communities) {
            cpm::ExperimentGrid sub = grid;
            sub.communities = {k};
            sub.nodes_per_community = 1020 / k;
            auto part = cpm::run_grid(sub, args.jobs > 0 ? args.jobs : cpm::default_job_count());
            records.insert(records.end(), part.begin(), part.end());
        }
    } else {
        records =
            cpm::run_grid(grid, args.jobs > 0 ? args.jobs : cpm::default_job_count());
    }

    if (args.out.empty()) {
        cpm::write_records_csv(std::cout, records);
    } else {
        auto out = open_output(args.out);
        cpm::write_records_csv(out, records);
    }
    if (!args.plot_data.empty()) {
        auto out = open_output(args.plot_data);
        cpm::write_plot_data_csv(out, records);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant Potts Model as a hedonic game: dynamics, robustness, benchmarks"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Sample a planted-partition graph");
    generate->add_option("--k", gen.communities, "Number of communities")->required();
    generate->add_option("--n-per-community", gen.nodes_per_community, "Nodes per community")
        ->required();
    generate->add_option("--p", gen.p, "Intra-community edge probability")->required();
    generate->add_option("--lambda", gen.lambda, "Difficulty q/p in [0,1]")->required();
    generate->add_option("--eta", gen.eta, "Also emit a perturbed start partition");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--out", gen.out, "Edge list output path")->required();
    generate->add_option("--truth-out", gen.truth_out, "Ground-truth partition output path");
    generate->add_option("--start-out", gen.start_out, "Perturbed partition output path");

    DetectArgs det;
    auto* detect = app.add_subcommand("detect", "Run a detection method from a partition");
    detect->add_option("--graph", det.graph, "Edge list path")->required();
    detect->add_option("--partition", det.partition, "Initial partition path")->required();
    detect->add_option("--truth", det.truth, "Reference partition for ARI");
    detect->add_option("--gamma", det.gamma, "Resolution (default: edge density)");
    detect->add_option("--method", det.method,
                       "dynamics-queue | dynamics-best | one-pass | mirror");
    detect->add_option("--node-rule", det.node_rule, "best | better")
        ->check(CLI::IsMember({"best", "better"}));
    detect->add_option("--selection", det.selection, "queue | global-best")
        ->check(CLI::IsMember({"queue", "global-best"}));
    detect->add_option("--k", det.k, "Slot count override");
    detect->add_option("--seed", det.seed, "RNG seed (queue shuffle)");
    detect->add_flag("--shuffle-queue", det.shuffle_queue, "Seeded-shuffle queue order");
    detect->add_flag("--no-empty-target", det.no_empty_target, "Forbid moves to empty slots");
    detect->add_option("--out", det.out, "Final partition output path");
    detect->add_option("--trajectory", det.trajectory, "Move trajectory CSV output path");

    std::string rob_graph, rob_partition, rob_out;
    int rob_k = -1;
    auto* robustness = app.add_subcommand("robustness", "Per-node robustness report (JSON)");
    robustness->add_option("--graph", rob_graph, "Edge list path")->required();
    robustness->add_option("--partition", rob_partition, "Partition path")->required();
    robustness->add_option("--k", rob_k, "Slot count override");
    robustness->add_option("--out", rob_out, "Report output path (default stdout)");

    std::string gr_graph, gr_partition;
    int gr_k = -1;
    auto* gamma_range =
        app.add_subcommand("gamma-range", "Exact equilibrium resolution range");
    gamma_range->add_option("--graph", gr_graph, "Edge list path")->required();
    gamma_range->add_option("--partition", gr_partition, "Partition path")->required();
    gamma_range->add_option("--k", gr_k, "Slot count override");

    std::string mg_graph, mg_json, mg_dot, mg_gamma;
    auto* metagraph = app.add_subcommand("metagraph", "Partition-space export (n <= 10)");
    metagraph->add_option("--graph", mg_graph, "Edge list path")->required();
    metagraph->add_option("--json", mg_json, "JSON output path (default stdout)");
    metagraph->add_option("--dot", mg_dot, "DOT output path");
    metagraph->add_option("--gamma", mg_gamma, "Also list the sinks at this resolution");

    std::string ari_a, ari_b;
    auto* ari_cmd = app.add_subcommand("ari", "Score two partition files");
    ari_cmd->add_option("--a", ari_a, "First partition")->required();
    ari_cmd->add_option("--b", ari_b, "Second partition")->required();

    TrackArgs trk;
    auto* track = app.add_subcommand("track", "Community-tracking experiment sweep");
    track->add_option("--k", trk.communities, "Community counts");
    track->add_option("--n-per-community", trk.nodes_per_community, "Nodes per community");
    track->add_option("--p", trk.p_values, "Intra-community probabilities");
    track->add_option("--lambda", trk.lambda_values, "Difficulty values");
    track->add_option("--eta", trk.eta_values, "Noise levels");
    track->add_option("--samples", trk.samples, "Samples per cell");
    track->add_option("--method", trk.methods, "Methods to run");
    track->add_option("--gamma", trk.gamma, "Fixed resolution (default: edge density)");
    track->add_option("--seed", trk.seed, "Base seed");
    track->add_option("--out", trk.out, "Records CSV path (default stdout)");
    track->add_option("--emit-plot-data", trk.plot_data, "Aggregated per-cell CSV path");
    track->add_option("--jobs", trk.jobs, "Worker count (default: CPMTOOL_JOBS or cores)");
    track->add_flag("--full-grid", trk.full_grid, "Paper-scale grid (n=1020, 100 samples)");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) return cmd_generate(gen);
        if (detect->parsed()) return cmd_detect(det);
        if (robustness->parsed()) return cmd_robustness(rob_graph, rob_partition, rob_k, rob_out);
        if (gamma_range->parsed()) return cmd_gamma_range(gr_graph, gr_partition, gr_k);
        if (metagraph->parsed()) return cmd_metagraph(mg_graph, mg_json, mg_dot, mg_gamma);
        if (ari_cmd->parsed()) return cmd_ari(ari_a, ari_b);
        if (track->parsed()) return cmd_track(trk);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValue;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return 0;
}
