#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpm/evalmetrics.hpp"
#include "cpm/rational.hpp"

namespace cpm {

inline const char* kMethodNames[] = {"dynamics-queue", "dynamics-best", "one-pass", "mirror"};

bool is_known_method(const std::string& method);

// Community-tracking sweep. One graph and one perturbed start are sampled per
// (cell, sample) and every method runs on them; per-run seeds derive from
// (base_seed, cell index, sample index), so results are independent of the
// worker count. Cells enumerate in communities -> p -> difficulty -> eta
// order.
struct ExperimentGrid {
    std::vector<int> communities = {2};
    int nodes_per_community = 50;
    std::vector<double> intra_probabilities = {0.1};
    std::vector<double> difficulties = {0.5};
    std::vector<double> noise_levels = {0.5};
    int samples = 5;
    std::vector<std::string> methods = {"dynamics-queue", "mirror"};
    std::uint64_t base_seed = 0;
    std::optional<Resolution> gamma;  // default: edge density of each sample
};

std::vector<ExperimentRecord> run_grid(const ExperimentGrid& grid, int jobs = 1);

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

// Per-cell aggregates (mean and 1.96*stderr half-width) ready for plotting.
void write_plot_data_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

// CPMTOOL_JOBS env var, else hardware concurrency, else 1.
int default_job_count();

}  // namespace cpm
