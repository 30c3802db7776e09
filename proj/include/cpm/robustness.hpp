#pragma once

#include <string>
#include <vector>

#include "cpm/potential.hpp"

namespace cpm {

// Sign pattern of a move's gain over gamma in [0,1]:
//   AlwaysPreferred      gain >= 0 for every gamma (and positive somewhere)
//   NeverPreferred       gain <= 0 for every gamma
//   FrustratedGainBelow  positive iff gamma < gamma_star, with gamma_star in (0,1)
//   FrustratedGainAbove  positive iff gamma > gamma_star, with gamma_star in (0,1)
//   Neutral              gain identically zero
enum class MoveClass {
    AlwaysPreferred,
    NeverPreferred,
    FrustratedGainBelow,
    FrustratedGainAbove,
    Neutral,
};

std::string move_class_name(MoveClass c);

struct MoveClassification {
    MoveClass kind = MoveClass::Neutral;
    bool has_threshold = false;
    Rational threshold;  // gamma_star, set for the frustrated kinds
};

MoveClassification classify_move(const MoveGain& gain);

// Familiarity index of a move: delta_neighbors / delta_size, defined when
// delta_size != 0. The critical resolution at which the move's gain is zero.
struct FamiliarityResult {
    bool defined = false;
    Rational value;
};

FamiliarityResult familiarity(const Graph& g, const Partition& part, int node, int target);

// A node is robust when its current slot simultaneously weakly maximizes
// neighbors and weakly minimizes non-neighbors over all K slots.
bool node_is_robust(const Graph& g, const Partition& part, int node);

// Fraction of robust nodes, exact.
Rational partition_robustness(const Graph& g, const Partition& part);

// Closed set of gamma values for which the partition is an equilibrium over
// its K slots; always a (possibly empty or degenerate) subinterval of [0,1],
// since each (node, target) constraint is a half-line in gamma.
struct GammaInterval {
    bool empty = true;
    Rational lo;
    Rational hi;
};

std::string to_string(const GammaInterval& iv);  // "0/1 .. 1/3" or "empty"

GammaInterval equilibrium_gamma_range(const Graph& g, const Partition& part);

// Equivalent to partition_robustness == 1 and to gamma range == [0,1].
bool is_fully_robust(const Graph& g, const Partition& part);

// JSON report: per-node flags, robust fraction, gamma range as fractions.
std::string robustness_report_json(const Graph& g, const Partition& part);

}  // namespace cpm
