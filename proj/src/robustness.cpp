#include "cpm/robustness.hpp"

#include <stdexcept>

#include <json.hpp>

namespace cpm {

std::string move_class_name(MoveClass c) {
    switch (c) {
        case MoveClass::AlwaysPreferred: return "always-preferred";
        case MoveClass::NeverPreferred: return "never-preferred";
        case MoveClass::FrustratedGainBelow: return "frustrated-gain-below";
        case MoveClass::FrustratedGainAbove: return "frustrated-gain-above";
        case MoveClass::Neutral: return "neutral";
    }
    return "unknown";
}

MoveClassification classify_move(const MoveGain& gain) {
    long long dd = gain.delta_neighbors;
    long long dh = gain.delta_non_neighbors;
    MoveClassification out;
    if (dd == 0 && dh == 0) {
        out.kind = MoveClass::Neutral;
    } else if (dd >= 0 && dh <= 0) {
        out.kind = MoveClass::AlwaysPreferred;
    } else if (dd <= 0 && dh >= 0) {
        out.kind = MoveClass::NeverPreferred;
    } else {
        // Same signs, both nonzero: the threshold dd/(dd+dh) lands in (0,1).
        out.kind = dd > 0 ? MoveClass::FrustratedGainBelow : MoveClass::FrustratedGainAbove;
        out.has_threshold = true;
        out.threshold = make_rational(dd, dd + dh);
    }
    return out;
}

FamiliarityResult familiarity(const Graph& g, const Partition& part, int node, int target) {
    if (target == part.sigma[node]) {
        throw std::invalid_argument("familiarity of a move to the current slot");
    }
    DegreePair from = degrees_in(g, part, node, part.sigma[node]);
    DegreePair to = degrees_in(g, part, node, target);
    long long dd = to.neighbors - from.neighbors;
    long long dn = dd + (to.non_neighbors - from.non_neighbors);
    if (dn == 0) return FamiliarityResult{false, {}};
    return FamiliarityResult{true, make_rational(dd, dn)};
}

bool node_is_robust(const Graph& g, const Partition& part, int node) {
    DegreePair cur = degrees_in(g, part, node, part.sigma[node]);
    for (int s = 0; s < part.k; ++s) {
        if (s == part.sigma[node]) continue;
        DegreePair alt = degrees_in(g, part, node, s);
        if (cur.neighbors < alt.neighbors || cur.non_neighbors > alt.non_neighbors) {
            return false;
        }
    }
    return true;
}

Rational partition_robustness(const Graph& g, const Partition& part) {
    long long robust = 0;
    for (int i = 0; i < g.n; ++i) {
        if (node_is_robust(g, part, i)) ++robust;
    }
    if (g.n == 0) return Rational{1, 1};
    return make_rational(robust, g.n);
}

std::string to_string(const GammaInterval& iv) {
    if (iv.empty) return "empty";
    return to_string(iv.lo) + " .. " + to_string(iv.hi);
}

GammaInterval equilibrium_gamma_range(const Graph& g, const Partition& part) {
    Rational lo{0, 1};
    Rational hi{1, 1};
    std::vector<int> counts(part.k, 0);
    for (int i = 0; i < g.n; ++i) {
        for (int j : g.adj[i]) ++counts[part.sigma[j]];
        int cur = part.sigma[i];
        long long d_cur = counts[cur];
        long long n_cur = part.sizes[cur];
        for (int s = 0; s < part.k && rat_cmp(lo, hi) <= 0; ++s) {
            if (s == cur) continue;
            long long dd = counts[s] - d_cur;
            long long dn = part.sizes[s] - n_cur + 1;
            // Stability against this move: dd - gamma*dn <= 0.
            if (dn == 0) {
                if (dd > 0) {
                    lo = Rational{1, 1};
                    hi = Rational{0, 1};
                }
            } else if (dn > 0) {
                lo = rat_max(lo, make_rational(dd, dn));
            } else {
                hi = rat_min(hi, make_rational(dd, dn));
            }
        }
        for (int j : g.adj[i]) counts[part.sigma[j]] = 0;
        if (rat_cmp(lo, hi) > 0) break;
    }
    if (rat_cmp(lo, hi) > 0) return GammaInterval{};
    return GammaInterval{false, lo, hi};
}

bool is_fully_robust(const Graph& g, const Partition& part) {
    for (int i = 0; i < g.n; ++i) {
        if (!node_is_robust(g, part, i)) return false;
    }
    return true;
}

std::string robustness_report_json(const Graph& g, const Partition& part) {
    nlohmann::json report;
    report["n"] = g.n;
    report["k"] = part.k;
    std::vector<bool> flags(g.n);
    long long robust = 0;
    for (int i = 0; i < g.n; ++i) {
        flags[i] = node_is_robust(g, part, i);
        if (flags[i]) ++robust;
    }
    report["robust"] = flags;
    Rational fraction = g.n == 0 ? Rational{1, 1} : make_rational(robust, g.n);
    report["fraction"] = to_string(fraction);
    report["fraction_value"] = to_double(fraction);
    GammaInterval range = equilibrium_gamma_range(g, part);
    if (range.empty) {
        report["gamma_range"] = nullptr;
    } else {
        report["gamma_range"] = {{"lo", to_string(range.lo)}, {"hi", to_string(range.hi)}};
    }
    report["fully_robust"] = is_fully_robust(g, part);
    return report.dump(2);
}

}  // namespace cpm
