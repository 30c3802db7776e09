#include <doctest.h>

#include "cpm/dynamics.hpp"
#include "cpm/robustness.hpp"
#include "fixtures.hpp"

using namespace cpm;

namespace {

std::vector<Resolution> gamma_grid() {
    std::vector<Resolution> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(make_rational(i, 10));
    return grid;
}

}  // namespace

TEST_CASE("node robustness on the two-triangle toy") {
    Graph g = fixtures::two_triangles();
    Partition split = partition_from_blocks(6, {{0, 1, 2}, {3, 4, 5}});
    for (int i = 0; i < 6; ++i) CHECK(node_is_robust(g, split, i));
    CHECK(partition_robustness(g, split) == Rational{1, 1});
    CHECK(is_fully_robust(g, split));

    Partition grand = grand_coalition(6, 2);
    CHECK_FALSE(node_is_robust(g, grand, 0));
    CHECK(partition_robustness(g, grand) == Rational{0, 1});
    CHECK_FALSE(is_fully_robust(g, grand));
}

TEST_CASE("a lone clique with K=1 is trivially robust") {
    Graph g = fixtures::complete_graph(5);
    Partition part = grand_coalition(5, 1);
    CHECK(partition_robustness(g, part) == Rational{1, 1});
    CHECK(is_fully_robust(g, part));
}

TEST_CASE("singletons of an edgeless graph are robust") {
    Graph g = graph_from_edges(6, {});
    CHECK(partition_robustness(g, singleton_partition(6)) == Rational{1, 1});
}

TEST_CASE("familiarity worked values") {
    Graph g = fixtures::star4();
    Partition grand = grand_coalition(4, 2);
    FamiliarityResult f = familiarity(g, grand, 3, 1);
    REQUIRE(f.defined);
    CHECK(f.value == make_rational(1, 3));

    // Symmetric trade-off and a clear >= 1 case, straight from deltas.
    MoveClassification symmetric = classify_move(gain_from_deltas(1, 1, Rational{0, 1}));
    CHECK(symmetric.kind == MoveClass::FrustratedGainBelow);
    CHECK(symmetric.threshold == make_rational(1, 2));
    MoveClassification clear = classify_move(gain_from_deltas(2, -1, Rational{0, 1}));
    CHECK(clear.kind == MoveClass::AlwaysPreferred);
}

TEST_CASE("familiarity undefined when the perceived size does not change") {
    Graph g = graph_from_edges(4, {{0, 1}});
    // Leaving a pair for a singleton slot keeps the perceived size fixed.
    Partition part = partition_from_blocks(4, {{0, 1}, {2}, {3}});
    CHECK_FALSE(familiarity(g, part, 0, 1).defined);
    CHECK_FALSE(familiarity(g, part, 0, 2).defined);
    // Joining the pair from a singleton grows it by two.
    FamiliarityResult f = familiarity(g, part, 2, 0);
    REQUIRE(f.defined);
    CHECK(f.value == Rational{0, 1});
}

TEST_CASE("classify_move covers the four subcases and neutral") {
    CHECK(classify_move(gain_from_deltas(2, -1, Rational{0, 1})).kind ==
          MoveClass::AlwaysPreferred);
    CHECK(classify_move(gain_from_deltas(0, 2, Rational{0, 1})).kind ==
          MoveClass::NeverPreferred);
    auto below = classify_move(gain_from_deltas(1, 1, Rational{0, 1}));
    CHECK(below.kind == MoveClass::FrustratedGainBelow);
    CHECK(below.threshold == make_rational(1, 2));
    auto above = classify_move(gain_from_deltas(-1, -2, Rational{0, 1}));
    CHECK(above.kind == MoveClass::FrustratedGainAbove);
    CHECK(above.threshold == make_rational(1, 3));
    CHECK(classify_move(gain_from_deltas(0, 0, Rational{0, 1})).kind == MoveClass::Neutral);
}

TEST_CASE("classification matches the gain sign over a gamma grid") {
    cpm::Rng rng(4242);
    auto grid = gamma_grid();
    for (int trial = 0; trial < 10000; ++trial) {
        long long dd = static_cast<long long>(rng.below(21)) - 10;
        long long dh = static_cast<long long>(rng.below(21)) - 10;
        MoveGain gain = gain_from_deltas(dd, dh, Rational{0, 1});
        MoveClassification cls = classify_move(gain);
        for (Resolution gamma : grid) {
            // gain(gamma) = dd - gamma * (dd + dh)
            Rational value = rat_sub(Rational{dd, 1}, rat_mul(gamma, Rational{dd + dh, 1}));
            int sign = rat_cmp(value, Rational{0, 1});
            switch (cls.kind) {
                case MoveClass::Neutral:
                    CHECK(sign == 0);
                    break;
                case MoveClass::AlwaysPreferred:
                    CHECK(sign >= 0);
                    break;
                case MoveClass::NeverPreferred:
                    CHECK(sign <= 0);
                    break;
                case MoveClass::FrustratedGainBelow:
                    CHECK(sign == -rat_cmp(gamma, cls.threshold));
                    break;
                case MoveClass::FrustratedGainAbove:
                    CHECK(sign == rat_cmp(gamma, cls.threshold));
                    break;
            }
        }
        // Finite familiarity outside (0,1) iff non-frustrated.
        if (dd + dh != 0) {
            Rational f = make_rational(dd, dd + dh);
            bool outside = rat_cmp(f, Rational{0, 1}) <= 0 || rat_cmp(f, Rational{1, 1}) >= 0;
            bool frustrated = cls.kind == MoveClass::FrustratedGainBelow ||
                              cls.kind == MoveClass::FrustratedGainAbove;
            CHECK(outside == !frustrated);
        }
    }
}

TEST_CASE("gamma range reproduces the 4-node table rows") {
    Graph g = fixtures::star4();

    GammaInterval grand = equilibrium_gamma_range(g, grand_coalition(4, 2));
    REQUIRE_FALSE(grand.empty);
    CHECK(grand.lo == Rational{0, 1});
    CHECK(grand.hi == make_rational(1, 3));

    GammaInterval split = equilibrium_gamma_range(g, partition_from_blocks(4, {{0, 1, 2}, {3}}));
    REQUIRE_FALSE(split.empty);
    CHECK(split.lo == make_rational(1, 3));
    CHECK(split.hi == Rational{1, 1});

    GammaInterval point =
        equilibrium_gamma_range(g, partition_from_blocks(4, {{0, 1}, {2}, {3}}));
    REQUIRE_FALSE(point.empty);
    CHECK(point.lo == Rational{1, 1});
    CHECK(point.hi == Rational{1, 1});
}

TEST_CASE("gamma range of the fig-4 toy") {
    Graph g = fixtures::two_triangles();
    GammaInterval split =
        equilibrium_gamma_range(g, partition_from_blocks(6, {{0, 1, 2}, {3, 4, 5}}));
    REQUIRE_FALSE(split.empty);
    CHECK(split.lo == Rational{0, 1});
    CHECK(split.hi == Rational{1, 1});

    GammaInterval grand = equilibrium_gamma_range(g, grand_coalition(6, 2));
    REQUIRE_FALSE(grand.empty);
    CHECK(grand.lo == Rational{0, 1});
    CHECK(grand.hi == make_rational(2, 5));
    CHECK_FALSE(is_fully_robust(g, grand_coalition(6, 2)));
}

TEST_CASE("gamma range equals the exact equilibrium set on a grid") {
    auto grid = gamma_grid();
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = fixtures::random_graph(9, 0.4, 100 + seed);
        Partition part = fixtures::random_partition(9, 2 + seed % 3, 200 + seed);
        GammaInterval range = equilibrium_gamma_range(g, part);
        for (Resolution gamma : grid) {
            bool inside = !range.empty && rat_cmp(range.lo, gamma) <= 0 &&
                          rat_cmp(gamma, range.hi) <= 0;
            CHECK(is_equilibrium(g, part, gamma) == inside);
        }
        if (!range.empty) {
            CHECK(is_equilibrium(g, part, range.lo));
            CHECK(is_equilibrium(g, part, range.hi));
            CHECK(is_equilibrium(g, part, midpoint(range.lo, range.hi)));
        }
    }
}

TEST_CASE("robustness flag equals stability at both endpoints") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = fixtures::random_graph(10, 0.45, 300 + seed);
        Partition part = fixtures::random_partition(10, 3, 400 + seed);
        for (int i = 0; i < g.n; ++i) {
            bool stable_everywhere = true;
            for (int s = 0; s < part.k && stable_everywhere; ++s) {
                if (s == part.sigma[i]) continue;
                MoveGain gain = move_gain(g, part, i, s, Rational{0, 1});
                if (gain.delta_neighbors > 0) stable_everywhere = false;          // gamma = 0
                if (-gain.delta_non_neighbors > 0) stable_everywhere = false;     // gamma = 1
            }
            CHECK(node_is_robust(g, part, i) == stable_everywhere);
        }
        CHECK(is_fully_robust(g, part) ==
              (partition_robustness(g, part) == Rational{1, 1}));
        GammaInterval range = equilibrium_gamma_range(g, part);
        bool full = !range.empty && range.lo == Rational{0, 1} && range.hi == Rational{1, 1};
        CHECK(is_fully_robust(g, part) == full);
    }
}

TEST_CASE("balanced equilibria at gamma 0 are fully robust") {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = fixtures::random_graph(12, 0.5, 500 + seed);
        // Balanced: three slots of four nodes.
        std::vector<int> sigma(12);
        for (int i = 0; i < 12; ++i) sigma[i] = i / 4;
        Partition part = partition_from_sigma(sigma, 3);
        if (!is_equilibrium(g, part, Rational{0, 1})) continue;
        ++found;
        GammaInterval range = equilibrium_gamma_range(g, part);
        REQUIRE_FALSE(range.empty);
        CHECK(range.lo == Rational{0, 1});
        CHECK(range.hi == Rational{1, 1});
    }
    // Disjoint cliques guarantee at least one balanced equilibrium case.
    Graph cliques = cpm::graph_from_edges(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    Partition truth = partition_from_blocks(6, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE(is_equilibrium(cliques, truth, Rational{0, 1}));
    GammaInterval range = equilibrium_gamma_range(cliques, truth);
    CHECK(range.lo == Rational{0, 1});
    CHECK(range.hi == Rational{1, 1});
    CHECK(found + 1 > 0);
}

TEST_CASE("robustness report is valid JSON with fraction strings") {
    Graph g = fixtures::star4();
    std::string report = robustness_report_json(g, grand_coalition(4, 2));
    CHECK(report.find("\"fraction\"") != std::string::npos);
    CHECK(report.find("\"gamma_range\"") != std::string::npos);
    CHECK(report.find("1/3") != std::string::npos);
}
