#include <doctest.h>

#include <random>
#include <set>

#include "blockinv/chroma.hpp"
#include "blockinv/presets.hpp"
#include "oracles.hpp"

using namespace blockinv;

TEST_CASE("q-colorability decisions") {
    CollinearityGraph g = collinearity(ottaviani15());
    CHECK_FALSE(is_q_colorable(g, 7));
    CHECK(is_q_colorable(g, 8));
    CHECK_FALSE(is_q_colorable(CollinearityGraph::complete(4), 3));
    CHECK(is_q_colorable(CollinearityGraph::complete(4), 4));
}

TEST_CASE("q-colorability is monotone and matches exhaustive search") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracles::random_graph(6, 0.5, rng);
        for (int q = 0; q <= 6; ++q) {
            bool fast = is_q_colorable(g, q);
            CHECK(fast == oracles::colorable_exhaustive(g, q));
            if (fast) CHECK(is_q_colorable(g, q + 1));
        }
    }
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(collinearity(ottaviani15())) == 8);
    CHECK(chromatic_number(collinearity(aronhold())) == 4);
    CHECK(chromatic_number(collinearity(design943())) == 10);
    CHECK(chromatic_number(CollinearityGraph(3)) == 1);
    CHECK(chromatic_number(CollinearityGraph(0)) == 0);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_graph(7, 0.4, rng);
        CHECK(chromatic_number(g) == oracles::chromatic_number_exhaustive(g));
    }
}

TEST_CASE("vertex criticality") {
    CHECK(is_vertex_critical(CollinearityGraph::complete(8), 8));

    // K8 plus an isolated vertex: deleting the isolated vertex changes nothing
    CollinearityGraph k8_iso(9);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) k8_iso.add_edge(u, v);
    CHECK(chromatic_number(k8_iso) == 8);
    CHECK_FALSE(is_vertex_critical(k8_iso, 8));

    CHECK_THROWS_AS(is_vertex_critical(k8_iso, 7), ValidationError);

    // odd cycle is critical
    CollinearityGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(is_vertex_critical(c5, 3));
}

TEST_CASE("clique detection") {
    CollinearityGraph g = collinearity(ottaviani15());
    CHECK(has_clique(g, 7));
    CHECK_FALSE(has_clique(g, 8));

    // brute force over all 8-subsets agrees
    std::vector<int> pick;
    bool found = false;
    auto rec = [&](auto&& self, int next) -> void {
        if (found) return;
        if (pick.size() == 8) {
            for (std::size_t i = 0; i < pick.size() && !found; ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    if (!g.adjacent(pick[i], pick[j])) return;
            found = true;
            return;
        }
        for (int v = next; v < 15; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    CHECK_FALSE(found);

    // the explicit 7-clique: triangle plus the top half of the cube part
    for (int u : {0, 4, 6, 1, 2, 3, 11})
        for (int v : {0, 4, 6, 1, 2, 3, 11})
            if (u != v) CHECK(g.adjacent(u, v));

    CHECK(has_clique(CollinearityGraph::complete(10), 10));
    CHECK_FALSE(has_clique(CollinearityGraph::complete(10), 11));
    CHECK(clique_lower_bound(g) >= 4);
    CHECK(chromatic_number(g) >= clique_lower_bound(g));
}

TEST_CASE("coloring enumeration counts match the chromatic polynomial") {
    CHECK(count_proper_colorings(CollinearityGraph::complete(4), 4) == 24);
    CHECK(count_proper_colorings(CollinearityGraph::complete(4), 3) == 0);

    // Petersen graph
    CollinearityGraph petersen(10, {{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {3, 4},
                                    {4, 0},
                                    {0, 5},
                                    {1, 6},
                                    {2, 7},
                                    {3, 8},
                                    {4, 9},
                                    {5, 7},
                                    {7, 9},
                                    {9, 6},
                                    {6, 8},
                                    {8, 5}});
    for (int r = 0; r <= 4; ++r) {
        ExactInt expected = oracles::chromatic_polynomial(
            10, oracles::graph_edges(petersen), r);
        CHECK(ExactInt(count_proper_colorings(petersen, r)) == expected);
    }

    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracles::random_graph(6, 0.5, rng);
        for (int r = 0; r <= 5; ++r) {
            ExactInt expected =
                oracles::chromatic_polynomial(6, oracles::graph_edges(g), r);
            CHECK(ExactInt(count_proper_colorings(g, r)) == expected);
        }
    }
}

TEST_CASE("enumeration counts do not depend on the tie-breaking rule") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = oracles::random_graph(7, 0.45, rng);
        for (int r = 2; r <= 4; ++r)
            CHECK(count_proper_colorings(g, r, TieBreak::LowestIndex) ==
                  count_proper_colorings(g, r, TieBreak::HighestIndex));
    }
}

TEST_CASE("task splitting visits every coloring exactly once") {
    std::mt19937 rng(21);
    auto g = oracles::random_graph(8, 0.4, rng);
    const int r = 3;
    std::set<std::vector<int>> everything;
    for_each_proper_coloring(g, r, [&](const std::vector<int>& c) {
        everything.insert(c);
        return true;
    });
    for (std::size_t parts : {1u, 2u, 5u, 16u, 64u}) {
        auto tasks = split_coloring_tasks(g, r, parts);
        std::set<std::vector<int>> seen;
        std::size_t visits = 0;
        for (const auto& task : tasks)
            for_each_proper_coloring(
                g, r,
                [&](const std::vector<int>& c) {
                    seen.insert(c);
                    ++visits;
                    return true;
                },
                TieBreak::LowestIndex, task);
        CHECK(seen == everything);
        CHECK(visits == everything.size());
    }
}

TEST_CASE("enumeration edge cases") {
    CHECK(count_proper_colorings(CollinearityGraph(0), 5) == 1);
    CHECK(count_proper_colorings(CollinearityGraph(0), 0) == 1);
    CHECK(count_proper_colorings(CollinearityGraph(1), 0) == 0);
    CHECK(count_proper_colorings(CollinearityGraph(1), 3) == 3);
    CHECK(count_proper_colorings(CollinearityGraph(2), 3) == 9);

    // early stop through the visitor
    CollinearityGraph g = CollinearityGraph::complete(3);
    int visits = 0;
    bool finished = for_each_proper_coloring(g, 3, [&](const std::vector<int>&) {
        ++visits;
        return visits < 2;
    });
    CHECK_FALSE(finished);
    CHECK(visits == 2);
}

TEST_CASE("analyze bundles the report") {
    auto report = analyze(collinearity(aronhold()), 4);
    CHECK(report.chi == 4);
    CHECK(report.is_vertex_critical);
    CHECK(report.max_clique_lower_bound == 4);
    REQUIRE(report.has_clique_of.has_value());
    CHECK(report.has_clique_of->second);
}
