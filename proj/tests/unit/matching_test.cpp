#include "disc/matching.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace disc;

namespace {

bool is_matching(const Graph& g, const IndexSet& m) {
    std::vector<bool> used(g.vertices, false);
    for (auto e : m) {
        auto [u, v] = g.edges[e];
        if (used[u] || used[v])
            return false;
        used[u] = used[v] = true;
    }
    return true;
}

bool is_cover(const Graph& g, const IndexSet& c) {
    std::vector<bool> touched(g.vertices, false);
    for (auto e : c)
        touched[g.edges[e].u] = touched[g.edges[e].v] = true;
    return std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
}

Graph triangle() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }

} // namespace

TEST_CASE("matching examples") {
    CHECK(max_matching(triangle()).size() == 1);
    Graph p4{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(max_matching(p4) == IndexSet{0, 2});
    Graph empty{3, {}};
    CHECK(max_matching(empty).empty());
    // Odd cycle with a pendant path forces a blossom contraction.
    Graph blossom{7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {2, 6}}};
    CHECK(max_matching(blossom).size() == 3);
}

TEST_CASE("edge cover examples") {
    CHECK(min_edge_cover(triangle()).size() == 2);
    Graph perfect{4, {{0, 1}, {2, 3}}};
    CHECK(min_edge_cover(perfect) == IndexSet{0, 1});
    // Unmatched vertex 2 takes its lowest-index incident edge.
    Graph star{3, {{0, 1}, {1, 2}, {0, 2}}};
    auto c = min_edge_cover(star);
    CHECK(is_cover(star, c));
    Graph isolated{3, {{0, 1}}};
    try {
        min_edge_cover(isolated);
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.witness().first == 2);
    }
}

TEST_CASE("matching and cover against exhaustive search") {
    brute::Rng rng(41);
    for (int t = 0; t < 150; ++t) {
        Graph g = brute::random_graph(rng, 10);
        auto m = max_matching(g);
        CHECK(is_matching(g, m));
        CHECK(m.size() == brute::max_matching_size(g));
        std::vector<bool> touched(g.vertices, false);
        for (const auto& e : g.edges)
            touched[e.u] = touched[e.v] = true;
        if (std::find(touched.begin(), touched.end(), false) != touched.end()) {
            CHECK_THROWS_AS(min_edge_cover(g), Infeasible);
            continue;
        }
        auto c = min_edge_cover(g);
        CHECK(is_cover(g, c));
        CHECK(c.size() + m.size() == g.vertices);
        if (g.edges.size() <= 18)
            CHECK(c.size() == brute::min_edge_cover_size(g));
    }
}

TEST_CASE("gap graph") {
    Instance1D inst;
    inst.scale = 2;
    inst.points = {2, 6};
    inst.intervals = {{0, 4}};
    auto g = build_gap_graph(inst);
    CHECK(g.vertices == 3);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == Edge{0, 1});

    inst.intervals = {{0, 8}};
    CHECK(build_gap_graph(inst).edges[0] == Edge{0, 2});

    inst.intervals = {{3, 5}};
    CHECK_THROWS_AS(build_gap_graph(inst), InputError);
    inst.intervals = {{0, 4}, {1, 3}};
    CHECK_THROWS_AS(build_gap_graph(inst), InputError);
}
