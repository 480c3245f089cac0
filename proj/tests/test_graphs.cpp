#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <homtrop/graphs.hpp>

using namespace homtrop;
using namespace homtrop::graphs;
using test_oracles::brute_force_hom;

namespace {

    Graph complete(int m) { return make_named(Family::Complete, {m}); }
    Graph cycle(int k) { return make_named(Family::Cycle, {k}); }
    Graph path(int k) { return make_named(Family::Path, {k}); }
    Graph star(int k) { return make_named(Family::Star, {k}); }

}

TEST_CASE("hom_count basics")
{
    CHECK(hom_count(cycle(4), complete(2)) == 2);
    CHECK(hom_count(complete(1), complete(5)) == 5);
    CHECK(hom_count(complete(1), path(3)) == 4);
    CHECK(brute_force_hom(path(2), complete(3)) == 12);
    CHECK(hom_count(path(2), complete(3)) == 12);
    CHECK_THROWS_AS(hom_count(complete(13), complete(3)), ResourceLimitError);
}

TEST_CASE("hom_count agrees with brute force on assorted pairs")
{
    std::vector<Graph> patterns;
    patterns.push_back(path(3));
    patterns.push_back(cycle(3));
    patterns.push_back(cycle(4));
    patterns.push_back(star(3));
    patterns.push_back(complete(3));
    std::vector<Graph> targets;
    targets.push_back(complete(4));
    targets.push_back(path(4));
    targets.push_back(star(4));
    targets.push_back(disjoint_union(complete(2), complete(3)));
    targets.push_back(make_named(Family::Turan, {6, 3}));
    for (const auto & p : patterns)
        for (const auto & t : targets)
            CHECK(hom_count(p, t) == brute_force_hom(p, t));
}

TEST_CASE("path_hom_vector")
{
    auto edge_counts = path_hom_vector(complete(2), 6).counts;
    for (int k = 0; k <= 6; ++k)
        CHECK(edge_counts[k] == 2);

    auto k3 = path_hom_vector(complete(3), 4).counts;
    CHECK(k3 == std::vector<BigInt>{3, 6, 12, 24, 48});

    Graph isolated(3, {});
    auto iso = path_hom_vector(isolated, 3).counts;
    CHECK(iso == std::vector<BigInt>{3, 0, 0, 0});
}

TEST_CASE("path_hom_vector agrees with hom_count on small corpus")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : all_graphs(n)) {
            auto vec = path_hom_vector(g, 8).counts;
            for (int k = 1; k <= 8; ++k)
                CHECK(vec[k] == hom_count(path(k), g));
            CHECK(vec[0] == g.vertex_count());
            if (g.edge_count() > 0)
                for (int k = 2; k <= 8; ++k)
                    CHECK(vec[k] >= vec[k - 1]);
        }
}

TEST_CASE("cycle_hom")
{
    CHECK(cycle_hom(complete(2), 4) == 2);
    CHECK(cycle_hom(complete(2), 3) == 0);
    CHECK(cycle_hom(complete(3), 4) == 18); // trace of (J-I)^4: 2^4 + 1 + 1
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : all_graphs(n))
            for (int k = 3; k <= 6; ++k)
                CHECK(cycle_hom(g, k) == brute_force_hom(cycle(k), g));
}

TEST_CASE("star_hom")
{
    CHECK(star_hom(star(5), 2) == 25 + 5);
    CHECK(star_hom(complete(3), 0) == 3);
    CHECK(star_hom(complete(3), 1) == 6);
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : all_graphs(n))
            for (int k = 0; k <= 4; ++k)
                CHECK(star_hom(g, k) == brute_force_hom(star(k), g));
}

TEST_CASE("clique_hom")
{
    CHECK(clique_hom(complete(3), 3) == 6);
    Graph t = make_named(Family::Turan, {6, 3});
    CHECK(clique_hom(t, 2) == 2 * t.edge_count());
    CHECK(clique_hom(t, 4) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : all_graphs(n))
            for (int p = 1; p <= 4; ++p)
                CHECK(clique_hom(g, p) == brute_force_hom(complete(p), g));
}

TEST_CASE("tensor product and disjoint union")
{
    Graph k2k2 = tensor_product(complete(2), complete(2));
    CHECK(k2k2.vertex_count() == 4);
    CHECK(k2k2.edge_count() == 2);
    for (int v = 0; v < 4; ++v)
        CHECK(k2k2.degree(v) == 1);

    Graph edgeless = tensor_product(path(3), complete(1));
    CHECK(edgeless.vertex_count() == 4);
    CHECK(edgeless.edge_count() == 0);

    CHECK(hom_count(path(2), tensor_product(complete(3), complete(3))) == 144);

    Graph u = disjoint_union(complete(2), complete(3));
    CHECK(hom_count(path(2), u) == 14);
    CHECK(hom_count(path(0), u) == 5);
    Graph empty(0, {});
    CHECK(hom_count(path(3), disjoint_union(u, empty)) == hom_count(path(3), u));
}

TEST_CASE("hom multiplicativity and additivity for connected patterns")
{
    std::vector<Graph> patterns = {path(1), path(2), path(3), cycle(3), cycle(4), star(2), complete(3)};
    std::vector<Graph> gs = {complete(2), complete(3), path(2), cycle(4), star(3)};
    for (const auto & h : patterns)
        for (const auto & g1 : gs)
            for (const auto & g2 : gs) {
                CHECK(hom_count(h, tensor_product(g1, g2)) == hom_count(h, g1) * hom_count(h, g2));
                CHECK(hom_count(h, disjoint_union(g1, g2)) == hom_count(h, g1) + hom_count(h, g2));
            }
}

TEST_CASE("make_named")
{
    CHECK(complete(3).edge_count() == 3);
    Graph t = make_named("turan:6,3");
    CHECK(t.edge_count() == 12);
    CHECK(make_named("path:4").vertex_count() == 5);
    CHECK_THROWS(make_named(Family::Cycle, {2}));
    CHECK_THROWS(make_named("nonsense:1"));
}

TEST_CASE("graph text format")
{
    Graph g = parse_graph_text("4\n0 1\n# comment\n1 2\n\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    Graph round = parse_graph_text(graph_to_text(g));
    CHECK(round.edges() == g.edges());
    CHECK_THROWS(parse_graph_text("3\n1 1\n"));
    CHECK_THROWS(parse_graph_text("3\n0 1\n0 1\n"));
    CHECK_THROWS(parse_graph_text("2\n1 0\n"));
}

TEST_CASE("graph corpus sizes")
{
    CHECK(all_graphs(1).size() == 1);
    CHECK(all_graphs(2).size() == 2);
    CHECK(all_graphs(3).size() == 4);
    CHECK(all_graphs(4).size() == 11);
    CHECK(all_graphs(5).size() == 34);
    CHECK(all_graphs(6).size() == 156);
    CHECK_THROWS_AS(all_graphs(7), ResourceLimitError);
}

TEST_CASE("graph invariants rejected")
{
    CHECK_THROWS(Graph(2, {{0, 0}}));
    CHECK_THROWS(Graph(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(2, {{0, 2}}));
}
