#include "doctest.h"

#include "rcl/error.hpp"
#include "rcl/graph.hpp"
#include "rcl/oracle.hpp"

using namespace rcl;

TEST_CASE("complete graph edge count") {
    CHECK(Graph::complete(10).edge_count() == 45);
    CHECK(sample_gnp(10, 1.0, Seed{1}).edge_count() == 45);
    CHECK(sample_gnp(10, 0.0, Seed{1}).edge_count() == 0);
}

TEST_CASE("sample_gnp determinism and monotone coupling") {
    Graph a = sample_gnp(40, 0.3, Seed{7});
    Graph b = sample_gnp(40, 0.3, Seed{7});
    CHECK(a.edges() == b.edges());
    // shared per-pair uniforms: p1 <= p2 implies edge containment
    Graph lo = sample_gnp(40, 0.2, Seed{7});
    Graph hi = sample_gnp(40, 0.6, Seed{7});
    CHECK(lo.is_subgraph_of(hi));
}

TEST_CASE("petersen cycles") {
    Graph p = Graph::petersen();
    CHECK(p.n() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(find_cycle_exact(p, 5).has_value());
    CHECK(find_cycle_exact(p, 6).has_value());
    CHECK_FALSE(find_cycle_exact(p, 3).has_value());
    CHECK_FALSE(find_cycle_exact(p, 4).has_value());
    CHECK_FALSE(find_cycle_exact(p, 7).has_value());  // girth-parity gap
}

TEST_CASE("external neighbourhood disjoint from its set") {
    Graph g = sample_gnp(25, 0.3, Seed{3});
    for (int t = 0; t < 20; ++t) {
        Rng rng(Seed{(uint64_t)t});
        Bitset u(25);
        for (int i = 0; i < 5; ++i) u.set(rng.below(25));
        Bitset nb = g.external_neighbourhood(u);
        CHECK_FALSE(nb.intersects(u));
    }
}

TEST_CASE("induced subgraph with index map") {
    Graph g = Graph::cycle_graph(6);
    Bitset keep = Bitset::of(6, {0, 1, 2, 4});
    std::vector<int> map;
    Graph sub = g.induced(keep, &map);
    CHECK(sub.n() == 4);
    CHECK(sub.has_edge(map[0], map[1]));
    CHECK(sub.has_edge(map[1], map[2]));
    CHECK_FALSE(sub.has_edge(map[2], map[4]));
}

TEST_CASE("edge list round trip") {
    Graph g = sample_gnp(15, 0.4, Seed{11});
    std::string text = write_edge_list(g);
    CHECK(text.substr(0, 4) == "n 15");
    Graph back = read_edge_list(text);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(read_edge_list("not a graph"), Error);
}

TEST_CASE("colouring round trip") {
    Graph g = sample_gnp(12, 0.5, Seed{2});
    EdgeColouring col(12);
    Rng rng(Seed{4});
    for (auto [u, v] : g.edges())
        col.set(u, v, rng.below(2) ? Colour::Red : Colour::Blue);
    auto [host, back] = read_colouring(write_colouring(g, col));
    CHECK(host.edges() == g.edges());
    for (auto [u, v] : g.edges()) CHECK(back.is_red(u, v) == col.is_red(u, v));
}

TEST_CASE("path and cycle validation") {
    Graph g = Graph::path_graph(5);
    Path p{{0, 1, 2, 3, 4}};
    CHECK_NOTHROW(p.validate(g));
    CHECK(p.length() == 4);
    Path bad{{0, 2, 1}};
    CHECK_THROWS_AS(bad.validate(g), Error);
    Cycle c{{0, 1, 2}};
    CHECK_THROWS_AS(c.validate(g), Error);  // no closing edge
    CHECK_NOTHROW(Cycle{{0, 1, 2}}.validate(Graph::complete(3)));
}

TEST_CASE("components") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    auto comps = g.components(Bitset::full(6));
    CHECK(comps.size() == 3);
}

TEST_CASE("bipartite sample keeps edges crossing") {
    BipartiteGraph bg = BipartiteGraph::sample(8, 6, 0.7, Seed{5});
    CHECK(bg.n() == 14);
    for (auto [u, v] : bg.g.edges()) CHECK(bg.in_v2(u) != bg.in_v2(v));
    CHECK(BipartiteGraph::complete(4, 3).g.edge_count() == 12);
}

TEST_CASE("monochromatic subgraph partitions the host") {
    Graph g = sample_gnp(14, 0.5, Seed{9});
    EdgeColouring col(14);
    Rng rng(Seed{10});
    for (auto [u, v] : g.edges())
        col.set(u, v, rng.below(2) ? Colour::Red : Colour::Blue);
    Graph r = monochromatic_subgraph(g, col, Colour::Red);
    Graph b = monochromatic_subgraph(g, col, Colour::Blue);
    CHECK(r.edge_count() + b.edge_count() == g.edge_count());
    for (auto [u, v] : r.edges()) CHECK_FALSE(b.has_edge(u, v));
}
