#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hh"

#include <ttm/graph.hh>
#include <ttm/graph_io.hh>
#include <ttm/named_graphs.hh>

#include <algorithm>
#include <numeric>

using namespace ttm;
using namespace ttm::testing;

namespace
{
    auto regular(const Digraph & g, int d) -> bool
    {
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) != d)
                return false;
        return true;
    }

    // girth from every start vertex by BFS
    auto girth(const Digraph & g) -> int
    {
        int best = 1 << 30;
        for (int s = 0; s < g.num_vertices(); ++s) {
            std::vector<int> dist(g.num_vertices(), -1), parent(g.num_vertices(), -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int v = queue[i];
                for (auto w : g.neighbours(v)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
                    else if (parent[v] != w)
                        best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
        return best;
    }
}

TEST_CASE("named graphs have their textbook parameters")
{
    auto p = petersen_graph();
    CHECK(p.num_vertices() == 10);
    CHECK(p.num_edges() == 15);
    CHECK(regular(p, 3));
    CHECK(girth(p) == 5);

    auto c = clebsch_graph();
    CHECK(c.num_vertices() == 16);
    CHECK(regular(c, 5));
    CHECK(girth(c) == 4);

    auto gr = grotzsch_graph();
    CHECK(gr.num_vertices() == 11);
    CHECK(gr.num_edges() == 20);
    CHECK(girth(gr) == 4);

    auto d = dodecahedron_graph();
    CHECK(d.num_vertices() == 20);
    CHECK(d.num_edges() == 30);
    CHECK(regular(d, 3));
    CHECK(girth(d) == 5);

    CHECK(complete_graph(5).num_edges() == 10);
    CHECK(path_graph(3).num_edges() == 3);
    CHECK(path_graph(3).num_vertices() == 4);
    CHECK(hypercube(4).num_edges() == 32);
    CHECK(directed_cycle(7).num_edges() == 7);
    CHECK(! directed_cycle(7).undirected());
}

TEST_CASE("every shipped name resolves")
{
    for (auto & name : shipped_graph_names()) {
        INFO(name);
        CHECK(named_graph(name).has_value());
    }
    CHECK(! named_graph("no-such-graph"));
}

TEST_CASE("edge list and graph6 round trips")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_simple(rng, uniform(rng, 1, 20), 0.4);
        auto back = parse_graph6(format_graph6(g));
        CHECK(isomorphic(g, back));
        CHECK(back.num_edges() == g.num_edges());

        auto d = random_digraph(rng, uniform(rng, 2, 6), uniform(rng, 0, 10));
        auto again = parse_edge_list(format_edge_list(d));
        CHECK(std::equal(d.edges().begin(), d.edges().end(), again.edges().begin(), again.edges().end()));
    }
    CHECK(format_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(isomorphic(parse_graph("IheA@GUAo"), petersen_graph()));
}

TEST_CASE("malformed input reports the line")
{
    CHECK_THROWS_AS(parse_edge_list("3 2 directed\n0 1\n"), ParseError);
    try {
        parse_edge_list("3 2 directed\n0 1\n1 1\n");
        FAIL("loop accepted");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS(parse_edge_list("3 1 sideways\n0 1\n"));
    CHECK_THROWS(parse_edge_list("2 1 directed\n0 5\n"));
}

TEST_CASE("fundamental circuits span the cycle space")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 1, 8), uniform(rng, 0, 12));
        auto forest = spanning_forest(g);
        auto circuits = fundamental_circuits(g, forest);
        auto comps = components(g);
        CHECK(static_cast<int>(circuits.size()) == g.num_edges() - g.num_vertices() + comps.count);
        for (auto & c : circuits)
            CHECK(is_valid_circuit(g, c));
    }
}

TEST_CASE("enumerated circuits of the Petersen graph")
{
    // 12 pentagons, 10 hexagons, no shorter circuits
    auto circuits = enumerate_circuits(petersen_graph(), 6);
    int five = 0, six = 0;
    for (auto & c : circuits) {
        five += c.length() == 5;
        six += c.length() == 6;
    }
    CHECK(five == 12);
    CHECK(six == 10);
    CHECK(circuits.size() == 22);
}

TEST_CASE("isomorphism survives relabelling and detects differences")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 9), uniform(rng, 1, 14));
        std::vector<int> perm(g.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        auto iso = isomorphism(g, h);
        REQUIRE(iso);
        for (auto & e : g.edges()) {
            int mapped = 0, original = 0;
            for (auto & f : h.edges())
                mapped += f.tail == (*iso)[e.tail] && f.head == (*iso)[e.head];
            for (auto & f : g.edges())
                original += f.tail == e.tail && f.head == e.head;
            CHECK(mapped == original);
        }
    }
    CHECK(! isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(! isomorphic(directed_cycle(3), Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("gadget constructions")
{
    auto k3 = complete_graph(3).as_directed();
    auto s = subdivide_balanced(k3, 5);
    CHECK(s.num_edges() == 15);
    CHECK(s.num_vertices() == 3 + 3 * 4);
    CHECK_THROWS(subdivide_balanced(k3, 4));

    auto p = product(directed_cycle(3), directed_cycle(4));
    CHECK(p.num_vertices() == 12);
    CHECK(p.num_edges() == 12);
    CHECK(components(p).count == 1);   // gcd(3,4) = 1

    std::vector<int> lengths{3, 5};
    auto u = circuit_union(lengths);
    CHECK(components(u).count == 2);
    CHECK(u.num_edges() == 8);

    auto induced = induced_subgraph(petersen_graph(), std::vector<int>{0, 1, 2, 3, 4});
    CHECK(induced.num_vertices() == 5);
    CHECK(component_of(disjoint_union(complete_graph(3), complete_graph(4)), 4).num_vertices() == 4);
}
