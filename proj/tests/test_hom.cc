#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hh"

#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>
#include <ttm/tt.hh>

#include <set>

using namespace ttm;
using namespace ttm::testing;

namespace
{
    auto brute_homs(const Digraph & g, const Digraph & h) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_vertex_map(g.num_vertices(), h.num_vertices(), [&](const std::vector<int> & m) {
            count += is_homomorphism(VertexMap{m, {}}, g, h);
        });
        return count;
    }

    auto brute_chromatic(const Digraph & g) -> int
    {
        for (int k = 1;; ++k)
            if (brute_homs(g, complete_graph(k)) > 0)
                return k;
    }
}

TEST_CASE("hom search counts match brute force")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g, h;
        if (trial % 2) {
            g = random_digraph(rng, uniform(rng, 1, 5), uniform(rng, 0, 7));
            h = random_digraph(rng, uniform(rng, 1, 4), uniform(rng, 0, 6));
        }
        else {
            g = random_simple(rng, uniform(rng, 1, 6), 0.5);
            h = random_simple(rng, uniform(rng, 1, 5), 0.5);
        }
        std::uint64_t seen = 0;
        auto r = enumerate_homs(g, h, [&](const VertexMap & m) {
            CHECK(is_homomorphism(m, g, h));
            ++seen;
            return true;
        });
        CHECK(r.complete);
        auto expected = brute_homs(g, h);
        CHECK(seen == expected);
        auto found = find_hom(g, h);
        CHECK((found.status == SearchStatus::found) == (expected > 0));
    }
}

TEST_CASE("pins are honoured")
{
    HomOptions options;
    options.pins = {{0, 3}};
    auto r = find_hom(cycle_graph(5), complete_graph(4), options);
    REQUIRE(r.witness);
    CHECK(r.witness->assignment[0] == 3);
}

TEST_CASE("chromatic and clique numbers")
{
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(grotzsch_graph()) == 4);
    CHECK(chromatic_number(clebsch_graph()) == 4);
    CHECK(chromatic_number(complete_graph(6)) == 6);
    CHECK(clique_number(grotzsch_graph()) == 2);
    CHECK(clique_number(complete_graph(5)) == 5);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_simple(rng, uniform(rng, 1, 7), 0.5);
        CHECK(chromatic_number(g) == brute_chromatic(g));
    }
}

TEST_CASE("induced maps and their inducers")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 6));
        auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 6));
        auto r = find_hom(g, h);
        if (! r.witness)
            continue;
        auto f = induced_map(*r.witness, g, h);
        auto back = is_hom_induced(f, g, h);
        REQUIRE(back);
        CHECK(induced_map(*back, g, h) == f);
        // every reported inducer really induces f
        for (auto & m : all_inducing_maps(f, g, h)) {
            for (int e = 0; e < g.num_edges(); ++e) {
                auto & src = g.edge(e);
                auto & dst = h.edge(f.image[e]);
                if (m.is_reversed(src.tail))
                    CHECK((m.assignment[src.tail] == dst.head && m.assignment[src.head] == dst.tail));
                else
                    CHECK((m.assignment[src.tail] == dst.tail && m.assignment[src.head] == dst.head));
            }
        }
    }
}

TEST_CASE("antihomomorphisms count as inducing")
{
    auto g = directed_cycle(3);
    EdgeMap reverse{{2, 1, 0}};  // 0->1 goes to 2->0, and so on
    auto m = is_hom_induced(reverse, g, g);
    REQUIRE(m);
    CHECK(m->polarity() == Polarity::antihom);
    CHECK(is_tt(reverse, g, g, Cyclic{0}));
}

TEST_CASE("the one-factorization map of K_4 is not induced")
{
    EdgeMap f{{0, 1, 2, 2, 1, 0}};
    CHECK(! is_hom_induced(f, complete_graph(4), complete_graph(3)));
}

TEST_CASE("nice graphs")
{
    CHECK(! is_nice(complete_graph(4)).nice);
    CHECK(is_nice(complete_graph(4)).failed_condition == 3);
    for (int n = 5; n <= 8; ++n)
        CHECK(is_nice(complete_graph(n)).nice);
    CHECK(is_nice(cycle_graph(5)).failed_condition == 1);
    // two K_5 sharing only a vertex: K_4s on either side are not linked
    std::vector<Edge> es;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            es.push_back({a, b});
            es.push_back({a == 0 ? 0 : a + 4, b + 4});
        }
    auto bowtie = Digraph(9, es, true);
    auto report = is_nice(bowtie);
    CHECK(! report.nice);
    CHECK(report.failed_condition == 4);
    CHECK(report.witness.size() == 8);
}

TEST_CASE("universal checks on small targets")
{
    auto k5 = k5_target_check(complete_graph(5));
    REQUIRE(k5.holds);
    CHECK(*k5.holds);
    CHECK(k5.maps == 120);

    auto pair = homotens_pair(complete_graph(4), complete_graph(3));
    REQUIRE(pair.holds);
    CHECK(! *pair.holds);
    REQUIRE(pair.counterexample);
    CHECK(is_tt(*pair.counterexample, complete_graph(4), complete_graph(3), Cyclic{2}));

    auto nice_pair = homotens_pair(complete_graph(5), complete_graph(6));
    REQUIRE(nice_pair.holds);
    CHECK(*nice_pair.holds);
}

TEST_CASE("vertex map text")
{
    VertexMap m{{2, 0, 1}, {false, true, false}};
    auto back = parse_vertex_map(format_vertex_map(m), 3);
    CHECK(back == m);
    VertexMap plain{{1, 1}, {}};
    CHECK(parse_vertex_map(format_vertex_map(plain), 2).assignment == plain.assignment);
    CHECK_THROWS(parse_vertex_map("polarity: hom\n0 -> 1\n", 2));
}
