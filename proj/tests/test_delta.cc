#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hh"

#include <ttm/cayley.hh>
#include <ttm/delta.hh>
#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>
#include <ttm/search.hh>
#include <ttm/tt.hh>

#include <algorithm>
#include <bit>

using namespace ttm;
using namespace ttm::testing;

namespace
{
    // Q_n^(2) from Hamming distances, without going through subsets of a vertex set
    auto cube_square(int n) -> Digraph
    {
        std::vector<Edge> es;
        for (unsigned a = 0; a < (1u << n); ++a)
            for (unsigned b = a + 1; b < (1u << n); ++b)
                if (std::popcount(a ^ b) == 2)
                    es.push_back({static_cast<int>(a), static_cast<int>(b)});
        return Digraph(1 << n, std::move(es), true);
    }

    // a is in the cone iff some multiset of B plus copies of n sums to it; tiny search
    auto cone_oracle(std::int64_t a, const std::vector<std::int64_t> & b, std::int64_t n) -> bool
    {
        if (a == 0)
            return true;
        if (a < 0)
            return false;
        for (auto x : b)
            if (x > 0 && cone_oracle(a - x, b, n))
                return true;
        return n > 0 && cone_oracle(a - n, b, n);
    }

    const char * base_text = R"(11 19 undirected
0 8
3 10
1 5
0 10
6 7
4 7
7 9
6 10
0 4
1 8
1 3
6 8
2 8
2 9
3 9
3 4
4 5
5 6
2 5
marks 0 4 3 9
)";
}

TEST_CASE("delta of complete graphs is the square of the cube")
{
    for (int n = 2; n <= 6; ++n) {
        INFO(n);
        CHECK(isomorphic(delta(complete_graph(n)), cube_square(n)));
    }
    CHECK(isomorphic(halved_cube_component(5), component_of(delta(complete_graph(5)), 0)));
    CHECK(halved_cube_component(4).num_vertices() == 8);
}

TEST_CASE("delta of the pentagon is two Clebsch graphs")
{
    auto d = delta(cycle_graph(5));
    CHECK(d.num_vertices() == 32);
    CHECK(components(d).count == 2);
    CHECK(isomorphic(component_of(d, 0), clebsch_graph()));
}

TEST_CASE("TT_2 maps into H are homomorphisms into delta(H)")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_simple(rng, uniform(rng, 2, 7), 0.5);
        auto h = random_simple(rng, uniform(rng, 2, 6), 0.5);
        if (g.num_edges() == 0 || h.num_edges() == 0)
            continue;
        auto lift = tt_exists_via_hom(g, h, Cyclic{2});
        auto hom = find_hom(g, delta(h));
        CHECK((lift.status == SearchStatus::found) == (hom.status == SearchStatus::found));
    }
}

TEST_CASE("chi_TT sandwich")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_simple(rng, uniform(rng, 2, 9), 0.5);
        auto r = chi_tt(g, 12);
        REQUIRE(r.value);
        int chi = chromatic_number(g);
        CHECK(*r.value <= chi);
        CHECK(chi < 2 * *r.value);
    }
    CHECK(chi_tt(cycle_graph(5), 12).value == 3);
    CHECK(chi_tt(petersen_graph(), 12).value == 3);
    CHECK(chi_tt(hypercube(3), 12).value == 2);
    CHECK(chi_tt(Digraph(3, {}, true), 12).value == 1);
}

TEST_CASE("rigid base text and validation")
{
    auto base = parse_rigid_base(base_text);
    CHECK(base.graph.num_vertices() == 11);
    CHECK(base.p == 0);
    CHECK(base.s == 9);
    CHECK_NOTHROW(validate(base));
    auto again = parse_rigid_base(format_rigid_base(base));
    CHECK(again.graph.num_edges() == base.graph.num_edges());
    CHECK(again.r == base.r);

    RigidBase triangle{complete_graph(3), 0, 1, 2, 0};
    CHECK_THROWS(validate(triangle));
    RigidBase repeated{cycle_graph(5), 0, 1, 1, 2};
    CHECK_THROWS(validate(repeated));
    CHECK_THROWS(parse_rigid_base("3 2 undirected\n0 1\n1 2\n"));
}

TEST_CASE("the shipped base is TT_2-rigid")
{
    auto base = parse_rigid_base(base_text);
    CHECK(is_tt_rigid(base.graph, Cyclic{2}) == true);
    CHECK(is_tt_rigid(cycle_graph(5), Cyclic{2}) == false);
}

TEST_CASE("functor F sizes and the forward direction")
{
    auto base = parse_rigid_base(base_text);
    int k = base.graph.num_vertices(), m = base.graph.num_edges();
    std::vector<Digraph> family{complete_graph(1), complete_graph(2), path_graph(3), cycle_graph(5)};
    for (auto & g : family) {
        auto f = functor_f(g, base);
        CHECK(f.num_vertices() == g.num_vertices() * k + 2 * g.num_edges());
        CHECK(f.num_edges() == g.num_vertices() * m + 6 * g.num_edges());
        CHECK(f.undirected());
    }
    for (auto & g : family)
        for (auto & h : family) {
            auto fg = functor_f(g, base), fh = functor_f(h, base);
            enumerate_homs(g, h, [&](const VertexMap & v) {
                CHECK(is_tt(functor_f_map(v, g, h, base), fg, fh, Cyclic{2}));
                return true;
            });
        }
}

TEST_CASE("F(K_3) has no TT_2 map to F(K_2)")
{
    auto base = parse_rigid_base(base_text);
    auto r = tt_exists_via_hom(functor_f(complete_graph(3), base), functor_f(complete_graph(2), base), Cyclic{2},
        SearchLimits{5000000, 1});
    CHECK(r.status == SearchStatus::none);
}

TEST_CASE("integer cone")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> b;
        for (int i = uniform(rng, 1, 3); i > 0; --i)
            b.push_back(uniform(rng, 1, 12));
        std::int64_t a = uniform(rng, 0, 30), n = uniform(rng, 0, 8);
        CHECK(integer_cone_member(a, b, n) == cone_oracle(a, b, n));
    }
}

TEST_CASE("circuit unions: the cone criterion against exhaustive TT sets")
{
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> cases{
        {{9}, {7}}, {{5}, {3}}, {{4}, {3}}, {{3, 3}, {2}}, {{6}, {4}}, {{5}, {2, 3}}, {{2}, {5}}};
    for (auto & [a, b] : cases) {
        std::vector<int> la(a.begin(), a.end()), lb(b.begin(), b.end());
        auto exact = tt_set(circuit_union(la), circuit_union(lb));
        REQUIRE(exact.status == SearchStatus::found);
        auto cone = tt_set_circuit_union(a, b, 12);
        if (cone.integers)
            CHECK(exact.set.all);
        else
            CHECK(cone.members == exact.set.members_up_to(12));
    }
}

TEST_CASE("prescribed TT sets from a pair of circuit unions")
{
    std::vector<std::int64_t> m{3, 2, 3};
    auto pair = prescribed_pair(m);
    CHECK(pair.p == 13);
    CHECK(pair.p_prime == 17);
    CHECK(pair.a == std::vector<std::int64_t>{13, 17});
    CHECK(pair.b == std::vector<std::int64_t>{11, 10, 15, 14});
    auto r = tt_set_circuit_union(pair.a, pair.b, 12);
    CHECK(! r.integers);
    CHECK(r.members == std::vector<std::int64_t>{1, 2, 3});

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> gen;
        for (int i = uniform(rng, 1, 3); i > 0; --i)
            gen.push_back(uniform(rng, 2, 9));
        auto q = prescribed_pair(gen);
        INFO(q.p);
        CHECK(4 * q.p_prime > 5 * q.p);
        CHECK(2 * q.p_prime < 3 * q.p);
        std::int64_t nmax = 4 * *std::max_element(gen.begin(), gen.end());
        std::vector<std::int64_t> expected;
        for (std::int64_t n = 1; n <= nmax; ++n)
            if (std::any_of(gen.begin(), gen.end(), [n](auto g) { return g % n == 0; }))
                expected.push_back(n);
        auto got = tt_set_circuit_union(q.a, q.b, nmax);
        CHECK(! got.integers);
        CHECK(got.members == expected);
    }
}
