#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hh"

#include <ttm/abelian.hh>
#include <ttm/named_graphs.hh>
#include <ttm/tension.hh>

#include <limits>

using namespace ttm;
using namespace ttm::testing;

TEST_CASE("groups reduce to the cyclic group of their exponent")
{
    CHECK(reduce(parse_group("Z")).modulus == 0);
    CHECK(reduce(parse_group("ZxZ_4")).modulus == 0);
    CHECK(reduce(parse_group("Z_2xZ_3")).modulus == 6);
    CHECK(reduce(parse_group("Z_4xZ_2")).modulus == 4);
    CHECK(reduce(parse_group("Z_2^3")).modulus == 2);
    CHECK(reduce(parse_group("Z_6xZ_4xZ_9")).modulus == 36);
    CHECK(reduce(parse_group("Z_1")).modulus == 1);
    CHECK(reduce(GroupSpec{}).modulus == 1);

    CHECK(exponent(parse_group("Z_4xZ_6")).value == 12);
    CHECK(exponent(parse_group("Z^2")).infinite);
    CHECK(lcm(Exponent{false, 4}, Exponent{true, 1}).infinite);
}

TEST_CASE("group text round trips and rejects junk")
{
    for (auto text : {"Z", "Z^3", "Z_2", "ZxZ_4^2xZ_2", "Z_3xZ_5"})
        CHECK(parse_group(format_group(parse_group(text))) == parse_group(text));
    for (auto bad : {"", "Q", "Z_", "Z_0", "Z_2x", "Z_2^0", "Z_2 Z_3"})
        CHECK_THROWS(parse_group(bad));
}

TEST_CASE("divisors")
{
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(9) == std::vector<std::int64_t>{1, 3, 9});
}

TEST_CASE("cyclic arithmetic")
{
    Cyclic z5{5};
    CHECK(z5.normalise(-1) == 4);
    CHECK(z5.norm(4) == 1);
    CHECK(z5.norm(2) == 2);
    CHECK(Cyclic{0}.norm(-7) == 7);
    CHECK_THROWS(checked_add(std::numeric_limits<std::int64_t>::max(), 1));
    CHECK_THROWS(checked_mul(std::numeric_limits<std::int64_t>::max(), 2));
}

TEST_CASE("potential differences are tensions and basis circulations are flows")
{
    std::mt19937_64 rng(5);
    for (std::int64_t n : {0, 2, 3, 7}) {
        Cyclic group{n};
        for (int trial = 0; trial < 30; ++trial) {
            auto g = random_digraph(rng, uniform(rng, 2, 7), uniform(rng, 1, 12));
            std::vector<std::int64_t> p(g.num_vertices());
            for (auto & x : p)
                x = uniform(rng, -20, 20);
            auto tau = potential_tension(g, p, group);
            CHECK(is_tension(g, tau, group));
            auto back = integrate_tension(g, tau, group);
            REQUIRE(back);
            CHECK(potential_tension(g, *back, group) == tau);

            for (auto & phi : flow_basis(g)) {
                CHECK(is_flow(g, phi, group));
                // a flow and a tension are orthogonal
                std::int64_t dot = 0;
                for (int e = 0; e < g.num_edges(); ++e)
                    dot += phi.values[e] * tau.values[e];
                CHECK(group.is_zero(dot));
            }
        }
    }
}

TEST_CASE("elementary tensions")
{
    auto g = directed_cycle(4);
    std::vector<bool> side{true, true, false, false};
    auto tau = elementary_tension(g, side, 1);
    CHECK(tau.values == std::vector<std::int64_t>{0, 1, 0, -1});
    CHECK(is_tension(g, tau, Cyclic{0}));
    // a lone non-zero value on a circuit is never a tension
    CHECK(! is_tension(g, EdgeFunction{{1, 0, 0, 0}}, Cyclic{0}));
    CHECK(is_tension(g, EdgeFunction{{1, 1, 1, 1}}, Cyclic{4}));
    CHECK(! is_tension(g, EdgeFunction{{1, 1, 1, 1}}, Cyclic{3}));
}

TEST_CASE("undirected graphs only over orientation-free groups")
{
    auto k3 = complete_graph(3);
    CHECK_NOTHROW(require_orientation_free(k3, Cyclic{2}));
    CHECK_NOTHROW(require_orientation_free(k3, Cyclic{1}));
    CHECK_THROWS(require_orientation_free(k3, Cyclic{3}));
    CHECK_THROWS(require_orientation_free(k3, Cyclic{0}));
    CHECK_NOTHROW(require_orientation_free(k3.as_directed(), Cyclic{3}));
}

TEST_CASE("edge function text")
{
    EdgeFunction f{{3, -1, 0}};
    CHECK(parse_edge_function(format_edge_function(f), 3) == f);
    CHECK_THROWS(parse_edge_function("0 1\n", 2));
}
