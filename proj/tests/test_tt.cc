#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hh"

#include <ttm/cayley.hh>
#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>
#include <ttm/search.hh>
#include <ttm/tt.hh>

#include <numeric>
#include <set>

using namespace ttm;
using namespace ttm::testing;

namespace
{
    // TT straight from the definition: every tension of H over Z_n, given by a potential
    // V(H) -> Z_n, must pull back to a tension of G. Only for tiny H.
    auto tt_by_potentials(const EdgeMap & f, const Digraph & g, const Digraph & h, std::int64_t n) -> bool
    {
        bool ok = true;
        for_each_vertex_map(h.num_vertices(), static_cast<int>(n), [&](const std::vector<int> & p) {
            if (! ok)
                return;
            std::vector<std::int64_t> pulled;
            for (int e = 0; e < g.num_edges(); ++e) {
                auto & target = h.edge(f.image[e]);
                pulled.push_back(p[target.head] - p[target.tail]);
            }
            ok = is_tension(g, EdgeFunction{pulled}, Cyclic{n});
        });
        return ok;
    }
}

TEST_CASE("is_tt agrees with pulling back every potential difference")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 7));
        auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 6));
        auto f = random_map(rng, g, h);
        for (std::int64_t n : {2, 3, 4}) {
            bool expected = tt_by_potentials(f, g, h, n);
            CHECK(is_tt(f, g, h, Cyclic{n}) == expected);
            CHECK(is_tt_via_tensions(f, g, h, Cyclic{n}) == expected);
        }
    }
}

TEST_CASE("divisor sets match the membership test")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 8));
        auto h = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 8));
        auto f = random_map(rng, g, h);
        auto set = tt_divisor_set(f, g, h);
        for (std::int64_t n = 1; n <= 24; ++n)
            CHECK(set.contains(n) == is_tt(f, g, h, Cyclic{n}));
        CHECK((set == DivisorSet::all_n()) == is_tt(f, g, h, Cyclic{0}));
    }
}

TEST_CASE("constant map from a directed 9-cycle")
{
    auto c9 = directed_cycle(9), k2 = *named_graph("dk_2");
    auto f = constant_map(c9, 0);
    CHECK(tt_divisor_set(f, c9, k2) == DivisorSet::divisors_of(9));
    CHECK(tt_divisor_set(f, c9, k2).to_string() == "{1,3,9}");
}

TEST_CASE("identity, composition and induced maps")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 6));
        auto b = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 5));
        auto c = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 5));
        CHECK(is_tt(identity_map(a), a, a, Cyclic{0}));
        for (std::int64_t n : {0, 2, 3}) {
            auto r1 = find_tt(a, b, Cyclic{n}), r2 = find_tt(b, c, Cyclic{n});
            if (r1.witness && r2.witness)
                CHECK(is_tt(compose(*r1.witness, *r2.witness), a, c, Cyclic{n}));
        }
        // maps induced by homomorphisms are TT over every group
        HomOptions options;
        auto hom = find_hom(a, b, options);
        if (hom.witness) {
            auto f = induced_map(*hom.witness, a, b);
            CHECK(tt_divisor_set(f, a, b) == DivisorSet::all_n());
        }
    }
}

TEST_CASE("g invariant")
{
    CHECK(g_invariant(petersen_graph(), Cyclic{2}) == 5);
    CHECK(g_invariant(complete_graph(4), Cyclic{2}) == 3);
    CHECK(! g_invariant(hypercube(3), Cyclic{2}));
    CHECK(g_invariant(directed_cycle(5), Cyclic{0}) == 5);
    CHECK(! g_invariant(directed_cycle(5), Cyclic{5}));
    CHECK(g_invariant(directed_cycle(5), Cyclic{3}) == 5);
    CHECK(g_invariant(directed_cycle(5), parse_group("Z_2xZ_5")) == 5);
    CHECK(! g_invariant(directed_cycle(5), parse_group("Z_5^2")));

    // odd girth by circuit enumeration
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_simple(rng, uniform(rng, 3, 9), 0.35);
        std::optional<int> odd;
        for (auto & c : enumerate_circuits(g, g.num_vertices()))
            if (c.length() % 2 == 1 && (! odd || c.length() < *odd))
                odd = c.length();
        CHECK(g_invariant(g, Cyclic{2}) == odd);
    }
}

TEST_CASE("monotone invariant along TT maps")
{
    std::mt19937_64 rng(5);
    int witnesses = 0;
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 6), uniform(rng, 1, 8));
        auto h = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 6));
        for (std::int64_t n : {0, 2, 3, 4}) {
            auto r = tt_exists_via_hom(g, h, Cyclic{n});
            if (! r.witness)
                continue;
            ++witnesses;
            auto a = g_invariant(g, Cyclic{n}), b = g_invariant(h, Cyclic{n});
            CHECK((! a || (b && *a >= *b)));
        }
    }
    CHECK(witnesses > 20);
}

TEST_CASE("the two searches and brute force agree")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 6));
        auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 5));
        for (std::int64_t n : {0, 2, 3, 6}) {
            std::set<EdgeMap> brute, direct, lift;
            for_each_map(g, h, [&](const EdgeMap & f) {
                if (is_tt_via_tensions(f, g, h, Cyclic{n}))
                    brute.insert(f);
            });
            auto d = enumerate_tt_direct(g, h, Cyclic{n}, [&](const EdgeMap & f) {
                direct.insert(f);
                return true;
            });
            auto l = enumerate_tt_lift(g, h, Cyclic{n}, [&](const EdgeMap & f) {
                lift.insert(f);
                return true;
            });
            CHECK(d.complete);
            CHECK(l.complete);
            CHECK(direct == brute);
            CHECK(lift == brute);
            CHECK(l.visited == brute.size());

            auto found = find_tt(g, h, Cyclic{n});
            auto via = tt_exists_via_hom(g, h, Cyclic{n});
            CHECK((found.status == SearchStatus::found) == ! brute.empty());
            CHECK((via.status == SearchStatus::found) == ! brute.empty());
            if (via.witness)
                CHECK(brute.count(*via.witness));
        }
    }
}

TEST_CASE("undirected searches over Z_2 match brute force")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_simple(rng, uniform(rng, 2, 6), 0.5);
        auto h = random_simple(rng, uniform(rng, 2, 5), 0.6);
        if (g.num_edges() == 0 || h.num_edges() == 0 || g.num_edges() > 7)
            continue;
        std::uint64_t brute = 0;
        for_each_map(g, h, [&](const EdgeMap & f) { brute += is_tt(f, g, h, Cyclic{2}); });
        auto l = enumerate_tt_lift(g, h, Cyclic{2}, [](const EdgeMap &) { return true; });
        CHECK(l.visited == brute);
    }
}

TEST_CASE("Cayley lift of a triangle")
{
    auto lift = cayley_lift(complete_graph(3), 2);
    CHECK(lift.dimension == 2);
    CHECK(lift.classes.size() == 3);
    auto m = materialize(lift);
    CHECK(m.graph.num_vertices() == 4);
    CHECK(m.graph.num_edges() == 6);   // K_4
    CHECK(isomorphic(m.graph, complete_graph(4)));
    CHECK_THROWS(cayley_lift(complete_graph(3), 1));
}

TEST_CASE("small complete graphs under TT_2")
{
    auto k = [](int n) { return complete_graph(n); };
    CHECK(compare(k(3), k(4), Cyclic{2}).relation == Relation::equivalent);
    CHECK(compare(k(4), k(5), Cyclic{2}).relation == Relation::g_below);
    CHECK(tt_exists_via_hom(k(5), k(4), Cyclic{2}).status == SearchStatus::none);
    CHECK(find_tt(k(5), k(4), Cyclic{2}).status == SearchStatus::none);
    CHECK(compare(cycle_graph(5), petersen_graph(), Cyclic{2}).relation == Relation::equivalent);
    CHECK_THROWS(find_tt(k(3), k(4), Cyclic{3}));
}

TEST_CASE("budgets are reported, not guessed")
{
    SearchLimits tiny{5, 1};
    auto r = tt_exists_via_hom(complete_graph(6), complete_graph(5), Cyclic{2}, tiny);
    CHECK(r.status == SearchStatus::unknown);
    CHECK(! r.witness);
    auto d = find_tt(complete_graph(6), complete_graph(5), Cyclic{2}, tiny);
    CHECK(d.status == SearchStatus::unknown);
}

TEST_CASE("threads do not change the answer")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_digraph(rng, uniform(rng, 3, 6), uniform(rng, 3, 8));
        auto h = random_digraph(rng, uniform(rng, 2, 4), uniform(rng, 1, 5));
        auto one = find_tt(g, h, Cyclic{3}, SearchLimits{0, 1});
        auto four = find_tt(g, h, Cyclic{3}, SearchLimits{0, 4});
        CHECK(one.status == four.status);
        if (four.witness)
            CHECK(is_tt(*four.witness, g, h, Cyclic{3}));
    }
}

TEST_CASE("rigidity and TT sets")
{
    CHECK(is_tt_rigid(complete_graph(4), Cyclic{2}) == false);
    CHECK(is_tt_rigid(complete_graph(1), Cyclic{2}) == true);

    auto r = tt_set(directed_cycle(3), directed_cycle(2));
    REQUIRE(r.status == SearchStatus::found);
    // k edges onto the first arc leave a defect of 2k - 3
    CHECK(r.set.members_up_to(10) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("cut-TT over Z")
{
    auto k4 = complete_graph(4).as_directed(), k3 = complete_graph(3).as_directed();
    // one perfect matching per edge of K_3
    EdgeMap f{{0, 1, 2, 2, 1, 0}};
    CHECK(is_tt(f, complete_graph(4), complete_graph(3), Cyclic{2}));
    CHECK(! is_cut_tt_integers(f, k4, k3));
    CHECK(is_cut_tt_integers(identity_map(k4), k4, k4));
}
