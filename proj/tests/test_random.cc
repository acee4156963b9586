#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/random_lab.hh>

using namespace ttm;

TEST_CASE("G(n,p) extremes and determinism")
{
    CHECK(sample_gnp(12, 0.0, 1).num_edges() == 0);
    CHECK(sample_gnp(12, 1.0, 1).num_edges() == 66);
    auto a = sample_gnp(30, 0.5, 99, 4), b = sample_gnp(30, 0.5, 99, 4), c = sample_gnp(30, 0.5, 99, 5);
    CHECK(format_graph6(a) == format_graph6(b));
    CHECK(format_graph6(a) != format_graph6(c));
    CHECK(a.undirected());
}

TEST_CASE("edge density is near p")
{
    int edges = 0;
    for (int t = 0; t < 50; ++t)
        edges += sample_gnp(40, 0.3, 7, t).num_edges();
    double density = edges / (50.0 * 780);
    CHECK(density == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("Wilson interval")
{
    auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
    CHECK(lo == doctest::Approx(0.4038).epsilon(0.001));
    auto [z0, z1] = wilson_interval(0, 20);
    CHECK(z0 == 0.0);
    CHECK(z1 > 0.1);
    auto [o0, o1] = wilson_interval(20, 20);
    CHECK(o1 == doctest::Approx(1.0));
    CHECK(o0 < 1.0);
}

TEST_CASE("nice fractions on complete graphs")
{
    Experiment e;
    e.n = 5;
    e.p = 1;
    e.trials = 10;
    CHECK(estimate_fraction(e).fraction == 1.0);
    e.n = 4;
    auto r = estimate_fraction(e);
    CHECK(r.fraction == 0.0);
    CHECK(r.failures.size() == 10);
    CHECK(r.failures.front().reason.rfind("condition 3", 0) == 0);
}

TEST_CASE("experiments are reproducible across thread counts")
{
    Experiment e;
    e.n = 14;
    e.p = 0.8;
    e.trials = 40;
    e.seed = 5;
    auto one = estimate_fraction(e);
    e.threads = 4;
    auto four = estimate_fraction(e);
    CHECK(one.hits == four.hits);
    CHECK(one.misses == four.misses);
    REQUIRE(one.failures.size() == four.failures.size());
    for (std::size_t i = 0; i < one.failures.size(); ++i)
        CHECK(one.failures[i].graph6 == four.failures[i].graph6);
    for (auto & f : one.failures)
        CHECK(! is_nice(parse_graph6(f.graph6)).nice);
}

TEST_CASE("bounded rigidity sampling")
{
    Experiment e;
    e.n = 6;
    e.p = 0.5;
    e.trials = 10;
    e.predicate = Predicate::tt_rigid_bounded;
    auto r = estimate_fraction(e);
    CHECK(r.hits + r.misses + r.unknown == 10);
    CHECK(parse_predicate("tt-rigid-bounded") == Predicate::tt_rigid_bounded);
    CHECK_THROWS(parse_predicate("pretty"));
}
