#ifndef TTM_TESTS_UTIL_HH
#define TTM_TESTS_UTIL_HH 1

// Small generators and brute-force oracles shared by the unit tests.

#include <ttm/edge_map.hh>
#include <ttm/graph.hh>

#include <functional>
#include <random>
#include <vector>

namespace ttm::testing
{
    inline auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    inline auto random_digraph(std::mt19937_64 & rng, int vertices, int edges) -> Digraph
    {
        std::vector<Edge> es;
        for (int i = 0; vertices > 1 && i < edges; ++i) {
            int a = uniform(rng, 0, vertices - 1), b = uniform(rng, 0, vertices - 2);
            if (b >= a)
                ++b;
            es.push_back({a, b});
        }
        return Digraph(vertices, std::move(es));
    }

    /// Simple undirected graph, each pair present with probability p.
    inline auto random_simple(std::mt19937_64 & rng, int vertices, double p) -> Digraph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> es;
        for (int a = 0; a < vertices; ++a)
            for (int b = a + 1; b < vertices; ++b)
                if (coin(rng))
                    es.push_back({a, b});
        return Digraph(vertices, std::move(es), true);
    }

    inline auto random_map(std::mt19937_64 & rng, const Digraph & g, const Digraph & h) -> EdgeMap
    {
        EdgeMap f;
        for (int i = 0; i < g.num_edges(); ++i)
            f.image.push_back(uniform(rng, 0, h.num_edges() - 1));
        return f;
    }

    /// Every map E(G) -> E(H) in odometer order.
    inline auto for_each_map(const Digraph & g, const Digraph & h, const std::function<void(const EdgeMap &)> & visit) -> void
    {
        if (h.num_edges() == 0 && g.num_edges() > 0)
            return;
        EdgeMap f;
        f.image.assign(g.num_edges(), 0);
        while (true) {
            visit(f);
            int i = 0;
            for (; i < g.num_edges(); ++i) {
                if (++f.image[i] < h.num_edges())
                    break;
                f.image[i] = 0;
            }
            if (i == g.num_edges())
                return;
        }
    }

    /// Every function V(G) -> V(H).
    inline auto for_each_vertex_map(int gv, int hv, const std::function<void(const std::vector<int> &)> & visit) -> void
    {
        std::vector<int> m(gv, 0);
        if (hv == 0 && gv > 0)
            return;
        while (true) {
            visit(m);
            int i = 0;
            for (; i < gv; ++i) {
                if (++m[i] < hv)
                    break;
                m[i] = 0;
            }
            if (i == gv)
                return;
        }
    }

    inline auto relabel(const Digraph & g, const std::vector<int> & perm) -> Digraph
    {
        std::vector<Edge> es;
        for (auto & e : g.edges())
            es.push_back({perm[e.tail], perm[e.head]});
        return Digraph(g.num_vertices(), std::move(es), g.undirected());
    }
}

#endif
