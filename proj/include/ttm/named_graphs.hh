#ifndef TTM_NAMED_GRAPHS_HH
#define TTM_NAMED_GRAPHS_HH 1

#include <ttm/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace ttm
{
    auto complete_graph(int n) -> Digraph;
    auto cycle_graph(int n) -> Digraph;
    /// Consistently oriented circuit 0 -> 1 -> ... -> n-1 -> 0.
    auto directed_cycle(int n) -> Digraph;
    /// Path with the given number of edges.
    auto path_graph(int edges) -> Digraph;
    auto hypercube(int n) -> Digraph;
    auto petersen_graph() -> Digraph;
    /// Folded 5-cube: Z_2^4, neighbours differ in one coordinate or in all four.
    auto clebsch_graph() -> Digraph;
    /// Mycielskian of C_5.
    auto grotzsch_graph() -> Digraph;
    /// Generalised Petersen graph GP(10, 2).
    auto dodecahedron_graph() -> Digraph;

    /// Resolves names such as "petersen", "k_5", "c_7", "dc_9", "p_3", "q_4", "dk_2".
    auto named_graph(const std::string & name) -> std::optional<Digraph>;

    /// Names of the graphs shipped under data/graphs.
    auto shipped_graph_names() -> std::vector<std::string>;
}

#endif
