#ifndef TTM_GRAPH_HH
#define TTM_GRAPH_HH 1

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ttm
{
    struct Edge
    {
        int tail;
        int head;

        auto other(int v) const -> int { return v == tail ? head : tail; }
        auto operator==(const Edge &) const -> bool = default;
    };

    /// Finite loopless multigraph on vertices 0..n-1 with edges 0..m-1.
    ///
    /// Undirected graphs are stored with a canonical orientation (tail < head)
    /// and the undirected flag set. Instances are immutable once built.
    class Digraph
    {
    public:
        Digraph() = default;
        Digraph(int vertices, std::vector<Edge> edges, bool undirected = false, std::string name = {});

        auto num_vertices() const -> int { return _vertices; }
        auto num_edges() const -> int { return static_cast<int>(_edges.size()); }
        auto edge(int id) const -> const Edge & { return _edges[id]; }
        auto edges() const -> std::span<const Edge> { return _edges; }
        auto undirected() const -> bool { return _undirected; }
        auto name() const -> const std::string & { return _name; }

        /// Edge ids touching v, in increasing id order.
        auto incident(int v) const -> std::span<const int>;
        auto degree(int v) const -> int { return static_cast<int>(incident(v).size()); }

        /// Distinct neighbours of v in the underlying undirected graph, sorted.
        auto neighbours(int v) const -> std::span<const int>;
        auto adjacent(int u, int v) const -> bool;

        auto with_name(std::string name) const -> Digraph;
        auto as_directed() const -> Digraph;

    private:
        int _vertices = 0;
        std::vector<Edge> _edges;
        bool _undirected = false;
        std::string _name;
        std::vector<int> _incidence_start, _incidence;
        std::vector<int> _neighbour_start, _neighbour;
    };

    struct Components
    {
        int count = 0;
        std::vector<int> of; // component index per vertex
    };

    auto components(const Digraph & g) -> Components;

    struct CircuitEdge
    {
        int edge;
        int sign; // +1 when traversed tail -> head
    };

    /// A circuit as a cyclic edge sequence; vertices[i] is the vertex where edges[i] starts.
    struct Circuit
    {
        std::vector<CircuitEdge> edges;
        std::vector<int> vertices;

        auto length() const -> int { return static_cast<int>(edges.size()); }
        auto positive_edges() const -> std::vector<int>;
        auto negative_edges() const -> std::vector<int>;
        /// |C+| - |C-|
        auto imbalance() const -> int;
    };

    auto is_valid_circuit(const Digraph & g, const Circuit & c) -> bool;

    struct Cut
    {
        std::vector<bool> side;

        /// Edges of [X, X̄] with +1 for X -> outside and -1 for outside -> X.
        auto edges(const Digraph & g) const -> std::vector<CircuitEdge>;
    };

    struct SpanningForest
    {
        std::vector<int> tree_edges;
        std::vector<int> parent_edge; // -1 at roots
        std::vector<int> parent;      // -1 at roots
        std::vector<int> root;
        std::vector<int> depth;
        std::vector<int> order; // BFS order, roots first within their component
    };

    auto spanning_forest(const Digraph & g) -> SpanningForest;

    /// One circuit per non-tree edge: the edge followed by the tree path back.
    auto fundamental_circuits(const Digraph & g, const SpanningForest & f) -> std::vector<Circuit>;

    /// Every edge becomes a path of p edges alternating forward and backward, starting forward.
    auto subdivide_balanced(const Digraph & h, int p) -> Digraph;

    /// Vertices V(H)xV(R), one edge (u,u')->(v,v') per pair of edges; edge id = e * |E(R)| + e'.
    auto product(const Digraph & h, const Digraph & r) -> Digraph;

    /// Disjoint union of consistently oriented circuits.
    auto circuit_union(std::span<const int> lengths) -> Digraph;

    auto disjoint_union(const Digraph & a, const Digraph & b) -> Digraph;

    /// All circuits with at most max_length edges, each once, starting at their smallest vertex.
    auto enumerate_circuits(const Digraph & g, int max_length) -> std::vector<Circuit>;

    /// Returns a bijection V(a) -> V(b) preserving edge multiplicities (and orientation unless both
    /// graphs are undirected). Throws std::invalid_argument beyond 64 vertices.
    auto isomorphism(const Digraph & a, const Digraph & b) -> std::optional<std::vector<int>>;
    auto isomorphic(const Digraph & a, const Digraph & b) -> bool;

    /// Subgraph induced on a vertex subset, vertices renumbered in increasing order.
    auto induced_subgraph(const Digraph & g, std::span<const int> vertices) -> Digraph;

    /// Connected component containing v, renumbered in increasing vertex order.
    auto component_of(const Digraph & g, int v) -> Digraph;
}

#endif
