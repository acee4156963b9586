#ifndef TTM_HOM_HH
#define TTM_HOM_HH 1

#include <ttm/edge_map.hh>
#include <ttm/graph.hh>
#include <ttm/search.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttm
{
    enum class Polarity
    {
        hom,
        antihom,
        mixed  // some components reversed, some not
    };

    auto to_string(Polarity p) -> std::string;

    /// V(G) -> V(H). reversed[v] marks vertices whose component is mapped as an antihomomorphism;
    /// an empty vector means nothing is reversed.
    struct VertexMap
    {
        std::vector<int> assignment;
        std::vector<bool> reversed;

        auto is_reversed(int v) const -> bool { return ! reversed.empty() && reversed[v]; }
        auto polarity() const -> Polarity;
        auto operator==(const VertexMap &) const -> bool = default;
    };

    /// Edges of G must land on edges of H. When either graph is undirected only adjacency counts.
    auto is_homomorphism(const VertexMap & m, const Digraph & g, const Digraph & h) -> bool;

    struct HomOptions
    {
        SearchLimits limits;
        std::vector<std::pair<int, int>> pins; // (G vertex, H vertex) fixed in advance
    };

    struct HomSearchResult
    {
        SearchStatus status = SearchStatus::unknown;
        std::optional<VertexMap> witness;
        std::uint64_t nodes = 0;
    };

    /// Backtracking with forward checking on bitset domains; values tried in increasing order,
    /// so the witness is the lexicographically least in search order.
    auto find_hom(const Digraph & g, const Digraph & h, const HomOptions & options = {}) -> HomSearchResult;

    auto enumerate_homs(const Digraph & g, const Digraph & h, const std::function<bool(const VertexMap &)> & visit,
        const HomOptions & options = {}) -> EnumerationResult;

    /// uv -> m(u)m(v), picking the smallest suitable H edge. Throws if m is not a homomorphism.
    auto induced_map(const VertexMap & m, const Digraph & g, const Digraph & h) -> EdgeMap;

    /// Every vertex map inducing f (at most max_results), homomorphic components before reversed ones.
    auto all_inducing_maps(const EdgeMap & f, const Digraph & g, const Digraph & h, std::size_t max_results = 1024) -> std::vector<VertexMap>;
    auto is_hom_induced(const EdgeMap & f, const Digraph & g, const Digraph & h) -> std::optional<VertexMap>;

    /// Exact, by DSATUR branch and bound. At most 40 vertices.
    auto chromatic_number(const Digraph & g) -> int;
    auto clique_number(const Digraph & g) -> int;

    struct NiceReport
    {
        bool nice = true;
        int failed_condition = 0;  // 1 edge, 2 triangle, 3 K4 without K5, 4 K4s not linked
        std::vector<int> witness;  // offending vertices; two K4s for condition 4
    };

    /// The four clique-richness conditions; the last one as connectivity of the graph on K4 copies
    /// where two copies are adjacent when they share a triangle.
    auto is_nice(const Digraph & g) -> NiceReport;

    struct UniversalCheck
    {
        std::optional<bool> holds; // nullopt when the budget ran out
        std::uint64_t maps = 0;
        std::optional<EdgeMap> counterexample;
    };

    /// Is every TT_2 map G -> H induced by a homomorphism?
    auto homotens_pair(const Digraph & g, const Digraph & h, const SearchLimits & limits = {}) -> UniversalCheck;

    /// Is every TT_2 map K_5 -> H induced by exactly one vertex map, and is that map injective?
    auto k5_target_check(const Digraph & h, const SearchLimits & limits = {}) -> UniversalCheck;

    /// "polarity: hom" then one "<gVertex> -> <hVertex>" per line; reversed vertices carry a trailing '~' under mixed polarity.
    auto format_vertex_map(const VertexMap & m) -> std::string;
    auto parse_vertex_map(std::string_view text, int source_vertices) -> VertexMap;
}

#endif
