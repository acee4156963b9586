#ifndef TTM_CAYLEY_HH
#define TTM_CAYLEY_HH 1

#include <ttm/abelian.hh>
#include <ttm/edge_map.hh>
#include <ttm/graph.hh>
#include <ttm/search.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ttm
{
    /// Coordinates of H's edges against the star tensions of its non-root vertices.
    ///
    /// A map f: E(G) -> E(H) is TT over Z_n (or Z when modulus is 0) exactly when some
    /// potential P: V(G) -> Z_n^k satisfies P(head e) - P(tail e) = connection(f(e)) on
    /// every edge, i.e. P is a homomorphism into the directed Cayley graph on Z_n^k whose
    /// connection set is the set of edge coordinate vectors.
    struct CayleyLift
    {
        std::int64_t modulus = 2;
        int dimension = 0;
        std::vector<int> coordinate;              // H vertex -> coordinate, -1 at component roots
        std::vector<std::vector<int>> classes;    // H edges with equal vectors, ascending; ordered by first id
        std::vector<int> class_of;                // H edge -> class
        std::vector<std::int64_t> vectors;        // class c occupies [c * dimension, (c + 1) * dimension)

        auto connection(int cls) const -> std::vector<std::int64_t>;
        /// The representative H edge a Cayley edge of this class decodes to.
        auto decode(int cls) const -> int { return classes[cls].front(); }
        /// n^k as a double (infinite over Z).
        auto size() const -> double;
    };

    /// modulus 0 means Z; otherwise modulus >= 2.
    auto cayley_lift(const Digraph & h, std::int64_t modulus) -> CayleyLift;

    struct MaterializedLift
    {
        Digraph graph;              // vertex id = digits of the coordinate vector, base n, coordinate 0 least significant
        std::vector<int> decoder;   // graph edge -> H edge
    };

    /// Explicit Cayley graph; undirected when n = 2. Throws when n^k exceeds max_vertices.
    auto materialize(const CayleyLift & lift, std::int64_t max_vertices = 1 << 16) -> MaterializedLift;

    /// Homomorphism search from G into the (implicit) lift of H, decoded into an EdgeMap.
    /// The first vertex of every component of G is pinned to zero; the lift is vertex-transitive.
    auto tt_exists_via_hom(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits = {}) -> TtSearchResult;

    /// Every TT map, each reported once: potentials through the lift, then all choices within classes.
    auto enumerate_tt_lift(const Digraph & g, const Digraph & h, const Cyclic & group,
        const std::function<bool(const EdgeMap &)> & visit, const SearchLimits & limits = {}) -> EnumerationResult;

    enum class Relation
    {
        equivalent,
        g_below,       // G -> H only
        h_below,       // H -> G only
        incomparable,
        unknown
    };

    auto to_string(Relation r) -> std::string;

    struct Comparison
    {
        Relation relation = Relation::unknown;
        TtSearchResult forward;   // G -> H
        TtSearchResult backward;  // H -> G
    };

    auto compare(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits = {}) -> Comparison;

    /// Is the identity the only TT self-map? nullopt when the budget ran out.
    auto is_tt_rigid(const Digraph & g, const Cyclic & group, const SearchLimits & limits = {}) -> std::optional<bool>;
}

#endif
