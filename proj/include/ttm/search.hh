#ifndef TTM_SEARCH_HH
#define TTM_SEARCH_HH 1

#include <ttm/abelian.hh>
#include <ttm/edge_map.hh>
#include <ttm/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ttm
{
    enum class SearchStatus
    {
        found,   // a witness exists (and is returned)
        none,    // the whole space was exhausted without a witness
        unknown  // the node budget ran out first
    };

    auto to_string(SearchStatus s) -> std::string;

    struct SearchLimits
    {
        std::uint64_t max_nodes = 0; // 0 means unlimited
        int threads = 1;
    };

    struct TtSearchResult
    {
        SearchStatus status = SearchStatus::unknown;
        std::optional<EdgeMap> witness;
        std::uint64_t nodes = 0;
    };

    /// Edge-by-edge backtracking over maps E(G) -> E(H). Edges are ordered so that fundamental
    /// circuits complete early; a completed circuit whose image is not conserved is pruned, and a
    /// partial circuit is pruned once its defect is too far from zero to be repaired.
    auto find_tt(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits = {}) -> TtSearchResult;

    struct EnumerationResult
    {
        bool complete = true;
        std::uint64_t visited = 0; // maps reported to the callback
        std::uint64_t nodes = 0;
    };

    /// Calls visit on every TT map in search order; visit returns false to stop.
    auto enumerate_tt_direct(const Digraph & g, const Digraph & h, const Cyclic & group,
        const std::function<bool(const EdgeMap &)> & visit, const SearchLimits & limits = {}) -> EnumerationResult;

    /// A down-set of the divisibility order: everything, or the divisors of some generators.
    struct DivisorDownSet
    {
        bool all = false;
        std::vector<std::int64_t> generators; // pairwise non-dividing, ascending

        auto contains(std::int64_t n) const -> bool;
        auto add(std::int64_t generator) -> void;
        auto members_up_to(std::int64_t bound) const -> std::vector<std::int64_t>;
        auto to_string() const -> std::string;
    };

    struct TtSetResult
    {
        SearchStatus status = SearchStatus::unknown; // found when decided
        DivisorDownSet set;
    };

    /// TT(G,H) as the union of TT(f,G,H) over all maps, refused when |E(H)|^|E(G)| > max_maps.
    auto tt_set(const Digraph & g, const Digraph & h, double max_maps = 1e8) -> TtSetResult;
}

#endif
