#ifndef TTM_EDGE_MAP_HH
#define TTM_EDGE_MAP_HH 1

#include <ttm/graph.hh>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ttm
{
    /// A total map E(G) -> E(H), stored as the image id of each source edge.
    struct EdgeMap
    {
        std::vector<int> image;

        auto operator==(const EdgeMap &) const -> bool = default;
        auto operator<=>(const EdgeMap &) const = default;
    };

    /// Throws std::invalid_argument when the map is not total or points outside E(H).
    auto validate(const EdgeMap & f, const Digraph & g, const Digraph & h) -> void;

    auto identity_map(const Digraph & g) -> EdgeMap;
    auto constant_map(const Digraph & g, int target_edge) -> EdgeMap;
    /// (second o first)
    auto compose(const EdgeMap & first, const EdgeMap & second) -> EdgeMap;

    /// Text format: one "<gEdgeId> -> <hEdgeId>" per line.
    auto parse_edge_map(std::string_view text, int source_edges) -> EdgeMap;
    auto format_edge_map(const EdgeMap & f) -> std::string;

    /// Value of TT(f,G,H) or TT(G,H): all positive integers, the divisors of one integer, or nothing.
    struct DivisorSet
    {
        enum class Kind
        {
            all,
            finite,
            empty
        };

        Kind kind = Kind::all;
        std::int64_t generator = 0; // meaningful for finite only

        static auto all_n() -> DivisorSet { return {Kind::all, 0}; }
        static auto divisors_of(std::int64_t d) -> DivisorSet { return {Kind::finite, d}; }
        static auto none() -> DivisorSet { return {Kind::empty, 0}; }

        auto contains(std::int64_t n) const -> bool;
        /// Members up to the bound, ascending.
        auto members_up_to(std::int64_t bound) const -> std::vector<std::int64_t>;
        auto to_string() const -> std::string;
        auto operator==(const DivisorSet &) const -> bool = default;
    };
}

#endif
