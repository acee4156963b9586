#ifndef TTM_TENSION_HH
#define TTM_TENSION_HH 1

#include <ttm/abelian.hh>
#include <ttm/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttm
{
    /// Integer values on the edges of a graph; read over Z or reduced mod n by the caller's group.
    struct EdgeFunction
    {
        std::vector<std::int64_t> values;

        auto operator==(const EdgeFunction &) const -> bool = default;
    };

    auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t;
    auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t;

    /// Undirected graphs only carry meaning for groups where orientation is irrelevant (Z_1, Z_2).
    auto require_orientation_free(const Digraph & g, const Cyclic & group) -> void;

    auto is_tension(const Digraph & g, const EdgeFunction & tau, const Cyclic & group) -> bool;
    auto is_flow(const Digraph & g, const EdgeFunction & phi, const Cyclic & group) -> bool;

    /// (δp)(uv) = p(v) - p(u), normalised into the group.
    auto potential_tension(const Digraph & g, std::span<const std::int64_t> potential, const Cyclic & group = {}) -> EdgeFunction;

    /// +a on edges leaving X, -a on edges entering X, 0 elsewhere.
    auto elementary_tension(const Digraph & g, const std::vector<bool> & side, std::int64_t a, const Cyclic & group = {}) -> EdgeFunction;

    /// Unit circulations of the fundamental circuits of the BFS spanning forest, in non-tree edge order.
    auto flow_basis(const Digraph & g) -> std::vector<EdgeFunction>;

    /// Recovers a potential with δp = tau by integrating along a spanning forest, if one exists.
    auto integrate_tension(const Digraph & g, const EdgeFunction & tau, const Cyclic & group) -> std::optional<std::vector<std::int64_t>>;

    /// Text format: one "<edgeId> <value>" per line; missing edges are an error.
    auto parse_edge_function(std::string_view text, int edges) -> EdgeFunction;
    auto format_edge_function(const EdgeFunction & f) -> std::string;
}

#endif
