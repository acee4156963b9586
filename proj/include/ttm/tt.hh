#ifndef TTM_TT_HH
#define TTM_TT_HH 1

#include <ttm/abelian.hh>
#include <ttm/edge_map.hh>
#include <ttm/graph.hh>
#include <ttm/tension.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace ttm
{
    /// phi_f(e') = sum of phi(e) over f(e) = e', over the integers.
    auto algebraic_image(const EdgeMap & f, const Digraph & g, const Digraph & h, const EdgeFunction & phi) -> EdgeFunction;

    /// Integer conservation defect (in minus out) of the image of each basis flow, per target vertex.
    /// Row i belongs to the i-th fundamental circuit of G.
    auto conservation_defects(const EdgeMap & f, const Digraph & g, const Digraph & h) -> std::vector<std::vector<std::int64_t>>;

    /// f is TT over the group iff the image of every basis flow of G is a flow of H.
    auto is_tt(const EdgeMap & f, const Digraph & g, const Digraph & h, const Cyclic & group) -> bool;
    auto is_tt(const EdgeMap & f, const Digraph & g, const Digraph & h, const GroupSpec & group) -> bool;

    /// Same question answered from the tension side: pulls back every star tension of H.
    auto is_tt_via_tensions(const EdgeMap & f, const Digraph & g, const Digraph & h, const Cyclic & group) -> bool;

    /// Every pullback of a unit cut tension of H is a unit cut tension of G. |V(H)| <= 20.
    auto is_cut_tt_integers(const EdgeMap & f, const Digraph & g, const Digraph & h) -> bool;

    /// TT(f,G,H) from the gcd of all conservation defects.
    auto tt_divisor_set(const EdgeMap & f, const Digraph & g, const Digraph & h) -> DivisorSet;

    /// Length of the shortest circuit whose imbalance is not annihilated by the group; nullopt is infinity.
    auto g_invariant(const Digraph & g, const Cyclic & group) -> std::optional<int>;
    auto g_invariant(const Digraph & g, const GroupSpec & group) -> std::optional<int>;
}

#endif
