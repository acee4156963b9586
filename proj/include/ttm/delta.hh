#ifndef TTM_DELTA_HH
#define TTM_DELTA_HH 1

#include <ttm/edge_map.hh>
#include <ttm/graph.hh>
#include <ttm/hom.hh>
#include <ttm/search.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttm
{
    /// Vertices are subsets of V(H) as bitmasks; A ~ B when A xor B is the endpoint pair of an edge.
    /// At most 16 vertices in H. Parallel edges of H give a single edge.
    auto delta(const Digraph & h) -> Digraph;

    /// The even-weight component of delta(K_n), vertices renumbered by increasing mask.
    auto halved_cube_component(int n) -> Digraph;

    struct ChiTtResult
    {
        std::optional<int> value;   // nullopt: not found up to nmax, or budget
        bool exhaustive = true;     // false when some level ran out of budget
    };

    /// Least n <= nmax with a homomorphism G -> delta(K_n). nmax <= 12.
    auto chi_tt(const Digraph & g, int nmax, const SearchLimits & limits = {}) -> ChiTtResult;

    struct RigidBase
    {
        Digraph graph;
        int p = 0, q = 1, r = 2, s = 3;
    };

    /// Edge-list block followed by a line "marks p q r s".
    auto parse_rigid_base(std::string_view text) -> RigidBase;
    auto format_rigid_base(const RigidBase & base) -> std::string;
    /// Triangle-free and distinct marks; rigidity is not checked here.
    auto validate(const RigidBase & base) -> void;

    /// Copies of S at every vertex joined per edge uv by (u,p)(v,q), (u,q)(v,p) and the
    /// two-paths (u,r)-(uv,1)-(v,s), (u,s)-(uv,2)-(v,r).
    /// Vertex (v,x) is v*|S| + x; vertex (e,j) is |V(G)|*|S| + 2e + j - 1.
    auto functor_f(const Digraph & g, const RigidBase & base) -> Digraph;

    /// F(m): copies to copies, connecting edges canonically. m must be a homomorphism.
    auto functor_f_map(const VertexMap & m, const Digraph & g, const Digraph & h, const RigidBase & base) -> EdgeMap;

    struct RigidConstraints
    {
        int min_vertices = 1;
        bool induced_path_marks = true;   // p q r s an induced path
        bool separated_marks = true;      // no circuit of length <= 5 through both pq and rs
        int exhaustive_up_to = 6;         // every labelled graph up to this order, samples above
        int samples_per_order = 20000;
        std::uint64_t nodes_per_candidate = 2000000;
    };

    struct RigidSearchResult
    {
        SearchStatus status = SearchStatus::none;  // none means exhausted (exhaustive orders only)
        std::optional<RigidBase> base;
        std::uint64_t candidates = 0;              // graphs passing the cheap filters
        std::uint64_t undecided = 0;               // candidates whose rigidity check ran out of budget
    };

    /// Connected triangle-free graphs with minimum degree 2 that are not bipartite, smallest order first.
    auto rigid_search(int max_vertices, const RigidConstraints & constraints = {}, std::uint64_t seed = 1) -> RigidSearchResult;

    /// Is a a sum of elements of B and copies of n (repetition allowed)? n <= 0 adds nothing.
    auto integer_cone_member(std::int64_t a, std::span<const std::int64_t> b, std::int64_t n) -> bool;

    struct CircuitUnionSet
    {
        bool integers = false;             // A already lies in the cone of B, so every n works
        std::vector<std::int64_t> members; // n in [1, nmax] admitting a TT_n map
    };

    /// TT(union of C_a, union of C_b) from the cone criterion, truncated at nmax.
    auto tt_set_circuit_union(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::int64_t nmax) -> CircuitUnionSet;

    /// Circuit lengths whose TT set is exactly the divisors of members of M:
    /// p the least prime above 4 max M, p' the least integer in (1.25p, 1.5p),
    /// A = {p, p'} and B = {p - m} then {p' - m} over m in M.
    struct PrescribedPair
    {
        std::int64_t p = 0, p_prime = 0;
        std::vector<std::int64_t> a, b;
    };

    auto prescribed_pair(std::span<const std::int64_t> m) -> PrescribedPair;
}

#endif
