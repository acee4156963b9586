#include <ttm/cayley.hh>
#include <ttm/delta.hh>
#include <ttm/graph_io.hh>
#include <ttm/named_graphs.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace ttm
{
    auto delta(const Digraph & h) -> Digraph
    {
        int n = h.num_vertices();
        if (n > 16)
            throw std::invalid_argument("delta is limited to 16 vertices");
        std::set<unsigned> pairs;
        for (auto & e : h.edges())
            pairs.insert((1u << e.tail) | (1u << e.head));
        vector<Edge> edges;
        for (unsigned a = 0; a < (1u << n); ++a)
            for (auto m : pairs)
                if (a < (a ^ m))
                    edges.push_back({static_cast<int>(a), static_cast<int>(a ^ m)});
        return Digraph(1 << n, std::move(edges), true, "delta(" + h.name() + ")");
    }

    auto halved_cube_component(int n) -> Digraph
    {
        if (n < 1 || n > 16)
            throw std::invalid_argument("halved cube needs 1 <= n <= 16");
        vector<int> rank(1 << n, -1);
        int count = 0;
        for (unsigned a = 0; a < (1u << n); ++a)
            if (std::popcount(a) % 2 == 0)
                rank[a] = count++;
        vector<Edge> edges;
        for (unsigned a = 0; a < (1u << n); ++a) {
            if (rank[a] == -1)
                continue;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    unsigned b = a ^ (1u << i) ^ (1u << j);
                    if (a < b)
                        edges.push_back({rank[a], rank[b]});
                }
        }
        return Digraph(count, std::move(edges), true, "halved_cube_" + std::to_string(n));
    }

    auto chi_tt(const Digraph & g, int nmax, const SearchLimits & limits) -> ChiTtResult
    {
        if (nmax > 12)
            throw std::invalid_argument("chi_tt is limited to nmax <= 12");
        ChiTtResult result;
        if (g.num_edges() == 0) {
            if (nmax >= 1)
                result.value = 1;
            return result;
        }
        // Delta(K_n) is a Cayley graph, so one vertex per component may be pinned to the empty set.
        HomOptions options;
        options.limits = limits;
        auto comp = components(g);
        vector<bool> pinned(comp.count, false);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (! pinned[comp.of[v]]) {
                pinned[comp.of[v]] = true;
                options.pins.push_back({v, 0});
            }
        for (int n = 2; n <= nmax; ++n) {
            auto target = delta(complete_graph(n));
            auto found = find_hom(g, target, options);
            if (found.status == SearchStatus::found) {
                result.value = n;
                return result;
            }
            if (found.status == SearchStatus::unknown)
                result.exhaustive = false;
        }
        return result;
    }

    auto parse_rigid_base(std::string_view text) -> RigidBase
    {
        std::string all(text);
        auto at = all.find("marks");
        while (at != std::string::npos && at > 0 && all[at - 1] != '\n')
            at = all.find("marks", at + 1);
        if (at == std::string::npos)
            throw ParseError(0, "rigid base needs a 'marks p q r s' line");
        int line = 1 + static_cast<int>(std::count(all.begin(), all.begin() + at, '\n'));
        RigidBase base;
        base.graph = parse_edge_list(std::string_view(all).substr(0, at), "S");
        std::istringstream fields(all.substr(at + 5));
        std::string rest;
        if (! (fields >> base.p >> base.q >> base.r >> base.s))
            throw ParseError(line, "expected 'marks p q r s'");
        if (fields >> rest)
            throw ParseError(line, "unexpected content after marks");
        try {
            validate(base);
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(line, e.what());
        }
        return base;
    }

    auto format_rigid_base(const RigidBase & base) -> std::string
    {
        return format_edge_list(base.graph) + "marks " + std::to_string(base.p) + " " + std::to_string(base.q) + " "
            + std::to_string(base.r) + " " + std::to_string(base.s) + "\n";
    }

    namespace
    {
        auto has_triangle(const Digraph & g) -> bool
        {
            for (auto & e : g.edges())
                for (auto w : g.neighbours(e.tail))
                    if (w != e.head && g.adjacent(w, e.head))
                        return true;
            return false;
        }
    }

    auto validate(const RigidBase & base) -> void
    {
        int n = base.graph.num_vertices();
        std::set<int> marks{base.p, base.q, base.r, base.s};
        if (marks.size() != 4 || *marks.begin() < 0 || *marks.rbegin() >= n)
            throw std::invalid_argument("marks must be four distinct vertices");
        if (has_triangle(base.graph))
            throw std::invalid_argument("rigid base must be triangle-free");
    }

    auto functor_f(const Digraph & g, const RigidBase & base) -> Digraph
    {
        auto & s = base.graph;
        int k = s.num_vertices(), copies = g.num_vertices() * k;
        vector<Edge> edges;
        for (int v = 0; v < g.num_vertices(); ++v)
            for (auto & e : s.edges())
                edges.push_back({v * k + e.tail, v * k + e.head});
        for (int id = 0; id < g.num_edges(); ++id) {
            int u = g.edge(id).tail, v = g.edge(id).head;
            int m1 = copies + 2 * id, m2 = m1 + 1;
            edges.push_back({u * k + base.p, v * k + base.q});
            edges.push_back({u * k + base.q, v * k + base.p});
            edges.push_back({u * k + base.r, m1});
            edges.push_back({m1, v * k + base.s});
            edges.push_back({u * k + base.s, m2});
            edges.push_back({m2, v * k + base.r});
        }
        return Digraph(copies + 2 * g.num_edges(), std::move(edges), true, "F(" + g.name() + ")");
    }

    auto functor_f_map(const VertexMap & m, const Digraph & g, const Digraph & h, const RigidBase & base) -> EdgeMap
    {
        if (! is_homomorphism(m, g, h))
            throw std::invalid_argument("F is only defined on homomorphisms");
        int per_copy = base.graph.num_edges();
        int h_copies = h.num_vertices() * per_copy;
        EdgeMap f;
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int e = 0; e < per_copy; ++e)
                f.image.push_back(m.assignment[v] * per_copy + e);

        std::map<std::pair<int, int>, int> first;
        for (int id = h.num_edges() - 1; id >= 0; --id)
            first[{h.edge(id).tail, h.edge(id).head}] = id;
        // Connecting edges of a reversed image edge: the two direct edges swap, the two-paths swap ends.
        static constexpr int reversed[6] = {1, 0, 5, 4, 3, 2};
        for (int id = 0; id < g.num_edges(); ++id) {
            int a = m.assignment[g.edge(id).tail], b = m.assignment[g.edge(id).head];
            int target;
            bool flip = false;
            auto forward = first.find({a, b}), backward = first.find({b, a});
            if (forward != first.end() && (backward == first.end() || forward->second <= backward->second))
                target = forward->second;
            else {
                target = backward->second;
                flip = true;
            }
            for (int j = 0; j < 6; ++j)
                f.image.push_back(h_copies + 6 * target + (flip ? reversed[j] : j));
        }
        return f;
    }

    namespace
    {
        /// Adjacency masks of a graph with at most 64 vertices.
        auto adjacency(const Digraph & g) -> vector<uint64_t>
        {
            vector<uint64_t> adj(g.num_vertices(), 0);
            for (auto & e : g.edges()) {
                adj[e.tail] |= uint64_t{1} << e.head;
                adj[e.head] |= uint64_t{1} << e.tail;
            }
            return adj;
        }

        auto cheap_filters(const vector<uint64_t> & adj) -> bool
        {
            int n = static_cast<int>(adj.size());
            for (int v = 0; v < n; ++v) {
                if (std::popcount(adj[v]) < 2)
                    return false;
                for (uint64_t b = adj[v]; b; b &= b - 1)
                    if (adj[v] & adj[std::countr_zero(b)])
                        return false; // triangle
            }
            // connected and not bipartite, by two-colouring
            vector<int> colour(n, -1);
            colour[0] = 0;
            vector<int> stack{0};
            bool odd = false;
            int seen = 1;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (uint64_t b = adj[v]; b; b &= b - 1) {
                    int w = std::countr_zero(b);
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        ++seen;
                        stack.push_back(w);
                    }
                    else if (colour[w] == colour[v])
                        odd = true;
                }
            }
            return seen == n && odd;
        }

        auto choose_marks(const Digraph & g, const vector<uint64_t> & adj, const RigidConstraints & constraints) -> optional<std::array<int, 4>>
        {
            int n = g.num_vertices();
            vector<Circuit> short_circuits;
            if (constraints.separated_marks)
                short_circuits = enumerate_circuits(g, 5);
            auto edge_between = [&](int a, int b) {
                for (auto id : g.incident(a))
                    if (g.edge(id).other(a) == b)
                        return id;
                return -1;
            };
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r)
                        for (int s = 0; s < n; ++s) {
                            if (p == q || p == r || p == s || q == r || q == s || r == s)
                                continue;
                            if (! (adj[p] >> q & 1) || ! (adj[q] >> r & 1) || ! (adj[r] >> s & 1))
                                continue;
                            if (constraints.induced_path_marks && (adj[p] >> s & 1))
                                continue; // p r and q s are non-edges already in a triangle-free graph
                            if (constraints.separated_marks) {
                                int pq = edge_between(p, q), rs = edge_between(r, s);
                                bool through = false;
                                for (auto & c : short_circuits) {
                                    bool a = false, b = false;
                                    for (auto [id, sign] : c.edges) {
                                        a = a || id == pq;
                                        b = b || id == rs;
                                    }
                                    through = through || (a && b);
                                }
                                if (through)
                                    continue;
                            }
                            return std::array<int, 4>{p, q, r, s};
                        }
            return std::nullopt;
        }
    }

    auto rigid_search(int max_vertices, const RigidConstraints & constraints, uint64_t seed) -> RigidSearchResult
    {
        if (max_vertices > 12)
            throw std::invalid_argument("rigid search is limited to 12 vertices");
        RigidSearchResult result;
        bool sampled = false;
        SearchLimits limits;
        limits.max_nodes = constraints.nodes_per_candidate;

        auto consider = [&](int n, const vector<Edge> & edges) -> bool {
            Digraph g(n, edges, true, "S");
            auto adj = adjacency(g);
            if (! cheap_filters(adj))
                return false;
            auto marks = choose_marks(g, adj, constraints);
            if (! marks)
                return false;
            ++result.candidates;
            auto rigid = is_tt_rigid(g, Cyclic{2}, limits);
            if (! rigid) {
                ++result.undecided;
                return false;
            }
            if (! *rigid)
                return false;
            result.base = RigidBase{g, (*marks)[0], (*marks)[1], (*marks)[2], (*marks)[3]};
            return true;
        };

        for (int n = std::max(1, constraints.min_vertices); n <= max_vertices; ++n) {
            vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    pairs.push_back({i, j});
            int m = static_cast<int>(pairs.size());

            if (n <= constraints.exhaustive_up_to) {
                for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
                    if (std::popcount(mask) < n)
                        continue; // minimum degree 2 needs at least n edges
                    vector<Edge> edges;
                    for (int i = 0; i < m; ++i)
                        if (mask >> i & 1)
                            edges.push_back({pairs[i].first, pairs[i].second});
                    if (consider(n, edges)) {
                        result.status = SearchStatus::found;
                        return result;
                    }
                }
                continue;
            }

            sampled = true;
            for (int attempt = 0; attempt < constraints.samples_per_order; ++attempt) {
                std::seed_seq sequence{seed, static_cast<uint64_t>(n), static_cast<uint64_t>(attempt)};
                std::mt19937_64 rng(sequence);
                auto order = pairs;
                std::shuffle(order.begin(), order.end(), rng);
                int target = std::uniform_int_distribution<int>(n + 1, n * n / 4)(rng);
                vector<uint64_t> adj(n, 0);
                vector<Edge> edges;
                for (auto [i, j] : order) {
                    if (static_cast<int>(edges.size()) >= target)
                        break;
                    if (adj[i] & adj[j])
                        continue;
                    adj[i] |= uint64_t{1} << j;
                    adj[j] |= uint64_t{1} << i;
                    edges.push_back({i, j});
                }
                if (consider(n, edges)) {
                    result.status = SearchStatus::found;
                    return result;
                }
            }
        }
        result.status = (sampled || result.undecided) ? SearchStatus::unknown : SearchStatus::none;
        return result;
    }

    auto integer_cone_member(int64_t a, std::span<const int64_t> b, int64_t n) -> bool
    {
        if (a < 0)
            throw std::invalid_argument("cone membership needs a >= 0");
        vector<int64_t> coins;
        for (auto x : b)
            if (x > 0)
                coins.push_back(x);
        if (n > 0)
            coins.push_back(n);
        vector<char> reachable(a + 1, 0);
        reachable[0] = 1;
        for (int64_t x = 1; x <= a; ++x)
            for (auto c : coins)
                if (c <= x && reachable[x - c]) {
                    reachable[x] = 1;
                    break;
                }
        return reachable[a];
    }

    auto tt_set_circuit_union(std::span<const int64_t> a, std::span<const int64_t> b, int64_t nmax) -> CircuitUnionSet
    {
        if (a.empty() || b.empty())
            throw std::invalid_argument("circuit unions need nonempty length sets");
        for (auto x : a)
            if (x < 2)
                throw std::invalid_argument("circuit length below 2");
        for (auto x : b)
            if (x < 2)
                throw std::invalid_argument("circuit length below 2");
        auto all_in = [&](int64_t n) {
            return std::all_of(a.begin(), a.end(), [&](int64_t x) { return integer_cone_member(x, b, n); });
        };
        CircuitUnionSet result;
        result.integers = all_in(0);
        for (int64_t n = 1; n <= nmax; ++n)
            if (all_in(n))
                result.members.push_back(n);
        return result;
    }

    auto prescribed_pair(std::span<const int64_t> m) -> PrescribedPair
    {
        if (m.empty())
            throw std::invalid_argument("the generating set must be nonempty");
        vector<int64_t> gens(m.begin(), m.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gens.front() < 1)
            throw std::invalid_argument("generators must be positive");
        if (gens.back() > (int64_t{1} << 40))
            throw std::invalid_argument("generator too large");

        auto is_prime = [](int64_t x) {
            if (x < 2)
                return false;
            for (int64_t d = 2; d * d <= x; ++d)
                if (x % d == 0)
                    return false;
            return true;
        };
        PrescribedPair out;
        out.p = 4 * gens.back() + 1;
        while (! is_prime(out.p))
            ++out.p;
        out.p_prime = (5 * out.p) / 4 + 1;   // strictly above 1.25p
        out.a = {out.p, out.p_prime};
        for (auto base : {out.p, out.p_prime})
            for (auto x : gens)
                out.b.push_back(base - x);
        return out;
    }
}
