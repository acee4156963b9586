#include <ttm/cayley.hh>
#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/named_graphs.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace ttm
{
    auto to_string(Polarity p) -> std::string
    {
        switch (p) {
        case Polarity::hom: return "hom";
        case Polarity::antihom: return "antihom";
        case Polarity::mixed: return "mixed";
        }
        return "?";
    }

    auto VertexMap::polarity() const -> Polarity
    {
        bool any = false, all = ! assignment.empty();
        for (std::size_t v = 0; v < assignment.size(); ++v) {
            bool r = is_reversed(static_cast<int>(v));
            any = any || r;
            all = all && r;
        }
        return ! any ? Polarity::hom : all ? Polarity::antihom : Polarity::mixed;
    }

    namespace
    {
        auto adjacency_only(const Digraph & g, const Digraph & h) -> bool
        {
            return g.undirected() || h.undirected();
        }

        /// Does H have an edge a -> b (or a ~ b when orientation is ignored)?
        auto has_arc(const Digraph & h, int a, int b, bool symmetric) -> bool
        {
            for (auto id : h.incident(a)) {
                auto & e = h.edge(id);
                if ((e.tail == a && e.head == b) || (symmetric && e.head == a && e.tail == b))
                    return true;
            }
            return false;
        }

        using Words = vector<uint64_t>;

        struct BitGraph
        {
            int words = 0;
            vector<Words> out, in;
        };

        auto bit_graph(const Digraph & h, bool symmetric) -> BitGraph
        {
            BitGraph b;
            int n = h.num_vertices();
            b.words = (n + 63) / 64;
            b.out.assign(n, Words(b.words, 0));
            b.in.assign(n, Words(b.words, 0));
            for (auto & e : h.edges()) {
                b.out[e.tail][e.head / 64] |= uint64_t{1} << (e.head % 64);
                b.in[e.head][e.tail / 64] |= uint64_t{1} << (e.tail % 64);
                if (symmetric) {
                    b.out[e.head][e.tail / 64] |= uint64_t{1} << (e.tail % 64);
                    b.in[e.tail][e.head / 64] |= uint64_t{1} << (e.head % 64);
                }
            }
            return b;
        }

        class HomSearch
        {
        public:
            HomSearch(const Digraph & g, const Digraph & h, const HomOptions & options) :
                _g(g), _h(h), _bits(bit_graph(h, adjacency_only(g, h))), _max_nodes(options.limits.max_nodes)
            {
                if (h.num_vertices() > (1 << 15))
                    throw std::invalid_argument("homomorphism target has too many vertices");
                int n = g.num_vertices(), w = _bits.words;
                _assignment.assign(n, -1);

                vector<int> position(n, -1), placed(n, 0);
                for (int i = 0; i < n; ++i) {
                    int best = -1;
                    for (int v = 0; v < n; ++v)
                        if (position[v] == -1
                            && (best == -1 || placed[v] > placed[best] || (placed[v] == placed[best] && g.degree(v) > g.degree(best))))
                            best = v;
                    position[best] = i;
                    _order.push_back(best);
                    for (auto u : g.neighbours(best))
                        ++placed[u];
                }
                _position = position;

                Words full(w, ~uint64_t{0});
                if (h.num_vertices() % 64)
                    full[w - 1] = (uint64_t{1} << (h.num_vertices() % 64)) - 1;
                if (h.num_vertices() == 0)
                    full.assign(w, 0);
                _initial.reserve(static_cast<std::size_t>(n) * w);
                for (int v = 0; v < n; ++v)
                    _initial.insert(_initial.end(), full.begin(), full.end());
                for (auto [v, a] : options.pins) {
                    if (v < 0 || v >= n || a < 0 || a >= h.num_vertices())
                        throw std::invalid_argument("pin out of range");
                    std::fill_n(_initial.begin() + v * w, w, 0);
                    _initial[v * w + a / 64] |= uint64_t{1} << (a % 64);
                }
            }

            std::function<bool(const vector<int> &)> leaf; // returns true to stop
            uint64_t nodes = 0;
            bool out_of_budget = false;

            auto run() -> void
            {
                if (_g.num_vertices() > 0 && _h.num_vertices() == 0)
                    return;
                recurse(0, _initial);
            }

        private:
            auto recurse(int i, const Words & domains) -> bool
            {
                if (i == _g.num_vertices())
                    return leaf(_assignment);
                int w = _bits.words, v = _order[i];
                for (int word = 0; word < w; ++word) {
                    uint64_t bits = domains[v * w + word];
                    while (bits) {
                        int a = word * 64 + std::countr_zero(bits);
                        bits &= bits - 1;
                        if (_max_nodes && nodes >= _max_nodes) {
                            out_of_budget = true;
                            return true;
                        }
                        ++nodes;
                        Words next = domains;
                        bool ok = true;
                        for (auto id : _g.incident(v)) {
                            auto & e = _g.edge(id);
                            int u = e.other(v);
                            if (u == v || _position[u] < i)
                                continue;
                            auto & mask = (e.tail == v) ? _bits.out[a] : _bits.in[a];
                            uint64_t any = 0;
                            for (int k = 0; k < w; ++k)
                                any |= (next[u * w + k] &= mask[k]);
                            if (! any) {
                                ok = false;
                                break;
                            }
                        }
                        if (! ok)
                            continue;
                        _assignment[v] = a;
                        if (recurse(i + 1, next))
                            return true;
                        _assignment[v] = -1;
                    }
                }
                return false;
            }

            const Digraph & _g;
            const Digraph & _h;
            BitGraph _bits;
            uint64_t _max_nodes;
            vector<int> _order, _position, _assignment;
            Words _initial;
        };
    }

    auto is_homomorphism(const VertexMap & m, const Digraph & g, const Digraph & h) -> bool
    {
        if (static_cast<int>(m.assignment.size()) != g.num_vertices())
            return false;
        for (auto a : m.assignment)
            if (a < 0 || a >= h.num_vertices())
                return false;
        bool symmetric = adjacency_only(g, h);
        for (auto & e : g.edges()) {
            int a = m.assignment[e.tail], b = m.assignment[e.head];
            if (m.is_reversed(e.tail))
                std::swap(a, b);
            if (! has_arc(h, a, b, symmetric))
                return false;
        }
        return true;
    }

    auto find_hom(const Digraph & g, const Digraph & h, const HomOptions & options) -> HomSearchResult
    {
        HomSearchResult result;
        HomSearch search(g, h, options);
        search.leaf = [&](const vector<int> & assignment) {
            result.witness = VertexMap{assignment, {}};
            return true;
        };
        search.run();
        result.nodes = search.nodes;
        result.status = result.witness ? SearchStatus::found : search.out_of_budget ? SearchStatus::unknown : SearchStatus::none;
        return result;
    }

    auto enumerate_homs(const Digraph & g, const Digraph & h, const std::function<bool(const VertexMap &)> & visit,
        const HomOptions & options) -> EnumerationResult
    {
        EnumerationResult result;
        HomSearch search(g, h, options);
        bool stopped = false;
        search.leaf = [&](const vector<int> & assignment) {
            ++result.visited;
            if (! visit(VertexMap{assignment, {}}))
                stopped = true;
            return stopped;
        };
        search.run();
        result.nodes = search.nodes;
        result.complete = ! stopped && ! search.out_of_budget;
        return result;
    }

    auto induced_map(const VertexMap & m, const Digraph & g, const Digraph & h) -> EdgeMap
    {
        bool symmetric = adjacency_only(g, h);
        std::map<std::pair<int, int>, int> first;
        for (int id = h.num_edges() - 1; id >= 0; --id) {
            auto & e = h.edge(id);
            first[{e.tail, e.head}] = id;
        }
        if (symmetric)
            for (int id = h.num_edges() - 1; id >= 0; --id) {
                auto & e = h.edge(id);
                auto it = first.find({e.head, e.tail});
                if (it == first.end() || it->second > id)
                    first[{e.head, e.tail}] = id;
            }

        EdgeMap f;
        for (auto & e : g.edges()) {
            int a = m.assignment.at(e.tail), b = m.assignment.at(e.head);
            if (m.is_reversed(e.tail))
                std::swap(a, b);
            auto it = first.find({a, b});
            if (it == first.end())
                throw std::invalid_argument("vertex map is not a homomorphism");
            f.image.push_back(it->second);
        }
        return f;
    }

    auto all_inducing_maps(const EdgeMap & f, const Digraph & g, const Digraph & h, std::size_t max_results) -> vector<VertexMap>
    {
        validate(f, g, h);
        bool symmetric = adjacency_only(g, h);
        auto comp = components(g);
        int n = g.num_vertices();

        // Per component, the consistent seeds: (assignment restricted to it, reversed).
        vector<vector<std::pair<vector<int>, bool>>> options(comp.count);
        vector<vector<int>> members(comp.count);
        for (int v = 0; v < n; ++v)
            members[comp.of[v]].push_back(v);

        for (int c = 0; c < comp.count; ++c) {
            int seed_vertex = -1;
            for (auto v : members[c])
                if (g.degree(v) > 0) {
                    seed_vertex = v;
                    break;
                }
            if (seed_vertex == -1) {
                if (h.num_vertices() > 0)
                    options[c].push_back({vector<int>{0}, false});
                continue;
            }
            int seed_edge = g.incident(seed_vertex)[0];
            auto & image = h.edge(f.image[seed_edge]);
            bool seed_is_tail = g.edge(seed_edge).tail == seed_vertex;

            // Candidate seeds: which endpoint of the image the seed vertex takes, and the polarity.
            vector<std::pair<int, bool>> seeds;
            if (symmetric) {
                seeds = {{image.tail, false}, {image.head, false}};
            }
            else {
                seeds = {{seed_is_tail ? image.tail : image.head, false}, {seed_is_tail ? image.head : image.tail, true}};
            }

            for (auto [start, reversed] : seeds) {
                vector<int> assignment(n, -1);
                assignment[seed_vertex] = start;
                std::deque<int> queue{seed_vertex};
                bool ok = true;
                while (! queue.empty() && ok) {
                    int u = queue.front();
                    queue.pop_front();
                    for (auto id : g.incident(u)) {
                        auto & e = g.edge(id);
                        auto & t = h.edge(f.image[id]);
                        int w = e.other(u);
                        int expected;
                        if (symmetric) {
                            if (assignment[u] != t.tail && assignment[u] != t.head) {
                                ok = false;
                                break;
                            }
                            expected = t.other(assignment[u]);
                        }
                        else {
                            // hom: tail -> tail; antihom: tail -> head.
                            bool u_is_tail = e.tail == u;
                            int mine = (u_is_tail != reversed) ? t.tail : t.head;
                            if (assignment[u] != mine) {
                                ok = false;
                                break;
                            }
                            expected = (u_is_tail != reversed) ? t.head : t.tail;
                        }
                        if (assignment[w] == -1) {
                            assignment[w] = expected;
                            queue.push_back(w);
                        }
                        else if (assignment[w] != expected) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (! ok)
                    continue;
                vector<int> restricted;
                for (auto v : members[c])
                    restricted.push_back(assignment[v]);
                if (std::find(options[c].begin(), options[c].end(), std::pair{restricted, reversed}) == options[c].end())
                    options[c].push_back({restricted, reversed});
            }
            if (options[c].empty())
                return {};
        }

        vector<VertexMap> result;
        vector<std::size_t> pick(comp.count, 0);
        while (result.size() < max_results) {
            VertexMap m{vector<int>(n, -1), vector<bool>(n, false)};
            bool any_reversed = false;
            for (int c = 0; c < comp.count; ++c) {
                auto & [assignment, reversed] = options[c][pick[c]];
                for (std::size_t i = 0; i < members[c].size(); ++i) {
                    m.assignment[members[c][i]] = assignment[i];
                    m.reversed[members[c][i]] = reversed;
                }
                any_reversed = any_reversed || reversed;
            }
            if (! any_reversed)
                m.reversed.clear();
            result.push_back(std::move(m));
            int c = 0;
            while (c < comp.count && ++pick[c] == options[c].size())
                pick[c++] = 0;
            if (c == comp.count)
                break;
        }
        return result;
    }

    auto is_hom_induced(const EdgeMap & f, const Digraph & g, const Digraph & h) -> optional<VertexMap>
    {
        auto all = all_inducing_maps(f, g, h, 1);
        if (all.empty())
            return std::nullopt;
        return all.front();
    }

    namespace
    {
        /// Simple undirected adjacency as 64-bit masks.
        auto masks(const Digraph & g) -> vector<uint64_t>
        {
            if (g.num_vertices() > 64)
                throw std::invalid_argument("graph too large for 64-bit vertex sets");
            vector<uint64_t> adj(g.num_vertices(), 0);
            for (int v = 0; v < g.num_vertices(); ++v)
                for (auto w : g.neighbours(v))
                    adj[v] |= uint64_t{1} << w;
            return adj;
        }

        auto max_clique(const vector<uint64_t> & adj, uint64_t candidates, int size, int & best) -> void
        {
            if (candidates == 0) {
                best = std::max(best, size);
                return;
            }
            if (size + std::popcount(candidates) <= best)
                return;
            while (candidates) {
                if (size + std::popcount(candidates) <= best)
                    return;
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                max_clique(adj, candidates & adj[v], size + 1, best);
            }
        }

        class Colouring
        {
        public:
            explicit Colouring(const vector<uint64_t> & adj) : _adj(adj), _n(static_cast<int>(adj.size())), _colour(_n, -1) {}

            auto solve(int lower, int upper) -> int
            {
                _best = upper;
                _lower = lower;
                recurse(0, 0);
                return _best;
            }

        private:
            auto recurse(int coloured, int used) -> bool
            {
                if (used >= _best)
                    return false;
                if (coloured == _n) {
                    _best = used;
                    return _best <= _lower;
                }
                int pick = -1, pick_sat = -1, pick_deg = -1;
                for (int v = 0; v < _n; ++v) {
                    if (_colour[v] != -1)
                        continue;
                    uint64_t seen = 0;
                    int deg = 0;
                    for (uint64_t b = _adj[v]; b; b &= b - 1) {
                        int w = std::countr_zero(b);
                        if (_colour[w] == -1)
                            ++deg;
                        else
                            seen |= uint64_t{1} << _colour[w];
                    }
                    int sat = std::popcount(seen);
                    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                        pick = v;
                        pick_sat = sat;
                        pick_deg = deg;
                    }
                }
                uint64_t forbidden = 0;
                for (uint64_t b = _adj[pick]; b; b &= b - 1) {
                    int w = std::countr_zero(b);
                    if (_colour[w] != -1)
                        forbidden |= uint64_t{1} << _colour[w];
                }
                for (int c = 0; c <= used && c < _best - 1; ++c) {
                    if (forbidden >> c & 1)
                        continue;
                    _colour[pick] = c;
                    bool done = recurse(coloured + 1, std::max(used, c + 1));
                    _colour[pick] = -1;
                    if (done)
                        return true;
                }
                return false;
            }

            const vector<uint64_t> & _adj;
            int _n;
            vector<int> _colour;
            int _best = 0, _lower = 0;
        };
    }

    auto clique_number(const Digraph & g) -> int
    {
        auto adj = masks(g);
        int best = 0;
        uint64_t all = g.num_vertices() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.num_vertices()) - 1;
        max_clique(adj, all, 0, best);
        return best;
    }

    auto chromatic_number(const Digraph & g) -> int
    {
        if (g.num_vertices() > 40)
            throw std::invalid_argument("chromatic number is limited to 40 vertices");
        if (g.num_vertices() == 0)
            return 0;
        auto adj = masks(g);
        int lower = std::max(1, clique_number(g));
        return Colouring(adj).solve(lower, g.num_vertices() + 1);
    }

    namespace
    {
        struct VertexSet
        {
            vector<uint64_t> words;

            auto test(int v) const -> bool { return words[v / 64] >> (v % 64) & 1; }
        };

        auto intersect_nonempty(std::initializer_list<const VertexSet *> sets) -> bool
        {
            auto first = *sets.begin();
            for (std::size_t k = 0; k < first->words.size(); ++k) {
                uint64_t x = ~uint64_t{0};
                for (auto s : sets)
                    x &= s->words[k];
                if (x)
                    return true;
            }
            return false;
        }

        struct UnionFind
        {
            vector<int> parent;
            explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }
            auto unite(int a, int b) -> void { parent[find(a)] = find(b); }
        };
    }

    auto is_nice(const Digraph & g) -> NiceReport
    {
        int n = g.num_vertices();
        int words = (n + 63) / 64;
        vector<VertexSet> adj(n, VertexSet{vector<uint64_t>(std::max(words, 1), 0)});
        for (int v = 0; v < n; ++v)
            for (auto w : g.neighbours(v))
                adj[v].words[w / 64] |= uint64_t{1} << (w % 64);

        NiceReport report;
        auto fail = [&](int condition, vector<int> witness) {
            report.nice = false;
            report.failed_condition = condition;
            report.witness = std::move(witness);
            return report;
        };

        vector<std::array<int, 3>> triangles;
        vector<std::array<int, 4>> k4s;
        for (int u = 0; u < n; ++u)
            for (auto v : g.neighbours(u)) {
                if (v <= u)
                    continue;
                if (! intersect_nonempty({&adj[u], &adj[v]}))
                    return fail(1, {u, v});
                for (auto w : g.neighbours(v))
                    if (w > v && adj[u].test(w))
                        triangles.push_back({u, v, w});
            }
        for (auto [u, v, w] : triangles) {
            if (! intersect_nonempty({&adj[u], &adj[v], &adj[w]}))
                return fail(2, {u, v, w});
            for (auto x : g.neighbours(w))
                if (x > w && adj[u].test(x) && adj[v].test(x))
                    k4s.push_back({u, v, w, x});
        }
        for (auto [u, v, w, x] : k4s)
            if (! intersect_nonempty({&adj[u], &adj[v], &adj[w], &adj[x]}))
                return fail(3, {u, v, w, x});

        UnionFind uf(static_cast<int>(k4s.size()));
        std::map<std::array<int, 3>, int> owner;
        for (int i = 0; i < static_cast<int>(k4s.size()); ++i) {
            auto & q = k4s[i];
            for (int skip = 0; skip < 4; ++skip) {
                std::array<int, 3> t;
                for (int j = 0, k = 0; j < 4; ++j)
                    if (j != skip)
                        t[k++] = q[j];
                auto [it, fresh] = owner.emplace(t, i);
                if (! fresh)
                    uf.unite(i, it->second);
            }
        }
        for (int i = 1; i < static_cast<int>(k4s.size()); ++i)
            if (uf.find(i) != uf.find(0)) {
                vector<int> witness(k4s[0].begin(), k4s[0].end());
                witness.insert(witness.end(), k4s[i].begin(), k4s[i].end());
                return fail(4, witness);
            }
        return report;
    }

    auto homotens_pair(const Digraph & g, const Digraph & h, const SearchLimits & limits) -> UniversalCheck
    {
        UniversalCheck check;
        auto outcome = enumerate_tt_lift(g, h, Cyclic{2}, [&](const EdgeMap & f) {
            ++check.maps;
            if (! is_hom_induced(f, g, h)) {
                check.counterexample = f;
                return false;
            }
            return true;
        }, limits);
        if (check.counterexample)
            check.holds = false;
        else if (outcome.complete)
            check.holds = true;
        return check;
    }

    auto k5_target_check(const Digraph & h, const SearchLimits & limits) -> UniversalCheck
    {
        auto k5 = complete_graph(5);
        UniversalCheck check;
        auto outcome = enumerate_tt_lift(k5, h, Cyclic{2}, [&](const EdgeMap & f) {
            ++check.maps;
            auto inducing = all_inducing_maps(f, k5, h, 4);
            bool good = inducing.size() == 1;
            if (good) {
                auto a = inducing.front().assignment;
                std::sort(a.begin(), a.end());
                good = std::adjacent_find(a.begin(), a.end()) == a.end();
            }
            if (! good)
                check.counterexample = f;
            return good;
        }, limits);
        if (check.counterexample)
            check.holds = false;
        else if (outcome.complete)
            check.holds = true;
        return check;
    }

    auto format_vertex_map(const VertexMap & m) -> std::string
    {
        std::ostringstream out;
        auto p = m.polarity();
        out << "polarity: " << to_string(p) << '\n';
        for (std::size_t v = 0; v < m.assignment.size(); ++v) {
            out << v << " -> " << m.assignment[v];
            if (p == Polarity::mixed && m.is_reversed(static_cast<int>(v)))
                out << " ~";
            out << '\n';
        }
        return out.str();
    }

    auto parse_vertex_map(std::string_view text, int source_vertices) -> VertexMap
    {
        VertexMap m{vector<int>(source_vertices, -1), vector<bool>(source_vertices, false)};
        std::istringstream in{std::string(text)};
        std::string line;
        int number = 0;
        optional<Polarity> polarity;
        while (std::getline(in, line)) {
            ++number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            std::istringstream fields(line);
            if (line.compare(first, 9, "polarity:") == 0) {
                std::string tag, value;
                fields >> tag >> value;
                if (value == "hom")
                    polarity = Polarity::hom;
                else if (value == "antihom")
                    polarity = Polarity::antihom;
                else if (value == "mixed")
                    polarity = Polarity::mixed;
                else
                    throw ParseError(number, "unknown polarity '" + value + "'");
                continue;
            }
            long long from, to;
            std::string arrow, rest;
            if (! (fields >> from >> arrow >> to) || arrow != "->")
                throw ParseError(number, "expected '<gVertex> -> <hVertex>'");
            bool reversed = false;
            if (fields >> rest) {
                if (rest != "~" || (fields >> rest))
                    throw ParseError(number, "unexpected trailing content");
                reversed = true;
            }
            if (from < 0 || from >= source_vertices || to < 0)
                throw ParseError(number, "vertex id out of range");
            m.assignment[from] = static_cast<int>(to);
            m.reversed[from] = reversed || polarity == Polarity::antihom;
        }
        for (int v = 0; v < source_vertices; ++v)
            if (m.assignment[v] == -1)
                throw ParseError(number, "vertex " + std::to_string(v) + " is not mapped");
        if (std::none_of(m.reversed.begin(), m.reversed.end(), [](bool b) { return b; }))
            m.reversed.clear();
        return m;
    }
}
