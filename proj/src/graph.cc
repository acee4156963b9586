#include <ttm/graph.hh>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace ttm
{
    Digraph::Digraph(int vertices, vector<Edge> edges, bool undirected, string name) :
        _vertices(vertices),
        _edges(std::move(edges)),
        _undirected(undirected),
        _name(std::move(name))
    {
        if (_vertices < 0)
            throw invalid_argument("negative vertex count");

        for (std::size_t i = 0; i < _edges.size(); ++i) {
            auto & e = _edges[i];
            if (e.tail < 0 || e.tail >= _vertices || e.head < 0 || e.head >= _vertices)
                throw invalid_argument("edge " + to_string(i) + " references a missing vertex");
            if (e.tail == e.head)
                throw invalid_argument("edge " + to_string(i) + " is a loop");
            if (_undirected && e.tail > e.head)
                std::swap(e.tail, e.head);
        }

        _incidence_start.assign(_vertices + 1, 0);
        for (auto & e : _edges) {
            ++_incidence_start[e.tail + 1];
            ++_incidence_start[e.head + 1];
        }
        std::partial_sum(_incidence_start.begin(), _incidence_start.end(), _incidence_start.begin());
        _incidence.resize(2 * _edges.size());
        auto fill = _incidence_start;
        for (int i = 0; i < num_edges(); ++i) {
            _incidence[fill[_edges[i].tail]++] = i;
            _incidence[fill[_edges[i].head]++] = i;
        }

        _neighbour_start.assign(_vertices + 1, 0);
        vector<vector<int>> nbrs(_vertices);
        for (int v = 0; v < _vertices; ++v) {
            for (auto e : incident(v))
                nbrs[v].push_back(_edges[e].other(v));
            std::sort(nbrs[v].begin(), nbrs[v].end());
            nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
            _neighbour_start[v + 1] = _neighbour_start[v] + static_cast<int>(nbrs[v].size());
        }
        for (auto & n : nbrs)
            _neighbour.insert(_neighbour.end(), n.begin(), n.end());
    }

    auto Digraph::incident(int v) const -> span<const int>
    {
        return span<const int>(_incidence).subspan(_incidence_start[v], _incidence_start[v + 1] - _incidence_start[v]);
    }

    auto Digraph::neighbours(int v) const -> span<const int>
    {
        return span<const int>(_neighbour).subspan(_neighbour_start[v], _neighbour_start[v + 1] - _neighbour_start[v]);
    }

    auto Digraph::adjacent(int u, int v) const -> bool
    {
        auto n = neighbours(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

    auto Digraph::with_name(string name) const -> Digraph
    {
        return Digraph(_vertices, _edges, _undirected, std::move(name));
    }

    auto Digraph::as_directed() const -> Digraph
    {
        return Digraph(_vertices, _edges, false, _name);
    }

    auto components(const Digraph & g) -> Components
    {
        Components result;
        result.of.assign(g.num_vertices(), -1);
        for (int s = 0; s < g.num_vertices(); ++s) {
            if (result.of[s] != -1)
                continue;
            vector<int> stack{s};
            result.of[s] = result.count;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto w : g.neighbours(v))
                    if (result.of[w] == -1) {
                        result.of[w] = result.count;
                        stack.push_back(w);
                    }
            }
            ++result.count;
        }
        return result;
    }

    auto Circuit::positive_edges() const -> vector<int>
    {
        vector<int> result;
        for (auto & e : edges)
            if (e.sign > 0)
                result.push_back(e.edge);
        return result;
    }

    auto Circuit::negative_edges() const -> vector<int>
    {
        vector<int> result;
        for (auto & e : edges)
            if (e.sign < 0)
                result.push_back(e.edge);
        return result;
    }

    auto Circuit::imbalance() const -> int
    {
        int result = 0;
        for (auto & e : edges)
            result += e.sign;
        return result;
    }

    auto is_valid_circuit(const Digraph & g, const Circuit & c) -> bool
    {
        int len = c.length();
        if (len < 2 || static_cast<int>(c.vertices.size()) != len)
            return false;

        vector<int> seen_edge(g.num_edges(), 0), seen_vertex(g.num_vertices(), 0);
        for (int i = 0; i < len; ++i) {
            auto [id, sign] = c.edges[i];
            if (id < 0 || id >= g.num_edges() || (sign != 1 && sign != -1))
                return false;
            if (seen_edge[id]++)
                return false;
            if (seen_vertex[c.vertices[i]]++)
                return false;
            auto & e = g.edge(id);
            int from = sign > 0 ? e.tail : e.head, to = sign > 0 ? e.head : e.tail;
            if (from != c.vertices[i] || to != c.vertices[(i + 1) % len])
                return false;
        }
        return true;
    }

    auto Cut::edges(const Digraph & g) const -> vector<CircuitEdge>
    {
        vector<CircuitEdge> result;
        for (int i = 0; i < g.num_edges(); ++i) {
            auto & e = g.edge(i);
            if (side[e.tail] && ! side[e.head])
                result.push_back({i, 1});
            else if (! side[e.tail] && side[e.head])
                result.push_back({i, -1});
        }
        return result;
    }

    auto spanning_forest(const Digraph & g) -> SpanningForest
    {
        int n = g.num_vertices();
        SpanningForest f;
        f.parent_edge.assign(n, -1);
        f.parent.assign(n, -1);
        f.root.assign(n, -1);
        f.depth.assign(n, 0);
        for (int s = 0; s < n; ++s) {
            if (f.root[s] != -1)
                continue;
            f.root[s] = s;
            std::deque<int> queue{s};
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                f.order.push_back(v);
                for (auto id : g.incident(v)) {
                    int w = g.edge(id).other(v);
                    if (f.root[w] == -1) {
                        f.root[w] = s;
                        f.parent[w] = v;
                        f.parent_edge[w] = id;
                        f.depth[w] = f.depth[v] + 1;
                        f.tree_edges.push_back(id);
                        queue.push_back(w);
                    }
                }
            }
        }
        std::sort(f.tree_edges.begin(), f.tree_edges.end());
        return f;
    }

    namespace
    {
        auto forest_spans(const Digraph & g, const SpanningForest & f) -> bool
        {
            int n = g.num_vertices();
            if (static_cast<int>(f.parent_edge.size()) != n || static_cast<int>(f.parent.size()) != n
                || static_cast<int>(f.depth.size()) != n)
                return false;
            auto comps = components(g);
            if (static_cast<int>(f.tree_edges.size()) != n - comps.count)
                return false;
            for (int v = 0; v < n; ++v) {
                if (f.parent[v] == -1)
                    continue;
                int id = f.parent_edge[v];
                if (id < 0 || id >= g.num_edges() || g.edge(id).other(f.parent[v]) != v || g.edge(id).other(v) != f.parent[v])
                    return false;
                if (f.depth[v] != f.depth[f.parent[v]] + 1)
                    return false;
            }
            return true;
        }
    }

    auto fundamental_circuits(const Digraph & g, const SpanningForest & f) -> vector<Circuit>
    {
        if (! forest_spans(g, f))
            throw invalid_argument("spanning forest does not span the graph");

        vector<bool> in_tree(g.num_edges(), false);
        for (auto id : f.tree_edges)
            in_tree[id] = true;

        vector<Circuit> result;
        for (int id = 0; id < g.num_edges(); ++id) {
            if (in_tree[id])
                continue;
            auto & e = g.edge(id);
            // Walk tail and head up to their common ancestor.
            int a = e.head, b = e.tail;
            vector<int> head_side{a}, tail_side{b};
            while (a != b) {
                if (f.depth[a] >= f.depth[b]) {
                    a = f.parent[a];
                    head_side.push_back(a);
                }
                else {
                    b = f.parent[b];
                    tail_side.push_back(b);
                }
            }
            // Circuit: tail -e-> head -> ... -> lca -> ... -> tail
            vector<int> walk = head_side;
            for (int i = static_cast<int>(tail_side.size()) - 2; i >= 0; --i)
                walk.push_back(tail_side[i]);

            Circuit c;
            c.vertices.push_back(e.tail);
            c.edges.push_back({id, 1});
            for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
                int from = walk[i], to = walk[i + 1];
                int tree_edge = (f.parent[from] == to) ? f.parent_edge[from] : f.parent_edge[to];
                c.vertices.push_back(from);
                c.edges.push_back({tree_edge, g.edge(tree_edge).tail == from ? 1 : -1});
            }
            result.push_back(std::move(c));
        }
        return result;
    }

    auto subdivide_balanced(const Digraph & h, int p) -> Digraph
    {
        if (p < 3 || p % 2 == 0)
            throw invalid_argument("subdivision length must be odd and at least 3");

        int n = h.num_vertices();
        vector<Edge> edges;
        int next = n;
        for (auto & e : h.edges()) {
            int prev = e.tail;
            for (int j = 1; j <= p; ++j) {
                int cur = (j == p) ? e.head : next++;
                if (j % 2 == 1)
                    edges.push_back({prev, cur});
                else
                    edges.push_back({cur, prev});
                prev = cur;
            }
        }
        return Digraph(next, std::move(edges), false, h.name().empty() ? string{} : h.name() + "-sub" + to_string(p));
    }

    auto product(const Digraph & h, const Digraph & r) -> Digraph
    {
        int nr = r.num_vertices();
        vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(h.num_edges()) * r.num_edges());
        for (auto & e : h.edges())
            for (auto & f : r.edges())
                edges.push_back({e.tail * nr + f.tail, e.head * nr + f.head});
        return Digraph(h.num_vertices() * nr, std::move(edges));
    }

    auto circuit_union(span<const int> lengths) -> Digraph
    {
        vector<Edge> edges;
        int base = 0;
        string name = "circuits";
        for (auto len : lengths) {
            if (len < 2)
                throw invalid_argument("circuit length must be at least 2");
            for (int i = 0; i < len; ++i)
                edges.push_back({base + i, base + (i + 1) % len});
            base += len;
            name += "-" + to_string(len);
        }
        return Digraph(base, std::move(edges), false, name);
    }

    auto disjoint_union(const Digraph & a, const Digraph & b) -> Digraph
    {
        vector<Edge> edges(a.edges().begin(), a.edges().end());
        for (auto & e : b.edges())
            edges.push_back({e.tail + a.num_vertices(), e.head + a.num_vertices()});
        return Digraph(a.num_vertices() + b.num_vertices(), std::move(edges), a.undirected() && b.undirected());
    }

    auto enumerate_circuits(const Digraph & g, int max_length) -> vector<Circuit>
    {
        vector<Circuit> result;
        int n = g.num_vertices();
        vector<bool> on_path(n, false);
        Circuit path;

        // Circuits are rooted at their smallest vertex s, and the first edge id must be below the last.
        std::function<void(int, int)> extend = [&](int s, int v) {
            for (auto id : g.incident(v)) {
                int w = g.edge(id).other(v);
                int sign = g.edge(id).tail == v ? 1 : -1;
                if (w == s && path.length() >= 1) {
                    if (path.edges.front().edge == id || path.edges.front().edge > id)
                        continue;
                    Circuit c = path;
                    c.vertices.push_back(v);
                    c.edges.push_back({id, sign});
                    result.push_back(std::move(c));
                    continue;
                }
                if (w < s || on_path[w] || path.length() + 1 >= max_length)
                    continue;
                on_path[w] = true;
                path.vertices.push_back(v);
                path.edges.push_back({id, sign});
                extend(s, w);
                path.vertices.pop_back();
                path.edges.pop_back();
                on_path[w] = false;
            }
        };

        if (max_length < 2)
            return result;
        for (int s = 0; s < n; ++s) {
            on_path[s] = true;
            extend(s, s);
            on_path[s] = false;
        }
        return result;
    }

    namespace
    {
        struct Multiplicity
        {
            int n;
            vector<int> out; // out[u * n + v] = number of arcs u -> v

            Multiplicity(const Digraph & g, bool symmetric) :
                n(g.num_vertices()), out(static_cast<std::size_t>(n) * n, 0)
            {
                for (auto & e : g.edges()) {
                    ++out[e.tail * n + e.head];
                    if (symmetric)
                        ++out[e.head * n + e.tail];
                }
            }

            auto operator()(int u, int v) const -> int { return out[u * n + v]; }
        };

        auto refine_colours(const Multiplicity & a, const Multiplicity & b) -> std::pair<vector<int>, vector<int>>
        {
            int n = a.n;
            vector<int> colour(2 * n, 0);
            for (int round = 0; round < 2 * n + 1; ++round) {
                std::map<vector<int>, int> ids;
                vector<vector<int>> signatures(2 * n);
                for (int side = 0; side < 2; ++side) {
                    auto & m = side == 0 ? a : b;
                    for (int v = 0; v < n; ++v) {
                        vector<int> sig{colour[side * n + v]};
                        vector<std::tuple<int, int, int>> nb;
                        for (int w = 0; w < n; ++w)
                            if (m(v, w) || m(w, v))
                                nb.emplace_back(colour[side * n + w], m(v, w), m(w, v));
                        std::sort(nb.begin(), nb.end());
                        for (auto [c, o, i] : nb) {
                            sig.push_back(c);
                            sig.push_back(o);
                            sig.push_back(i);
                        }
                        signatures[side * n + v] = std::move(sig);
                    }
                }
                for (auto & s : signatures)
                    ids.emplace(s, 0);
                int next = 0;
                for (auto & [k, v] : ids)
                    v = next++;
                vector<int> updated(2 * n);
                for (int i = 0; i < 2 * n; ++i)
                    updated[i] = ids[signatures[i]];
                bool stable = true;
                // Stable when the partition stops splitting.
                std::map<int, int> old_to_new;
                for (int i = 0; i < 2 * n; ++i) {
                    auto [it, inserted] = old_to_new.emplace(colour[i], updated[i]);
                    if (! inserted && it->second != updated[i])
                        stable = false;
                }
                colour = std::move(updated);
                if (stable)
                    break;
            }
            return {vector<int>(colour.begin(), colour.begin() + n), vector<int>(colour.begin() + n, colour.end())};
        }
    }

    auto isomorphism(const Digraph & a, const Digraph & b) -> optional<vector<int>>
    {
        if (a.num_vertices() > 64 || b.num_vertices() > 64)
            throw invalid_argument("isomorphism check is limited to 64 vertices");
        if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
            return std::nullopt;

        bool symmetric = a.undirected() && b.undirected();
        Multiplicity ma(a, symmetric), mb(b, symmetric);
        int n = a.num_vertices();
        if (n == 0)
            return vector<int>{};

        auto [ca, cb] = refine_colours(ma, mb);
        {
            auto sa = ca, sb = cb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return std::nullopt;
        }

        // Order a's vertices so that each one is as connected as possible to its predecessors.
        vector<int> order;
        vector<bool> placed(n, false);
        vector<int> links(n, 0), class_size(n, 0);
        for (int v = 0; v < n; ++v)
            ++class_size[ca[v]];
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best == -1 || links[v] > links[best] || (links[v] == links[best] && class_size[ca[v]] < class_size[ca[best]]))
                    best = v;
            }
            placed[best] = true;
            order.push_back(best);
            for (auto w : a.neighbours(best))
                ++links[w];
        }

        vector<int> map(n, -1);
        vector<bool> used(n, false);
        std::function<bool(int)> search = [&](int depth) -> bool {
            if (depth == n)
                return true;
            int v = order[depth];
            for (int x = 0; x < n; ++x) {
                if (used[x] || cb[x] != ca[v])
                    continue;
                bool ok = ma(v, v) == mb(x, x);
                for (int d = 0; ok && d < depth; ++d) {
                    int w = order[d], y = map[w];
                    ok = ma(v, w) == mb(x, y) && ma(w, v) == mb(y, x);
                }
                if (! ok)
                    continue;
                map[v] = x;
                used[x] = true;
                if (search(depth + 1))
                    return true;
                used[x] = false;
                map[v] = -1;
            }
            return false;
        };

        if (search(0))
            return map;
        return std::nullopt;
    }

    auto isomorphic(const Digraph & a, const Digraph & b) -> bool
    {
        return isomorphism(a, b).has_value();
    }

    auto induced_subgraph(const Digraph & g, span<const int> vertices) -> Digraph
    {
        vector<int> sorted(vertices.begin(), vertices.end());
        std::sort(sorted.begin(), sorted.end());
        vector<int> index(g.num_vertices(), -1);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            index[sorted[i]] = static_cast<int>(i);
        vector<Edge> edges;
        for (auto & e : g.edges())
            if (index[e.tail] != -1 && index[e.head] != -1)
                edges.push_back({index[e.tail], index[e.head]});
        return Digraph(static_cast<int>(sorted.size()), std::move(edges), g.undirected());
    }

    auto component_of(const Digraph & g, int v) -> Digraph
    {
        auto comps = components(g);
        vector<int> members;
        for (int w = 0; w < g.num_vertices(); ++w)
            if (comps.of[w] == comps.of[v])
                members.push_back(w);
        return induced_subgraph(g, members);
    }
}
