#include <ttm/cayley.hh>
#include <ttm/tension.hh>
#include <ttm/tt.hh>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace ttm
{
    auto CayleyLift::connection(int cls) const -> vector<int64_t>
    {
        return {vectors.begin() + cls * dimension, vectors.begin() + (cls + 1) * dimension};
    }

    auto CayleyLift::size() const -> double
    {
        if (modulus == 0)
            return dimension == 0 ? 1.0 : INFINITY;
        return std::pow(static_cast<double>(modulus), dimension);
    }

    auto cayley_lift(const Digraph & h, int64_t modulus) -> CayleyLift
    {
        if (modulus == 1 || modulus < 0)
            throw std::invalid_argument("a Cayley lift needs Z or Z_n with n >= 2");
        require_orientation_free(h, Cyclic{modulus});

        CayleyLift lift;
        lift.modulus = modulus;
        auto comp = components(h);
        vector<bool> root_taken(comp.count, false);
        lift.coordinate.assign(h.num_vertices(), -1);
        for (int v = 0; v < h.num_vertices(); ++v) {
            if (! root_taken[comp.of[v]])
                root_taken[comp.of[v]] = true;
            else
                lift.coordinate[v] = lift.dimension++;
        }

        Cyclic group{modulus};
        std::map<vector<int64_t>, int> seen;
        lift.class_of.assign(h.num_edges(), -1);
        for (int id = 0; id < h.num_edges(); ++id) {
            vector<int64_t> c(lift.dimension, 0);
            auto & e = h.edge(id);
            if (lift.coordinate[e.head] != -1)
                c[lift.coordinate[e.head]] = group.normalise(1);
            if (lift.coordinate[e.tail] != -1)
                c[lift.coordinate[e.tail]] = group.normalise(-1);
            auto [it, fresh] = seen.emplace(c, static_cast<int>(lift.classes.size()));
            if (fresh) {
                lift.classes.emplace_back();
                lift.vectors.insert(lift.vectors.end(), c.begin(), c.end());
            }
            lift.classes[it->second].push_back(id);
            lift.class_of[id] = it->second;
        }
        return lift;
    }

    auto materialize(const CayleyLift & lift, int64_t max_vertices) -> MaterializedLift
    {
        if (lift.modulus < 2)
            throw std::invalid_argument("only finite lifts can be materialised");
        if (lift.size() > static_cast<double>(max_vertices))
            throw std::invalid_argument("Cayley lift has too many vertices to build explicitly");

        int64_t n = lift.modulus, count = static_cast<int64_t>(std::llround(lift.size()));
        int k = lift.dimension;
        vector<Edge> edges;
        vector<int> decoder;
        vector<int64_t> digits(k);
        for (int64_t x = 0; x < count; ++x) {
            for (int64_t r = x, i = 0; i < k; ++i, r /= n)
                digits[i] = r % n;
            for (int cls = 0; cls < static_cast<int>(lift.classes.size()); ++cls) {
                int64_t y = 0;
                for (int i = k - 1; i >= 0; --i)
                    y = y * n + (digits[i] + lift.vectors[cls * k + i]) % n;
                if (n == 2 && y < x)
                    continue;
                edges.push_back({static_cast<int>(x), static_cast<int>(y)});
                decoder.push_back(lift.decode(cls));
            }
        }
        MaterializedLift result{Digraph(static_cast<int>(count), std::move(edges), n == 2), std::move(decoder)};
        return result;
    }

    namespace
    {
        /// Z_2 potentials as bitmasks (at most 64 coordinates). Every unplaced vertex next to a
        /// placed one keeps the sorted list of potentials still possible for it, and these lists
        /// are kept arc consistent along the edges between such vertices. The smallest list is
        /// branched on first.
        class MaskLiftSearch
        {
        public:
            MaskLiftSearch(const Digraph & g, const CayleyLift & lift, uint64_t max_nodes) :
                _g(g), _values(g.num_vertices(), 0), _placed(g.num_vertices(), false),
                _constrained(g.num_vertices(), false), _domains(g.num_vertices()), _saved_at(g.num_vertices(), -1),
                _queued(g.num_vertices(), false), _max_nodes(max_nodes)
            {
                for (std::size_t c = 0; c < lift.classes.size(); ++c) {
                    uint64_t m = 0;
                    for (int i = 0; i < lift.dimension; ++i)
                        if (lift.vectors[c * lift.dimension + i])
                            m |= uint64_t{1} << i;
                    _connection.push_back(m);
                    _lookup.emplace(m, static_cast<int>(c));
                }
                _sorted_connection = _connection;
                std::sort(_sorted_connection.begin(), _sorted_connection.end());
            }

            std::function<bool(const vector<int> &)> leaf;
            uint64_t nodes = 0;
            bool out_of_budget = false;

            auto run() -> void { recurse(0); }

        private:
            struct Saved
            {
                int vertex;
                bool constrained;
                int saved_at;
                vector<uint64_t> domain;
            };

            auto is_connection(uint64_t x) const -> bool
            {
                return std::binary_search(_sorted_connection.begin(), _sorted_connection.end(), x);
            }

            auto recurse(int depth) -> bool
            {
                int n = _g.num_vertices();
                if (depth == n) {
                    vector<int> classes;
                    for (auto & e : _g.edges())
                        classes.push_back(_lookup.at(_values[e.tail] ^ _values[e.head]));
                    return leaf(classes);
                }

                int v = -1;
                for (int w = 0; w < n; ++w) {
                    if (_placed[w] || ! _constrained[w])
                        continue;
                    if (v == -1 || _domains[w].size() < _domains[v].size()
                        || (_domains[w].size() == _domains[v].size() && _g.degree(w) > _g.degree(v)))
                        v = w;
                }
                if (v == -1) {
                    // a fresh component: pin its first vertex to zero
                    for (v = 0; _placed[v]; ++v)
                        ;
                    return place(v, 0, depth);
                }

                auto candidates = _domains[v];
                for (auto x : candidates) {
                    if (_max_nodes && nodes >= _max_nodes) {
                        out_of_budget = true;
                        return true;
                    }
                    ++nodes;
                    if (place(v, x, depth))
                        return true;
                }
                return false;
            }

            auto save(int w, int depth, vector<Saved> & trail) -> void
            {
                if (_saved_at[w] == depth)
                    return;
                trail.push_back({w, _constrained[w], _saved_at[w], _domains[w]});
                _saved_at[w] = depth;
            }

            /// Drops values of w without support in x. Returns false on a wipe-out.
            auto revise(int w, int x, bool & changed) -> bool
            {
                auto & dw = _domains[w];
                auto & dx = _domains[x];
                std::size_t kept = 0;
                bool by_connection = _connection.size() < dx.size();
                for (auto y : dw) {
                    bool supported = false;
                    if (by_connection) {
                        for (auto c : _connection)
                            if (std::binary_search(dx.begin(), dx.end(), y ^ c)) {
                                supported = true;
                                break;
                            }
                    }
                    else
                        for (auto z : dx)
                            if (is_connection(y ^ z)) {
                                supported = true;
                                break;
                            }
                    if (supported)
                        dw[kept++] = y;
                }
                changed = kept != dw.size();
                dw.resize(kept);
                return kept > 0;
            }

            auto place(int v, uint64_t x, int depth) -> bool
            {
                _values[v] = x;
                _placed[v] = true;
                vector<Saved> trail;
                vector<int> queue;
                bool ok = true;
                for (auto id : _g.incident(v)) {
                    int w = _g.edge(id).other(v);
                    if (_placed[w])
                        continue;
                    save(w, depth, trail);
                    vector<uint64_t> next;
                    if (_constrained[w]) {
                        for (auto y : _domains[w])
                            if (is_connection(x ^ y))
                                next.push_back(y);
                    }
                    else {
                        for (auto c : _connection)
                            next.push_back(x ^ c);
                        std::sort(next.begin(), next.end());
                    }
                    _constrained[w] = true;
                    bool changed = next.size() != _domains[w].size();
                    _domains[w] = std::move(next);
                    if (_domains[w].empty()) {
                        ok = false;
                        break;
                    }
                    if (changed && ! _queued[w]) {
                        _queued[w] = true;
                        queue.push_back(w);
                    }
                }

                // Arc consistency among unplaced constrained vertices.
                while (ok && ! queue.empty()) {
                    int x_vertex = queue.back();
                    queue.pop_back();
                    _queued[x_vertex] = false;
                    for (auto id : _g.incident(x_vertex)) {
                        int w = _g.edge(id).other(x_vertex);
                        if (_placed[w] || ! _constrained[w])
                            continue;
                        save(w, depth, trail);
                        bool changed = false;
                        if (! revise(w, x_vertex, changed)) {
                            ok = false;
                            break;
                        }
                        if (changed && ! _queued[w]) {
                            _queued[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
                for (auto w : queue)
                    _queued[w] = false;

                bool stop = ok && recurse(depth + 1);
                for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
                    _constrained[it->vertex] = it->constrained;
                    _saved_at[it->vertex] = it->saved_at;
                    _domains[it->vertex] = std::move(it->domain);
                }
                _placed[v] = false;
                return stop;
            }

            const Digraph & _g;
            vector<uint64_t> _values;
            vector<bool> _placed, _constrained;
            vector<vector<uint64_t>> _domains;
            vector<int> _saved_at;
            vector<bool> _queued;
            vector<uint64_t> _connection, _sorted_connection;
            std::unordered_map<uint64_t, int> _lookup;
            uint64_t _max_nodes;
        };

        struct VectorHash
        {
            auto operator()(const vector<int64_t> & v) const -> std::size_t
            {
                std::size_t h = 0x9e3779b97f4a7c15ull;
                for (auto x : v)
                    h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
                return h;
            }
        };

        /// Potentials as digit vectors over Z_n, or integer vectors over Z.
        class VectorSpace
        {
        public:
            VectorSpace(const CayleyLift & lift, int vertices) :
                _lift(lift), _group{lift.modulus}, _k(lift.dimension), _values(static_cast<std::size_t>(vertices) * _k, 0), _scratch(_k)
            {
                for (std::size_t c = 0; c < lift.classes.size(); ++c)
                    _lookup.emplace(lift.connection(static_cast<int>(c)), static_cast<int>(c));
            }

            auto set_zero(int v) -> void { std::fill_n(_values.begin() + v * _k, _k, 0); }
            auto set_from(int v, int u, int cls, int sign) -> void
            {
                for (int i = 0; i < _k; ++i)
                    _values[v * _k + i] = _group.normalise(checked_add(_values[u * _k + i], sign * _lift.vectors[cls * _k + i]));
            }
            auto lookup(int tail, int head) -> int
            {
                for (int i = 0; i < _k; ++i)
                    _scratch[i] = _group.normalise(_values[head * _k + i] - _values[tail * _k + i]);
                auto it = _lookup.find(_scratch);
                return it == _lookup.end() ? -1 : it->second;
            }

        private:
            const CayleyLift & _lift;
            Cyclic _group;
            int _k;
            vector<int64_t> _values;
            vector<int64_t> _scratch;
            std::unordered_map<vector<int64_t>, int, VectorHash> _lookup;
        };

        struct Step
        {
            int vertex;
            int parent = -1;       // -1 for a pinned root
            int anchor = -1;       // edge to parent
            int sign = 1;          // +1 when the anchor points away from the parent
            vector<int> back;      // other edges to earlier vertices
        };

        /// Vertices in an order where each new vertex has the most already-placed neighbours.
        auto plan_steps(const Digraph & g) -> vector<Step>
        {
            int n = g.num_vertices();
            vector<int> position(n, -1), placed_neighbours(n, 0);
            vector<Step> steps;
            for (int i = 0; i < n; ++i) {
                int best = -1;
                for (int v = 0; v < n; ++v)
                    if (position[v] == -1 && placed_neighbours[v] > 0
                        && (best == -1 || placed_neighbours[v] > placed_neighbours[best]
                            || (placed_neighbours[v] == placed_neighbours[best] && g.degree(v) > g.degree(best))))
                        best = v;
                if (best == -1)
                    for (int v = 0; v < n && best == -1; ++v)
                        if (position[v] == -1)
                            best = v;

                Step step;
                step.vertex = best;
                for (auto id : g.incident(best)) {
                    int w = g.edge(id).other(best);
                    if (position[w] == -1)
                        continue;
                    if (step.anchor == -1 || position[w] < position[step.parent]) {
                        if (step.anchor != -1)
                            step.back.push_back(step.anchor);
                        step.anchor = id;
                        step.parent = w;
                    }
                    else
                        step.back.push_back(id);
                }
                if (step.anchor != -1)
                    step.sign = g.edge(step.anchor).tail == step.parent ? 1 : -1;
                position[best] = i;
                for (auto w : g.neighbours(best))
                    ++placed_neighbours[w];
                steps.push_back(std::move(step));
            }
            return steps;
        }

        template <typename Space>
        class LiftSearch
        {
        public:
            LiftSearch(const Digraph & g, const CayleyLift & lift, uint64_t max_nodes) :
                _g(g), _lift(lift), _space(lift, g.num_vertices()), _steps(plan_steps(g)), _edge_class(g.num_edges(), -1),
                _max_nodes(max_nodes)
            {
            }

            // Called with the class of every G edge; returns true to stop.
            std::function<bool(const vector<int> &)> leaf;
            uint64_t nodes = 0;
            bool out_of_budget = false;

            auto run(std::size_t i) -> bool
            {
                if (i == _steps.size())
                    return leaf(_edge_class);
                auto & step = _steps[i];
                if (step.parent == -1) {
                    _space.set_zero(step.vertex);
                    return run(i + 1);
                }
                int classes = static_cast<int>(_lift.classes.size());
                for (int cls = 0; cls < classes; ++cls) {
                    if (_max_nodes && ++nodes > _max_nodes) {
                        out_of_budget = true;
                        return true;
                    }
                    if (! _max_nodes)
                        ++nodes;
                    _space.set_from(step.vertex, step.parent, cls, step.sign);
                    _edge_class[step.anchor] = cls;
                    bool ok = true;
                    for (auto id : step.back) {
                        auto & e = _g.edge(id);
                        int c = _space.lookup(e.tail, e.head);
                        if (c == -1) {
                            ok = false;
                            break;
                        }
                        _edge_class[id] = c;
                    }
                    if (ok && run(i + 1))
                        return true;
                }
                return false;
            }

        private:
            const Digraph & _g;
            const CayleyLift & _lift;
            Space _space;
            vector<Step> _steps;
            vector<int> _edge_class;
            uint64_t _max_nodes;
        };

        /// Runs the lift search with the fastest potential representation available.
        auto run_lift(const Digraph & g, const CayleyLift & lift, uint64_t max_nodes,
            const std::function<bool(const vector<int> &)> & leaf) -> std::pair<uint64_t, bool>
        {
            if (lift.modulus == 2 && lift.dimension <= 64) {
                MaskLiftSearch search(g, lift, max_nodes);
                search.leaf = leaf;
                search.run();
                return {search.nodes, search.out_of_budget};
            }
            LiftSearch<VectorSpace> search(g, lift, max_nodes);
            search.leaf = leaf;
            search.run(0);
            return {search.nodes, search.out_of_budget};
        }

        /// Calls visit on every map E(G) -> E(H); for the trivial group.
        auto enumerate_all_maps(const Digraph & g, const Digraph & h, const std::function<bool(const EdgeMap &)> & visit,
            EnumerationResult & result, uint64_t max_nodes) -> void
        {
            EdgeMap f{vector<int>(g.num_edges(), 0)};
            while (true) {
                if (++result.nodes > max_nodes && max_nodes) {
                    result.complete = false;
                    return;
                }
                ++result.visited;
                if (! visit(f)) {
                    result.complete = false;
                    return;
                }
                int i = 0;
                while (i < g.num_edges() && ++f.image[i] == h.num_edges())
                    f.image[i++] = 0;
                if (i == g.num_edges())
                    return;
            }
        }
    }

    auto tt_exists_via_hom(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits) -> TtSearchResult
    {
        require_orientation_free(g, group);
        require_orientation_free(h, group);
        TtSearchResult result;
        if (g.num_edges() == 0) {
            result.status = SearchStatus::found;
            result.witness = EdgeMap{};
            return result;
        }
        if (h.num_edges() == 0) {
            result.status = SearchStatus::none;
            return result;
        }
        if (group.modulus == 1) {
            result.status = SearchStatus::found;
            result.witness = constant_map(g, 0);
            return result;
        }

        auto lift = cayley_lift(h, group.modulus);
        optional<EdgeMap> witness;
        auto [nodes, out_of_budget] = run_lift(g, lift, limits.max_nodes, [&](const vector<int> & classes) {
            EdgeMap f;
            for (auto c : classes)
                f.image.push_back(lift.decode(c));
            witness = std::move(f);
            return true;
        });
        result.nodes = nodes;
        if (witness) {
            if (! is_tt(*witness, g, h, group))
                throw std::logic_error("decoded lift homomorphism is not TT");
            result.status = SearchStatus::found;
            result.witness = witness;
        }
        else
            result.status = out_of_budget ? SearchStatus::unknown : SearchStatus::none;
        return result;
    }

    auto enumerate_tt_lift(const Digraph & g, const Digraph & h, const Cyclic & group,
        const std::function<bool(const EdgeMap &)> & visit, const SearchLimits & limits) -> EnumerationResult
    {
        require_orientation_free(g, group);
        require_orientation_free(h, group);
        EnumerationResult result;
        if (h.num_edges() == 0 && g.num_edges() > 0)
            return result;
        if (group.modulus == 1 || g.num_edges() == 0) {
            enumerate_all_maps(g, h, visit, result, limits.max_nodes);
            return result;
        }

        auto lift = cayley_lift(h, group.modulus);
        bool stopped = false;
        auto [nodes, out_of_budget] = run_lift(g, lift, limits.max_nodes, [&](const vector<int> & classes) {
            // Expand the choice of edge inside each class, odometer style.
            vector<std::size_t> pick(classes.size(), 0);
            EdgeMap f;
            for (auto c : classes)
                f.image.push_back(lift.classes[c][0]);
            while (true) {
                ++result.visited;
                if (! visit(f)) {
                    stopped = true;
                    return true;
                }
                std::size_t i = 0;
                for (; i < classes.size(); ++i) {
                    auto & members = lift.classes[classes[i]];
                    if (++pick[i] < members.size()) {
                        f.image[i] = members[pick[i]];
                        break;
                    }
                    pick[i] = 0;
                    f.image[i] = members[0];
                }
                if (i == classes.size())
                    return false;
            }
        });
        result.nodes = nodes;
        result.complete = ! out_of_budget && ! stopped;
        return result;
    }

    auto to_string(Relation r) -> std::string
    {
        switch (r) {
        case Relation::equivalent: return "equivalent";
        case Relation::g_below: return "G-below";
        case Relation::h_below: return "H-below";
        case Relation::incomparable: return "incomparable";
        case Relation::unknown: return "unknown";
        }
        return "?";
    }

    auto compare(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits) -> Comparison
    {
        Comparison result;
        result.forward = tt_exists_via_hom(g, h, group, limits);
        result.backward = tt_exists_via_hom(h, g, group, limits);
        auto f = result.forward.status, b = result.backward.status;
        if (f == SearchStatus::unknown || b == SearchStatus::unknown)
            result.relation = Relation::unknown;
        else if (f == SearchStatus::found)
            result.relation = b == SearchStatus::found ? Relation::equivalent : Relation::g_below;
        else
            result.relation = b == SearchStatus::found ? Relation::h_below : Relation::incomparable;
        return result;
    }

    auto is_tt_rigid(const Digraph & g, const Cyclic & group, const SearchLimits & limits) -> optional<bool>
    {
        auto identity = identity_map(g);
        bool other = false;
        auto outcome = enumerate_tt_lift(g, g, group, [&](const EdgeMap & f) {
            if (f != identity)
                other = true;
            return ! other;
        }, limits);
        if (other)
            return false;
        if (! outcome.complete)
            return std::nullopt;
        return true;
    }
}
