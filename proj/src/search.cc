#include <ttm/search.hh>
#include <ttm/tension.hh>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace ttm
{
    auto to_string(SearchStatus s) -> std::string
    {
        switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::unknown: return "unknown";
        }
        return "?";
    }

    namespace
    {
        struct Membership
        {
            int circuit;
            int sign;
        };

        /// Static plan shared by every search over the same (G, H) pair.
        struct Plan
        {
            vector<int> order;                       // search position -> G edge
            vector<vector<Membership>> memberships;  // G edge -> circuits containing it
            vector<int> circuit_length;
            int circuits = 0;
            int constrained = 0; // positions [0, constrained) lie on some circuit

            explicit Plan(const Digraph & g)
            {
                auto cs = fundamental_circuits(g, spanning_forest(g));
                circuits = static_cast<int>(cs.size());
                memberships.resize(g.num_edges());
                for (int c = 0; c < circuits; ++c) {
                    circuit_length.push_back(cs[c].length());
                    for (auto [id, sign] : cs[c].edges)
                        memberships[id].push_back({c, sign});
                }

                vector<bool> placed(g.num_edges(), false);
                vector<int> unplaced(circuits);
                for (int c = 0; c < circuits; ++c)
                    unplaced[c] = circuit_length[c];
                while (true) {
                    int best = -1;
                    for (int c = 0; c < circuits; ++c)
                        if (unplaced[c] > 0 && (best == -1 || unplaced[c] < unplaced[best]))
                            best = c;
                    if (best == -1)
                        break;
                    vector<int> edges;
                    for (auto [id, sign] : cs[best].edges)
                        if (! placed[id])
                            edges.push_back(id);
                    std::sort(edges.begin(), edges.end());
                    for (auto id : edges) {
                        placed[id] = true;
                        order.push_back(id);
                        for (auto m : memberships[id])
                            --unplaced[m.circuit];
                    }
                }
                constrained = static_cast<int>(order.size());
                for (int id = 0; id < g.num_edges(); ++id)
                    if (! placed[id])
                        order.push_back(id);
            }
        };

        enum class Mode
        {
            find,
            enumerate,
            gcd_union
        };

        class DirectSearch
        {
        public:
            DirectSearch(const Digraph & g, const Digraph & h, const Plan & plan, Cyclic group, Mode mode,
                std::atomic<uint64_t> & nodes, uint64_t max_nodes) :
                _g(g), _h(h), _plan(plan), _group(group), _mode(mode), _nodes(nodes), _max_nodes(max_nodes),
                _defect(static_cast<std::size_t>(plan.circuits) * h.num_vertices(), 0),
                _l1(plan.circuits, 0), _remaining(plan.circuit_length), _image(g.num_edges(), -1)
            {
            }

            std::function<bool(const EdgeMap &)> visit;
            std::function<bool(int64_t)> covered; // gcd_union: subtree with this gcd adds nothing new
            std::function<void(int64_t)> record;
            int first_value = -1; // when set, position 0 only tries this target
            bool out_of_budget = false;
            bool stopped = false;

            /// Returns true when the search should stop (witness found in find mode, or aborted).
            auto run(int position, int64_t gcd_so_far) -> bool
            {
                if (position == static_cast<int>(_plan.order.size())) {
                    if (_mode == Mode::gcd_union) {
                        record(gcd_so_far);
                        return false;
                    }
                    EdgeMap f{_image};
                    if (! visit(f)) {
                        stopped = true;
                        return true;
                    }
                    return _mode == Mode::find;
                }

                int edge = _plan.order[position];
                bool free_edge = position >= _plan.constrained;
                int choices = (free_edge && _mode != Mode::enumerate) ? 1 : _h.num_edges();

                int start = 0;
                if (position == 0 && first_value >= 0) {
                    start = first_value;
                    choices = first_value + 1;
                }
                for (int target = start; target < choices; ++target) {
                    if (++_nodes > _max_nodes && _max_nodes) {
                        out_of_budget = true;
                        return true;
                    }

                    _image[edge] = target;
                    bool ok = true;
                    int64_t gcd_next = gcd_so_far;
                    apply(edge, target, +1);
                    for (auto m : _plan.memberships[edge]) {
                        if (_mode == Mode::gcd_union) {
                            if (_remaining[m.circuit] == 0)
                                for (int v = 0; v < _h.num_vertices(); ++v) {
                                    auto x = _defect[m.circuit * _h.num_vertices() + v];
                                    gcd_next = std::gcd(gcd_next, x < 0 ? -x : x);
                                }
                        }
                        else if (_l1[m.circuit] > 2 * static_cast<int64_t>(_remaining[m.circuit]))
                            ok = false;
                    }
                    if (ok && _mode == Mode::gcd_union && gcd_next != 0 && covered(gcd_next))
                        ok = false;
                    bool stop = ok && run(position + 1, gcd_next);
                    apply(edge, target, -1);
                    _image[edge] = -1;
                    if (stop)
                        return true;
                }
                return false;
            }

            auto image() const -> const vector<int> & { return _image; }

        private:
            auto bump(int c, int v, int64_t delta) -> void
            {
                auto & x = _defect[c * _h.num_vertices() + v];
                _l1[c] -= _group.norm(x);
                x += delta;
                _l1[c] += _group.norm(x);
            }

            auto apply(int edge, int target, int direction) -> void
            {
                auto & t = _h.edge(target);
                for (auto m : _plan.memberships[edge]) {
                    bump(m.circuit, t.head, direction * m.sign);
                    bump(m.circuit, t.tail, -direction * m.sign);
                    _remaining[m.circuit] -= direction;
                }
            }

            const Digraph & _g;
            const Digraph & _h;
            const Plan & _plan;
            Cyclic _group;
            Mode _mode;
            std::atomic<uint64_t> & _nodes;
            uint64_t _max_nodes;
            vector<int64_t> _defect;
            vector<int64_t> _l1;
            vector<int> _remaining;
            vector<int> _image;
        };

        auto check_inputs(const Digraph & g, const Digraph & h, const Cyclic & group) -> void
        {
            require_orientation_free(g, group);
            require_orientation_free(h, group);
        }
    }

    auto find_tt(const Digraph & g, const Digraph & h, const Cyclic & group, const SearchLimits & limits) -> TtSearchResult
    {
        check_inputs(g, h, group);
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

        Plan plan(g);
        std::atomic<uint64_t> nodes{0};
        int threads = std::max(1, limits.threads);

        if (threads == 1 || plan.constrained == 0) {
            DirectSearch search(g, h, plan, group, Mode::find, nodes, limits.max_nodes);
            optional<EdgeMap> witness;
            search.visit = [&](const EdgeMap & f) {
                witness = f;
                return true;
            };
            search.run(0, 0);
            result.nodes = nodes.load();
            result.witness = witness;
            result.status = witness ? SearchStatus::found : search.out_of_budget ? SearchStatus::unknown : SearchStatus::none;
            return result;
        }

        // Fan out over the image of the first edge; the lowest branch with a witness wins.
        int branches = h.num_edges();
        vector<optional<EdgeMap>> witnesses(branches);
        vector<char> budget_hit(branches, 0);
        std::atomic<int> next_branch{0}, best_branch{branches};
        std::mutex lock;

        auto worker = [&] {
            while (true) {
                int b = next_branch.fetch_add(1);
                if (b >= branches || b > best_branch.load())
                    return;
                DirectSearch search(g, h, plan, group, Mode::find, nodes, limits.max_nodes);
                optional<EdgeMap> witness;
                search.visit = [&](const EdgeMap & f) {
                    witness = f;
                    return true;
                };
                search.first_value = b;
                search.run(0, 0);
                std::lock_guard guard(lock);
                witnesses[b] = witness;
                budget_hit[b] = search.out_of_budget;
                if (witness) {
                    int current = best_branch.load();
                    while (b < current && ! best_branch.compare_exchange_weak(current, b))
                        ;
                }
            }
        };
        vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();

        result.nodes = nodes.load();
        for (int b = 0; b < branches; ++b)
            if (witnesses[b]) {
                result.status = SearchStatus::found;
                result.witness = witnesses[b];
                return result;
            }
        result.status = std::any_of(budget_hit.begin(), budget_hit.end(), [](char c) { return c != 0; }) ? SearchStatus::unknown
                                                                                                          : SearchStatus::none;
        return result;
    }

    auto enumerate_tt_direct(const Digraph & g, const Digraph & h, const Cyclic & group,
        const std::function<bool(const EdgeMap &)> & visit, const SearchLimits & limits) -> EnumerationResult
    {
        check_inputs(g, h, group);
        EnumerationResult result;
        if (g.num_edges() == 0) {
            result.visited = 1;
            visit(EdgeMap{});
            return result;
        }
        if (h.num_edges() == 0)
            return result;

        Plan plan(g);
        std::atomic<uint64_t> nodes{0};
        DirectSearch search(g, h, plan, group, Mode::enumerate, nodes, limits.max_nodes);
        search.visit = [&](const EdgeMap & f) {
            ++result.visited;
            return visit(f);
        };
        search.run(0, 0);
        result.nodes = nodes.load();
        result.complete = ! search.out_of_budget && ! search.stopped;
        return result;
    }

    auto DivisorDownSet::contains(int64_t n) const -> bool
    {
        if (n < 1)
            return false;
        if (all)
            return true;
        return std::any_of(generators.begin(), generators.end(), [&](int64_t g) { return g % n == 0; });
    }

    auto DivisorDownSet::add(int64_t generator) -> void
    {
        if (all)
            return;
        if (generator == 0) {
            all = true;
            generators.clear();
            return;
        }
        if (contains(generator))
            return;
        std::erase_if(generators, [&](int64_t g) { return generator % g == 0; });
        generators.push_back(generator);
        std::sort(generators.begin(), generators.end());
    }

    auto DivisorDownSet::members_up_to(int64_t bound) const -> vector<int64_t>
    {
        vector<int64_t> result;
        for (int64_t n = 1; n <= bound; ++n)
            if (contains(n))
                result.push_back(n);
        return result;
    }

    auto DivisorDownSet::to_string() const -> std::string
    {
        if (all)
            return "N";
        std::ostringstream out;
        out << "divisors of {";
        for (std::size_t i = 0; i < generators.size(); ++i)
            out << (i ? "," : "") << generators[i];
        out << "}";
        return out.str();
    }

    auto tt_set(const Digraph & g, const Digraph & h, double max_maps) -> TtSetResult
    {
        check_inputs(g, h, Cyclic{0});
        TtSetResult result;
        if (g.num_edges() == 0) {
            result.status = SearchStatus::found;
            result.set.add(0);
            return result;
        }
        if (h.num_edges() == 0) {
            result.status = SearchStatus::found;
            return result;
        }
        if (std::pow(static_cast<double>(h.num_edges()), g.num_edges()) > max_maps)
            return result;

        Plan plan(g);
        std::atomic<uint64_t> nodes{0};
        DirectSearch search(g, h, plan, Cyclic{0}, Mode::gcd_union, nodes, 0);
        search.covered = [&](int64_t d) { return result.set.contains(d); };
        search.record = [&](int64_t d) { result.set.add(d); };
        search.run(0, 0);
        result.status = SearchStatus::found;
        return result;
    }
}
