#include <ttm/graph_io.hh>
#include <ttm/tension.hh>

#include <sstream>
#include <stdexcept>

using std::int64_t;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace ttm
{
    auto checked_add(int64_t a, int64_t b) -> int64_t
    {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("integer overflow in edge-function arithmetic");
        return r;
    }

    auto checked_mul(int64_t a, int64_t b) -> int64_t
    {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("integer overflow in edge-function arithmetic");
        return r;
    }

    auto require_orientation_free(const Digraph & g, const Cyclic & group) -> void
    {
        if (g.undirected() && group.modulus != 1 && group.modulus != 2)
            throw std::invalid_argument("graph '" + g.name() + "' is undirected; orientation matters over " + group.to_string());
    }

    namespace
    {
        auto require_total(const Digraph & g, const EdgeFunction & f) -> void
        {
            if (static_cast<int>(f.values.size()) != g.num_edges())
                throw std::invalid_argument("edge function is not total on the graph");
        }
    }

    auto is_tension(const Digraph & g, const EdgeFunction & tau, const Cyclic & group) -> bool
    {
        require_total(g, tau);
        require_orientation_free(g, group);
        auto forest = spanning_forest(g);
        for (auto & c : fundamental_circuits(g, forest)) {
            int64_t sum = 0;
            for (auto [id, sign] : c.edges)
                sum = checked_add(sum, sign > 0 ? tau.values[id] : -tau.values[id]);
            if (! group.is_zero(sum))
                return false;
        }
        return true;
    }

    auto is_flow(const Digraph & g, const EdgeFunction & phi, const Cyclic & group) -> bool
    {
        require_total(g, phi);
        require_orientation_free(g, group);
        vector<int64_t> net(g.num_vertices(), 0);
        for (int id = 0; id < g.num_edges(); ++id) {
            auto & e = g.edge(id);
            net[e.head] = checked_add(net[e.head], phi.values[id]);
            net[e.tail] = checked_add(net[e.tail], -phi.values[id]);
        }
        for (auto x : net)
            if (! group.is_zero(x))
                return false;
        return true;
    }

    auto potential_tension(const Digraph & g, span<const int64_t> potential, const Cyclic & group) -> EdgeFunction
    {
        if (static_cast<int>(potential.size()) != g.num_vertices())
            throw std::invalid_argument("potential is not total on the vertices");
        EdgeFunction result;
        for (auto & e : g.edges())
            result.values.push_back(group.normalise(checked_add(potential[e.head], -potential[e.tail])));
        return result;
    }

    auto elementary_tension(const Digraph & g, const vector<bool> & side, int64_t a, const Cyclic & group) -> EdgeFunction
    {
        if (static_cast<int>(side.size()) != g.num_vertices())
            throw std::invalid_argument("cut side is not a vertex subset of the graph");
        EdgeFunction result;
        result.values.assign(g.num_edges(), 0);
        for (auto [id, sign] : Cut{side}.edges(g))
            result.values[id] = group.normalise(sign > 0 ? a : -a);
        return result;
    }

    auto flow_basis(const Digraph & g) -> vector<EdgeFunction>
    {
        vector<EdgeFunction> result;
        for (auto & c : fundamental_circuits(g, spanning_forest(g))) {
            EdgeFunction phi;
            phi.values.assign(g.num_edges(), 0);
            for (auto [id, sign] : c.edges)
                phi.values[id] = sign;
            result.push_back(std::move(phi));
        }
        return result;
    }

    auto integrate_tension(const Digraph & g, const EdgeFunction & tau, const Cyclic & group) -> optional<vector<int64_t>>
    {
        require_total(g, tau);
        auto forest = spanning_forest(g);
        vector<int64_t> p(g.num_vertices(), 0);
        for (auto v : forest.order) {
            if (forest.parent[v] == -1)
                continue;
            auto & e = g.edge(forest.parent_edge[v]);
            auto value = tau.values[forest.parent_edge[v]];
            // p(head) - p(tail) = tau(e)
            p[v] = group.normalise(e.head == v ? checked_add(p[forest.parent[v]], value) : checked_add(p[forest.parent[v]], -value));
        }
        auto check = potential_tension(g, p, group);
        for (int id = 0; id < g.num_edges(); ++id)
            if (! group.is_zero(check.values[id] - tau.values[id]))
                return std::nullopt;
        return p;
    }

    auto parse_edge_function(std::string_view text, int edges) -> EdgeFunction
    {
        EdgeFunction result;
        result.values.assign(edges, 0);
        vector<bool> seen(edges, false);
        std::istringstream in{string(text)};
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;
            std::istringstream fields(line);
            long long id, value;
            string rest;
            if (! (fields >> id >> value) || (fields >> rest))
                throw ParseError(number, "expected '<edgeId> <value>'");
            if (id < 0 || id >= edges)
                throw ParseError(number, "edge id out of range");
            if (seen[id])
                throw ParseError(number, "edge " + std::to_string(id) + " given twice");
            seen[id] = true;
            result.values[id] = value;
        }
        for (int id = 0; id < edges; ++id)
            if (! seen[id])
                throw ParseError(number, "no value for edge " + std::to_string(id));
        return result;
    }

    auto format_edge_function(const EdgeFunction & f) -> string
    {
        std::ostringstream out;
        for (std::size_t id = 0; id < f.values.size(); ++id)
            out << id << ' ' << f.values[id] << '\n';
        return out.str();
    }
}
