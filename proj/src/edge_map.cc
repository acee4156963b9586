#include <ttm/abelian.hh>
#include <ttm/edge_map.hh>
#include <ttm/graph_io.hh>

#include <sstream>
#include <stdexcept>

using std::int64_t;
using std::string;
using std::vector;

namespace ttm
{
    auto validate(const EdgeMap & f, const Digraph & g, const Digraph & h) -> void
    {
        if (static_cast<int>(f.image.size()) != g.num_edges())
            throw std::invalid_argument("edge map is not total on the source graph");
        for (auto e : f.image)
            if (e < 0 || e >= h.num_edges())
                throw std::invalid_argument("edge map image " + std::to_string(e) + " is not an edge of the target");
    }

    auto identity_map(const Digraph & g) -> EdgeMap
    {
        EdgeMap f;
        for (int i = 0; i < g.num_edges(); ++i)
            f.image.push_back(i);
        return f;
    }

    auto constant_map(const Digraph & g, int target_edge) -> EdgeMap
    {
        return EdgeMap{vector<int>(g.num_edges(), target_edge)};
    }

    auto compose(const EdgeMap & first, const EdgeMap & second) -> EdgeMap
    {
        EdgeMap result;
        for (auto e : first.image) {
            if (e < 0 || e >= static_cast<int>(second.image.size()))
                throw std::invalid_argument("edge maps do not compose");
            result.image.push_back(second.image[e]);
        }
        return result;
    }

    auto parse_edge_map(std::string_view text, int source_edges) -> EdgeMap
    {
        EdgeMap f;
        f.image.assign(source_edges, -1);
        std::istringstream in{string(text)};
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;
            std::istringstream fields(line);
            long long from, to;
            string arrow, rest;
            if (! (fields >> from >> arrow >> to) || arrow != "->" || (fields >> rest))
                throw ParseError(number, "expected '<gEdgeId> -> <hEdgeId>'");
            if (from < 0 || from >= source_edges)
                throw ParseError(number, "source edge id out of range");
            if (to < 0 || to > (1LL << 30))
                throw ParseError(number, "target edge id out of range");
            if (f.image[from] != -1)
                throw ParseError(number, "edge " + std::to_string(from) + " mapped twice");
            f.image[from] = static_cast<int>(to);
        }
        for (int i = 0; i < source_edges; ++i)
            if (f.image[i] == -1)
                throw ParseError(number, "edge " + std::to_string(i) + " is not mapped");
        return f;
    }

    auto format_edge_map(const EdgeMap & f) -> string
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < f.image.size(); ++i)
            out << i << " -> " << f.image[i] << '\n';
        return out.str();
    }

    auto DivisorSet::contains(int64_t n) const -> bool
    {
        switch (kind) {
        case Kind::all: return n >= 1;
        case Kind::finite: return n >= 1 && generator % n == 0;
        case Kind::empty: return false;
        }
        return false;
    }

    auto DivisorSet::members_up_to(int64_t bound) const -> vector<int64_t>
    {
        vector<int64_t> result;
        if (kind == Kind::finite) {
            for (auto d : divisors(generator))
                if (d <= bound)
                    result.push_back(d);
        }
        else if (kind == Kind::all)
            for (int64_t n = 1; n <= bound; ++n)
                result.push_back(n);
        return result;
    }

    auto DivisorSet::to_string() const -> string
    {
        switch (kind) {
        case Kind::all: return "N";
        case Kind::empty: return "{}";
        case Kind::finite: {
            string out = "{";
            bool first = true;
            for (auto d : divisors(generator)) {
                if (! first)
                    out += ",";
                first = false;
                out += std::to_string(d);
            }
            return out + "}";
        }
        }
        return "?";
    }
}
