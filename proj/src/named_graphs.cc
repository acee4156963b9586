#include <ttm/named_graphs.hh>

#include <cctype>
#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace ttm
{
    auto complete_graph(int n) -> Digraph
    {
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.push_back({i, j});
        return Digraph(n, std::move(edges), true, "k_" + std::to_string(n));
    }

    auto cycle_graph(int n) -> Digraph
    {
        if (n < 3)
            throw std::invalid_argument("undirected cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return Digraph(n, std::move(edges), true, "c_" + std::to_string(n));
    }

    auto directed_cycle(int n) -> Digraph
    {
        if (n < 2)
            throw std::invalid_argument("directed cycle needs at least 2 vertices");
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return Digraph(n, std::move(edges), false, "dc_" + std::to_string(n));
    }

    auto path_graph(int edges_count) -> Digraph
    {
        vector<Edge> edges;
        for (int i = 0; i < edges_count; ++i)
            edges.push_back({i, i + 1});
        return Digraph(edges_count + 1, std::move(edges), true, "p_" + std::to_string(edges_count));
    }

    auto hypercube(int n) -> Digraph
    {
        vector<Edge> edges;
        for (int x = 0; x < (1 << n); ++x)
            for (int b = 0; b < n; ++b)
                if (! (x & (1 << b)))
                    edges.push_back({x, x | (1 << b)});
        return Digraph(1 << n, std::move(edges), true, "q_" + std::to_string(n));
    }

    auto petersen_graph() -> Digraph
    {
        vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({i + 5, (i + 2) % 5 + 5});
        }
        return Digraph(10, std::move(edges), true, "petersen");
    }

    auto clebsch_graph() -> Digraph
    {
        vector<Edge> edges;
        for (int x = 0; x < 16; ++x)
            for (int d : {1, 2, 4, 8, 15})
                if (x < (x ^ d))
                    edges.push_back({x, x ^ d});
        return Digraph(16, std::move(edges), true, "clebsch");
    }

    auto grotzsch_graph() -> Digraph
    {
        vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({(i + 4) % 5, 5 + i});
            edges.push_back({(i + 1) % 5, 5 + i});
            edges.push_back({5 + i, 10});
        }
        return Digraph(11, std::move(edges), true, "grotzsch");
    }

    auto dodecahedron_graph() -> Digraph
    {
        vector<Edge> edges;
        for (int i = 0; i < 10; ++i) {
            edges.push_back({i, (i + 1) % 10});
            edges.push_back({i, i + 10});
            edges.push_back({i + 10, (i + 2) % 10 + 10});
        }
        return Digraph(20, std::move(edges), true, "dodecahedron");
    }

    auto named_graph(const string & raw) -> optional<Digraph>
    {
        string name;
        for (char c : raw)
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

        if (name == "petersen")
            return petersen_graph();
        if (name == "clebsch")
            return clebsch_graph();
        if (name == "grotzsch" || name == "groetzsch")
            return grotzsch_graph();
        if (name == "dodecahedron")
            return dodecahedron_graph();

        auto underscore = name.find('_');
        if (underscore == string::npos)
            return std::nullopt;
        string family = name.substr(0, underscore), arg = name.substr(underscore + 1);
        if (arg.empty() || arg.find_first_not_of("0123456789") != string::npos || arg.size() > 4)
            return std::nullopt;
        int n = std::stoi(arg);

        if (family == "k" && n >= 1)
            return complete_graph(n);
        if (family == "c" && n >= 3)
            return cycle_graph(n);
        if (family == "dc" && n >= 2)
            return directed_cycle(n);
        if (family == "p" && n >= 0)
            return path_graph(n);
        if (family == "q" && n >= 0 && n <= 12)
            return hypercube(n);
        if (family == "dk" && n == 2)
            return Digraph(2, {{0, 1}}, false, "dk_2");
        return std::nullopt;
    }

    auto shipped_graph_names() -> vector<string>
    {
        return {"petersen", "clebsch", "grotzsch", "dodecahedron", "k_2", "k_3", "k_4", "k_5", "k_6", "c_5",
            "dc_7", "dc_9", "dk_2", "q_3", "q_4"};
    }
}
