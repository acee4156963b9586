#include <ttm/graph_io.hh>

#include <fstream>
#include <sstream>
#include <vector>

using std::string;
using std::string_view;
using std::vector;

namespace ttm
{
    ParseError::ParseError(int line, const string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    namespace
    {
        struct Line
        {
            int number;
            string text;
        };

        auto meaningful_lines(string_view text) -> vector<Line>
        {
            vector<Line> result;
            std::istringstream in{string(text)};
            string line;
            int number = 0;
            while (std::getline(in, line)) {
                ++number;
                auto first = line.find_first_not_of(" \t\r");
                if (first == string::npos || line[first] == '#')
                    continue;
                auto last = line.find_last_not_of(" \t\r");
                result.push_back({number, line.substr(first, last - first + 1)});
            }
            return result;
        }

        auto split(const string & s) -> vector<string>
        {
            std::istringstream in(s);
            vector<string> result;
            string token;
            while (in >> token)
                result.push_back(token);
            return result;
        }

        auto to_int(const string & token, int line, const char * what) -> int
        {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            }
            catch (const std::exception &) {
                throw ParseError(line, string("expected integer ") + what + ", got '" + token + "'");
            }
            if (used != token.size() || v < 0 || v > (1LL << 30))
                throw ParseError(line, string("bad ") + what + " '" + token + "'");
            return static_cast<int>(v);
        }
    }

    auto parse_edge_list(string_view text, string name) -> Digraph
    {
        auto lines = meaningful_lines(text);
        if (lines.empty())
            throw ParseError(0, "empty graph file");

        auto header = split(lines[0].text);
        if (header.size() != 3 || (header[2] != "directed" && header[2] != "undirected"))
            throw ParseError(lines[0].number, "malformed header, expected '<n> <m> directed|undirected'");
        int n = to_int(header[0], lines[0].number, "vertex count");
        int m = to_int(header[1], lines[0].number, "edge count");
        bool undirected = header[2] == "undirected";

        if (static_cast<int>(lines.size()) - 1 < m)
            throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edges, found "
                    + std::to_string(lines.size() - 1));

        vector<Edge> edges;
        for (int i = 1; i <= m; ++i) {
            auto tokens = split(lines[i].text);
            if (tokens.size() != 2)
                throw ParseError(lines[i].number, "expected '<tail> <head>'");
            int t = to_int(tokens[0], lines[i].number, "vertex"), h = to_int(tokens[1], lines[i].number, "vertex");
            if (t >= n || h >= n)
                throw ParseError(lines[i].number, "vertex out of range 0.." + std::to_string(n - 1));
            if (t == h)
                throw ParseError(lines[i].number, "loop at vertex " + std::to_string(t));
            edges.push_back({t, h});
        }
        if (static_cast<int>(lines.size()) - 1 > m)
            throw ParseError(lines[m + 1].number, "trailing content after " + std::to_string(m) + " edges");

        return Digraph(n, std::move(edges), undirected, std::move(name));
    }

    auto parse_graph6(string_view text, string name) -> Digraph
    {
        auto lines = meaningful_lines(text);
        if (lines.empty())
            throw ParseError(0, "empty graph6 input");
        string s = lines[0].text;
        int line = lines[0].number;
        const string header = ">>graph6<<";
        if (s.rfind(header, 0) == 0)
            s = s.substr(header.size());

        std::size_t pos = 0;
        auto next = [&]() -> int {
            if (pos >= s.size())
                throw ParseError(line, "truncated graph6 string");
            int c = static_cast<unsigned char>(s[pos++]);
            if (c < 63 || c > 126)
                throw ParseError(line, "invalid graph6 character");
            return c - 63;
        };

        long long n = next();
        if (n == 63) {
            n = 0;
            int first = next();
            if (first == 63) {
                for (int i = 0; i < 6; ++i)
                    n = (n << 6) | next();
            }
            else {
                n = first;
                for (int i = 0; i < 2; ++i)
                    n = (n << 6) | next();
            }
        }
        if (n > 4096)
            throw ParseError(line, "graph6 graph too large");

        vector<Edge> edges;
        int bits = 0, current = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (bits == 0) {
                    current = next();
                    bits = 6;
                }
                --bits;
                if ((current >> bits) & 1)
                    edges.push_back({i, j});
            }
        if (pos != s.size())
            throw ParseError(line, "trailing characters in graph6 string");

        return Digraph(static_cast<int>(n), std::move(edges), true, std::move(name));
    }

    auto parse_graph(string_view text, string name) -> Digraph
    {
        auto lines = meaningful_lines(text);
        if (! lines.empty() && split(lines[0].text).size() == 1)
            return parse_graph6(text, std::move(name));
        return parse_edge_list(text, std::move(name));
    }

    auto format_edge_list(const Digraph & g) -> string
    {
        std::ostringstream out;
        out << g.num_vertices() << ' ' << g.num_edges() << ' ' << (g.undirected() ? "undirected" : "directed") << '\n';
        for (auto & e : g.edges())
            out << e.tail << ' ' << e.head << '\n';
        return out.str();
    }

    auto format_graph6(const Digraph & g) -> string
    {
        int n = g.num_vertices();
        string out;
        if (n < 63)
            out.push_back(static_cast<char>(n + 63));
        else if (n < 258048) {
            out.push_back(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
        else
            throw std::invalid_argument("graph too large for graph6");

        int bits = 0, current = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(static_cast<char>(current + 63));
                    bits = current = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>((current << (6 - bits)) + 63));
        return out;
    }

    auto read_text_file(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    auto write_text_file(const string & path, string_view text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << text;
    }
}
