#ifndef TTM_GRAPH_IO_HH
#define TTM_GRAPH_IO_HH 1

#include <ttm/graph.hh>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttm
{
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, const std::string & message);
        auto line() const -> int { return _line; }

    private:
        int _line;
    };

    /// Edge-list text: "<n> <m> directed|undirected" then m lines "<tail> <head>".
    /// Blank lines and lines starting with '#' are skipped.
    auto parse_edge_list(std::string_view text, std::string name = {}) -> Digraph;

    /// Parses one graph6 string (optionally preceded by the >>graph6<< header) as an undirected graph.
    auto parse_graph6(std::string_view text, std::string name = {}) -> Digraph;

    /// Accepts either format: graph6 when the first meaningful line is a single token.
    auto parse_graph(std::string_view text, std::string name = {}) -> Digraph;

    auto format_edge_list(const Digraph & g) -> std::string;
    auto format_graph6(const Digraph & g) -> std::string;

    auto read_text_file(const std::string & path) -> std::string;
    auto write_text_file(const std::string & path, std::string_view text) -> void;
}

#endif
