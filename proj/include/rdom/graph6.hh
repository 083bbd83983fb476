#ifndef RDOM_GRAPH6_HH
#define RDOM_GRAPH6_HH 1

#include <rdom/graph.hh>

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rdom
{
    class Graph6Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * Parses one graph6 record. An optional ">>graph6<<" header and a
     * trailing newline are accepted. Throws Graph6Error on a malformed
     * size field, a character outside 63..126, a wrong body length, nonzero
     * padding bits, or an order above 64.
     */
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 encoding with no header and no newline.
    auto write_graph6(const Graph & g) -> std::string;

    struct Graph6Line
    {
        int line_number;
        Graph graph;
    };

    struct Graph6ParseFailure
    {
        int line_number;
        std::string message;
    };

    struct Graph6Stream
    {
        std::vector<Graph6Line> graphs;
        std::vector<Graph6ParseFailure> failures;
    };

    /// Reads newline-separated graph6 records; blank lines are skipped.
    auto read_graph6_stream(std::istream & in) -> Graph6Stream;
}

#endif
