#ifndef RDOM_ENUMERATE_HH
#define RDOM_ENUMERATE_HH 1

#include <rdom/graph.hh>
#include <rdom/graph6.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rdom
{
    enum class GraphClass
    {
        Cubic,
        SpecialSubcubic,
        /// Special subcubic with degree-2 and degree-3 vertices forming a bipartition.
        DegreeBipartite,
        /// Any graph; generation supports connected graphs only.
        Any
    };

    auto graph_class_name(GraphClass c) -> std::string;
    auto parse_graph_class(const std::string & name) -> std::optional<GraphClass>;
    auto in_class(GraphClass c, const Graph & g) -> bool;

    /// Largest order the built-in generator accepts for each class.
    auto enumeration_cap(GraphClass c) -> int;

    struct EnumSpec
    {
        int n = 0;
        GraphClass graph_class = GraphClass::Cubic;
        bool connected_only = true;
    };

    class EnumerationError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * One canonically labelled representative per isomorphism class, in
     * increasing order of canonical certificate. Throws EnumerationError if
     * the order exceeds the class cap.
     */
    auto enumerate(const EnumSpec & spec) -> std::vector<Graph>;

    auto enumerate(const EnumSpec & spec, const std::function<void(const Graph &)> & emit) -> void;

    struct IngestResult
    {
        std::vector<Graph6Line> graphs;
        std::vector<Graph6ParseFailure> failures;
        /// Parsed lines rejected by the class predicate.
        int filtered = 0;
    };

    /**
     * Reads a graph6 file, keeping graphs that satisfy the predicate in file
     * order. Malformed lines are collected; with strict set the first one
     * throws EnumerationError instead. I/O failure always throws.
     */
    auto enumerate_from_file(const std::string & path, const std::function<bool(const Graph &)> & predicate,
        bool strict = false) -> IngestResult;

    auto enumerate_from_stream(std::istream & in, const std::function<bool(const Graph &)> & predicate,
        bool strict = false) -> IngestResult;
}

#endif
