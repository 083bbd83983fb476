#include <rdom/enumerate.hh>
#include <rdom/isomorphism.hh>

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_set>

using std::string;
using std::vector;

namespace rdom
{
    auto graph_class_name(GraphClass c) -> string
    {
        switch (c) {
            case GraphClass::Cubic: return "cubic";
            case GraphClass::SpecialSubcubic: return "special-subcubic";
            case GraphClass::DegreeBipartite: return "degree-bipartite";
            case GraphClass::Any: return "any";
        }
        return "?";
    }

    auto parse_graph_class(const string & name) -> std::optional<GraphClass>
    {
        for (auto c : {GraphClass::Cubic, GraphClass::SpecialSubcubic, GraphClass::DegreeBipartite, GraphClass::Any})
            if (graph_class_name(c) == name)
                return c;
        return std::nullopt;
    }

    auto in_class(GraphClass c, const Graph & g) -> bool
    {
        switch (c) {
            case GraphClass::Cubic: return is_cubic(g);
            case GraphClass::SpecialSubcubic: return is_special_subcubic(g);
            case GraphClass::DegreeBipartite: return is_degree_bipartite(g);
            case GraphClass::Any: return true;
        }
        return false;
    }

    auto enumeration_cap(GraphClass c) -> int
    {
        switch (c) {
            case GraphClass::Cubic: return 14;
            case GraphClass::SpecialSubcubic: return 11;
            case GraphClass::DegreeBipartite: return 15;
            case GraphClass::Any: return 9;
        }
        return 0;
    }

    namespace
    {
        // Certificate -> canonical representative, kept sorted for deterministic output.
        using Level = std::map<string, Graph>;

        auto insert_canonical(Level & level, const Graph & g) -> void
        {
            auto form = canonical_form(g);
            auto key = write_graph6(form.graph);
            level.try_emplace(std::move(key), std::move(form.graph));
        }

        /// Every vertex below min_degree can still gain enough non-adjacent partners of degree < 3.
        auto completable(const Graph & g, int min_degree) -> bool
        {
            VertexSet open;
            for (int v = 0; v < g.order(); ++v)
                if (g.neighbours(v).size() < 3)
                    open.insert(v);
            for (int v = 0; v < g.order(); ++v) {
                int need = min_degree - g.neighbours(v).size();
                if (need > 0 && (open - g.neighbours(v) - VertexSet::singleton(v)).size() < need)
                    return false;
            }
            return true;
        }

        // Level-wise edge augmentation over graphs of maximum degree 3 on n vertices.
        auto subcubic_by_edges(int n, int min_degree, const std::function<void(const Graph &)> & at_level) -> void
        {
            Level level;
            level.emplace(write_graph6(Graph(n)), Graph(n));
            int max_edges = 3 * n / 2;
            for (int m = 0; m < max_edges && ! level.empty(); ++m) {
                Level next;
                for (auto & [key, g] : level) {
                    for (int u = 0; u < n; ++u) {
                        if (g.neighbours(u).size() >= 3)
                            continue;
                        for (int v = u + 1; v < n; ++v) {
                            if (g.neighbours(v).size() >= 3 || g.adjacent(u, v))
                                continue;
                            Graph h = g;
                            h.add_edge(u, v);
                            if (completable(h, min_degree))
                                insert_canonical(next, h);
                        }
                    }
                }
                level = std::move(next);
                for (auto & [key, g] : level)
                    at_level(g);
            }
        }

        // Subdivisions of loopless cubic multigraphs: large vertices 0..l-1, one small vertex per multigraph edge.
        auto degree_bipartite(int n, Level & out) -> void
        {
            if (n % 5 != 0)
                return;
            int large = 2 * n / 5, small = 3 * n / 5;
            vector<std::pair<int, int>> pairs;
            for (int a = 0; a < large; ++a)
                for (int b = a + 1; b < large; ++b)
                    pairs.emplace_back(a, b);

            vector<int> deg(large, 0), chosen;
            std::function<void(std::size_t)> extend = [&](std::size_t from) {
                if (static_cast<int>(chosen.size()) == small) {
                    Graph g(n);
                    for (int i = 0; i < small; ++i) {
                        g.add_edge(pairs[chosen[i]].first, large + i);
                        g.add_edge(pairs[chosen[i]].second, large + i);
                    }
                    insert_canonical(out, g);
                    return;
                }
                for (std::size_t p = from; p < pairs.size(); ++p) {
                    auto [a, b] = pairs[p];
                    // the lowest vertex still short of degree 3 must be covered by the next pair
                    int lowest_open = static_cast<int>(std::find_if(deg.begin(), deg.end(), [](int d) { return d < 3; }) - deg.begin());
                    if (a > lowest_open)
                        break;
                    if (deg[a] == 3 || deg[b] == 3)
                        continue;
                    ++deg[a];
                    ++deg[b];
                    chosen.push_back(static_cast<int>(p));
                    extend(p);
                    chosen.pop_back();
                    --deg[a];
                    --deg[b];
                }
            };
            extend(0);
        }

        // Vertex augmentation: every connected graph has a vertex whose removal leaves it connected.
        auto connected_any(int n, Level & out) -> void
        {
            Level level;
            level.emplace(write_graph6(Graph(1)), Graph(1));
            for (int k = 1; k < n; ++k) {
                Level next;
                for (auto & [key, g] : level) {
                    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                        Graph h(k + 1);
                        for (auto [u, v] : g.edges())
                            h.add_edge(u, v);
                        VertexSet{mask}.for_each([&](int u) { h.add_edge(u, k); });
                        insert_canonical(next, h);
                    }
                }
                level = std::move(next);
            }
            out = std::move(level);
        }
    }

    auto enumerate(const EnumSpec & spec, const std::function<void(const Graph &)> & emit) -> void
    {
        if (spec.n < 0 || spec.n > enumeration_cap(spec.graph_class))
            throw EnumerationError{"order " + std::to_string(spec.n) + " outside 0.." + std::to_string(enumeration_cap(spec.graph_class))
                + " for class " + graph_class_name(spec.graph_class)};

        Level result;
        auto keep = [&](const Graph & g) {
            if (in_class(spec.graph_class, g) && (! spec.connected_only || is_connected(g)))
                result.try_emplace(write_graph6(g), g);
        };

        switch (spec.graph_class) {
            case GraphClass::Cubic:
                if (spec.n % 2 == 0 && spec.n >= 4)
                    subcubic_by_edges(spec.n, 3, [&](const Graph & g) {
                        if (g.size() == 3 * spec.n / 2)
                            keep(g);
                    });
                break;
            case GraphClass::SpecialSubcubic:
                if (spec.n >= 3)
                    subcubic_by_edges(spec.n, 2, [&](const Graph & g) {
                        if (g.size() >= spec.n)
                            keep(g);
                    });
                break;
            case GraphClass::DegreeBipartite: {
                Level all;
                degree_bipartite(spec.n, all);
                for (auto & [key, g] : all)
                    keep(g);
                break;
            }
            case GraphClass::Any: {
                if (! spec.connected_only)
                    throw EnumerationError{"generation of class any supports connected graphs only"};
                if (spec.n == 0)
                    break;
                Level all;
                connected_any(spec.n, all);
                for (auto & [key, g] : all)
                    keep(g);
                break;
            }
        }
        for (auto & [key, g] : result)
            emit(g);
    }

    auto enumerate(const EnumSpec & spec) -> vector<Graph>
    {
        vector<Graph> result;
        enumerate(spec, [&](const Graph & g) { result.push_back(g); });
        return result;
    }

    auto enumerate_from_stream(std::istream & in, const std::function<bool(const Graph &)> & predicate, bool strict) -> IngestResult
    {
        auto parsed = read_graph6_stream(in);
        if (strict && ! parsed.failures.empty())
            throw EnumerationError{"line " + std::to_string(parsed.failures.front().line_number) + ": " + parsed.failures.front().message};
        IngestResult result;
        result.failures = std::move(parsed.failures);
        for (auto & line : parsed.graphs) {
            if (predicate(line.graph))
                result.graphs.push_back(std::move(line));
            else
                ++result.filtered;
        }
        return result;
    }

    auto enumerate_from_file(const string & path, const std::function<bool(const Graph &)> & predicate, bool strict) -> IngestResult
    {
        std::ifstream in(path);
        if (! in)
            throw EnumerationError{"cannot open " + path};
        auto result = enumerate_from_stream(in, predicate, strict);
        if (in.bad())
            throw EnumerationError{"read error on " + path};
        return result;
    }
}
