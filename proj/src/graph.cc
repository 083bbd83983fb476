#include <rdom/graph.hh>

#include <algorithm>
#include <deque>
#include <limits>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace rdom
{
    auto VertexSet::of(std::initializer_list<int> vertices) -> VertexSet
    {
        VertexSet s;
        for (auto v : vertices) {
            if (v < 0 || v >= max_order)
                throw GraphError{"vertex id " + to_string(v) + " out of range"};
            s.insert(v);
        }
        return s;
    }

    auto VertexSet::to_vector() const -> vector<int>
    {
        vector<int> result;
        result.reserve(size());
        for_each([&](int v) { result.push_back(v); });
        return result;
    }

    Graph::Graph(int n)
    {
        if (n < 0 || n > max_order)
            throw GraphError{"graph order " + to_string(n) + " outside 0.." + to_string(max_order)};
        _adj.resize(n);
    }

    Graph::Graph(int n, const vector<Edge> & edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::from_rows(vector<VertexSet> rows) -> Graph
    {
        Graph g(static_cast<int>(rows.size()));
        auto all = g.vertices();
        for (int v = 0; v < g.order(); ++v) {
            if (! rows[v].subset_of(all))
                throw GraphError{"adjacency row " + to_string(v) + " names a vertex outside the graph"};
            if (rows[v].contains(v))
                throw GraphError{"loop at vertex " + to_string(v)};
            for (int u = 0; u < v; ++u)
                if (rows[v].contains(u) != rows[u].contains(v))
                    throw GraphError{"adjacency rows are not symmetric"};
        }
        g._adj = std::move(rows);
        return g;
    }

    auto Graph::size() const -> int
    {
        int twice = 0;
        for (auto r : _adj)
            twice += r.size();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < order(); ++u)
            (_adj[u] - VertexSet::first_n(u + 1)).for_each([&](int v) { result.emplace_back(u, v); });
        return result;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw GraphError{"edge {" + to_string(u) + "," + to_string(v) + "} names a vertex outside the graph"};
        if (u == v)
            throw GraphError{"loop at vertex " + to_string(u)};
        if (_adj[u].contains(v))
            throw GraphError{"duplicate edge {" + to_string(u) + "," + to_string(v) + "}"};
        _adj[u].insert(v);
        _adj[v].insert(u);
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= order() || v >= order() || ! _adj[u].contains(v))
            throw GraphError{"{" + to_string(u) + "," + to_string(v) + "} is not an edge"};
        _adj[u].erase(v);
        _adj[v].erase(u);
    }

    auto degree(const Graph & g, int v) -> int
    {
        if (v < 0 || v >= g.order())
            throw GraphError{"vertex id " + to_string(v) + " out of range for order " + to_string(g.order())};
        return g.neighbours(v).size();
    }

    auto min_degree(const Graph & g) -> int
    {
        int result = g.order() == 0 ? 0 : std::numeric_limits<int>::max();
        for (auto r : g.rows())
            result = std::min(result, r.size());
        return result;
    }

    auto max_degree(const Graph & g) -> int
    {
        int result = 0;
        for (auto r : g.rows())
            result = std::max(result, r.size());
        return result;
    }

    auto degree_profile(const Graph & g) -> DegreeProfile
    {
        DegreeProfile p;
        for (auto r : g.rows()) {
            switch (r.size()) {
                case 2: ++p.n2; break;
                case 3: ++p.n3; break;
                default: ++p.other; break;
            }
        }
        return p;
    }

    auto vertices_of_degree(const Graph & g, int d) -> VertexSet
    {
        VertexSet result;
        for (int v = 0; v < g.order(); ++v)
            if (g.neighbours(v).size() == d)
                result.insert(v);
        return result;
    }

    auto is_special_subcubic(const Graph & g) -> bool
    {
        return g.order() >= 3 && degree_profile(g).other == 0;
    }

    auto is_cubic(const Graph & g) -> bool
    {
        return g.order() > 0 && std::all_of(g.rows().begin(), g.rows().end(), [](VertexSet r) { return r.size() == 3; });
    }

    namespace
    {
        auto reach(const Graph & g, int start) -> VertexSet
        {
            VertexSet seen = VertexSet::singleton(start), frontier = seen;
            while (! frontier.empty()) {
                VertexSet next;
                frontier.for_each([&](int v) { next |= g.neighbours(v); });
                frontier = next - seen;
                seen |= frontier;
            }
            return seen;
        }
    }

    auto is_connected(const Graph & g) -> bool
    {
        return g.order() == 0 || reach(g, 0) == g.vertices();
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        vector<int> side(g.order(), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::deque<int> queue{s};
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                bool ok = true;
                g.neighbours(v).for_each([&](int u) {
                    if (side[u] == -1) {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    }
                    else if (side[u] == side[v])
                        ok = false;
                });
                if (! ok)
                    return false;
            }
        }
        return true;
    }

    auto is_degree_bipartite(const Graph & g) -> bool
    {
        if (! is_special_subcubic(g))
            return false;
        auto small = vertices_of_degree(g, 2), large = vertices_of_degree(g, 3);
        for (int v = 0; v < g.order(); ++v) {
            auto other_side = small.contains(v) ? large : small;
            if (! g.neighbours(v).subset_of(other_side))
                return false;
        }
        return true;
    }

    auto components(const Graph & g) -> vector<Component>
    {
        vector<Component> result;
        VertexSet remaining = g.vertices();
        while (! remaining.empty()) {
            auto part = reach(g, remaining.lowest());
            remaining -= part;
            auto keep = part.to_vector();
            result.push_back(Component{induced_subgraph(g, keep), keep});
        }
        return result;
    }

    auto induced_subgraph(const Graph & g, const vector<int> & keep) -> Graph
    {
        vector<int> position(g.order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            position[keep[i]] = static_cast<int>(i);
        Graph result(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            g.neighbours(keep[i]).for_each([&](int u) {
                if (position[u] > static_cast<int>(i))
                    result.add_edge(static_cast<int>(i), position[u]);
            });
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        if (a.order() + b.order() > max_order)
            throw GraphError{"disjoint union exceeds " + to_string(max_order) + " vertices"};
        Graph result(a.order() + b.order());
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(u + a.order(), v + a.order());
        return result;
    }

    auto relabel(const Graph & g, const vector<int> & new_id_of) -> Graph
    {
        if (static_cast<int>(new_id_of.size()) != g.order())
            throw GraphError{"relabelling has wrong length"};
        vector<bool> used(g.order(), false);
        for (auto id : new_id_of) {
            if (id < 0 || id >= g.order() || used[id])
                throw GraphError{"relabelling is not a permutation"};
            used[id] = true;
        }
        Graph result(g.order());
        for (auto [u, v] : g.edges())
            result.add_edge(new_id_of[u], new_id_of[v]);
        return result;
    }

    auto subdivide(const Graph & g, Edge e, int t) -> Graph
    {
        auto [x, y] = e;
        if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || ! g.adjacent(x, y))
            throw GraphError{"cannot subdivide non-edge {" + to_string(x) + "," + to_string(y) + "}"};
        if (t < 1 || t > 4)
            throw GraphError{"subdivision count " + to_string(t) + " outside 1..4"};
        if (g.order() + t > max_order)
            throw GraphError{"subdivision exceeds " + to_string(max_order) + " vertices"};

        Graph result(g.order() + t);
        for (auto [u, v] : g.edges())
            if (! ((u == x && v == y) || (u == y && v == x)))
                result.add_edge(u, v);
        int previous = x;
        for (int i = 0; i < t; ++i) {
            result.add_edge(previous, g.order() + i);
            previous = g.order() + i;
        }
        result.add_edge(previous, y);
        return result;
    }

    auto open_twins(const Graph & g) -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.neighbours(u) == g.neighbours(v))
                    result.emplace_back(u, v);
        return result;
    }

    auto is_open_twin(const Graph & g, int v) -> bool
    {
        for (int u = 0; u < g.order(); ++u)
            if (u != v && g.neighbours(u) == g.neighbours(v))
                return true;
        return false;
    }

    auto girth(const Graph & g) -> optional<int>
    {
        int best = std::numeric_limits<int>::max();
        vector<int> dist(g.order()), parent(g.order());
        for (int root = 0; root < g.order(); ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[root] = 0;
            parent[root] = -1;
            std::deque<int> queue{root};
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                g.neighbours(v).for_each([&](int u) {
                    if (dist[u] == -1) {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    }
                    else if (u != parent[v])
                        best = std::min(best, dist[u] + dist[v] + 1);
                });
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto find_handles_and_linkages(const Graph & g) -> vector<Structure>
    {
        if (! is_special_subcubic(g))
            throw GraphError{"handles and linkages are defined for special subcubic graphs only"};

        auto large = vertices_of_degree(g, 3);
        vector<Structure> result;
        large.for_each([&](int start) {
            g.neighbours(start).for_each([&](int first) {
                if (large.contains(first))
                    return;
                vector<int> walk{start, first};
                int previous = start, current = first;
                while (! large.contains(current)) {
                    int next = (g.neighbours(current) - VertexSet::singleton(previous)).lowest();
                    previous = current;
                    current = next;
                    if (current == start)
                        break;
                    walk.push_back(current);
                }
                if (current == start) {
                    // walk is start, s1, ..., s_{k-1}; each handle is seen from both directions
                    if (walk[1] < walk.back())
                        result.push_back(Structure{StructureKind::Handle, static_cast<int>(walk.size()), walk});
                }
                else {
                    vector<int> reversed(walk.rbegin(), walk.rend());
                    if (walk < reversed)
                        result.push_back(Structure{StructureKind::Linkage, static_cast<int>(walk.size()) - 2, walk});
                }
            });
        });
        std::sort(result.begin(), result.end(), [](const Structure & a, const Structure & b) {
            return std::tie(a.kind, a.k, a.vertices) < std::tie(b.kind, b.k, b.vertices);
        });
        return result;
    }

    auto is_diamond(const Graph & g) -> bool
    {
        // the only simple graph with 4 vertices and 5 edges
        return g.order() == 4 && g.size() == 5;
    }

    auto is_domino(const Graph & g) -> bool
    {
        if (g.order() != 6 || g.size() != 7)
            return false;
        auto large = vertices_of_degree(g, 3);
        if (large.size() != 2 || vertices_of_degree(g, 2).size() != 4)
            return false;
        int a = large.lowest(), b = large.highest();
        if (! g.adjacent(a, b))
            return false;
        Graph rest = g;
        rest.remove_edge(a, b);
        if (! is_connected(rest) || vertices_of_degree(rest, 2).size() != 6)
            return false;
        // antipodal on the 6-cycle: no common neighbour and not adjacent
        return ! rest.adjacent(a, b) && ! rest.neighbours(a).intersects(rest.neighbours(b));
    }

    namespace named
    {
        auto path(int n) -> Graph
        {
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i)
                g.add_edge(i, i + 1);
            return g;
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw GraphError{"cycle needs at least 3 vertices"};
            Graph g = path(n);
            g.add_edge(n - 1, 0);
            return g;
        }

        auto complete(int n) -> Graph
        {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    g.add_edge(u, v);
            return g;
        }

        auto complete_bipartite(int a, int b) -> Graph
        {
            Graph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v)
                    g.add_edge(u, a + v);
            return g;
        }

        auto star(int leaves) -> Graph
        {
            return complete_bipartite(1, leaves);
        }

        auto petersen() -> Graph
        {
            Graph g(10);
            for (int i = 0; i < 5; ++i) {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
                g.add_edge(i, 5 + i);
            }
            return g;
        }

        auto prism(int k) -> Graph
        {
            Graph g(2 * k);
            for (int i = 0; i < k; ++i) {
                g.add_edge(i, (i + 1) % k);
                g.add_edge(k + i, k + (i + 1) % k);
                g.add_edge(i, k + i);
            }
            return g;
        }
    }
}
