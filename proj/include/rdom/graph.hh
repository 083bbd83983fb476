#ifndef RDOM_GRAPH_HH
#define RDOM_GRAPH_HH 1

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdom
{
    inline constexpr int max_order = 64;

    class GraphError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * A set of vertex ids in 0..63, stored as one machine word. Vertex 0 is
     * the least significant bit, so comparing two sets as integers is the
     * tie-break order used for solver witnesses.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
            static auto of(std::initializer_list<int> vertices) -> VertexSet;

            static constexpr auto first_n(int n) -> VertexSet
            {
                return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
            }

            static constexpr auto singleton(int v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

            [[nodiscard]] constexpr auto bits() const -> std::uint64_t { return _bits; }
            [[nodiscard]] constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
            [[nodiscard]] constexpr auto size() const -> int { return std::popcount(_bits); }
            [[nodiscard]] constexpr auto empty() const -> bool { return _bits == 0; }
            [[nodiscard]] constexpr auto lowest() const -> int { return std::countr_zero(_bits); }
            [[nodiscard]] constexpr auto highest() const -> int { return 63 - std::countl_zero(_bits); }

            constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
            constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }

            [[nodiscard]] constexpr auto subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }
            [[nodiscard]] constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }

            constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
            constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
            constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

            friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }
            friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
            friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & ~b._bits}; }
            friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;
            friend constexpr auto operator<=>(VertexSet a, VertexSet b) -> std::strong_ordering { return a._bits <=> b._bits; }

            /// Ascending list of members.
            [[nodiscard]] auto to_vector() const -> std::vector<int>;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (auto b = _bits; b != 0; b &= b - 1)
                    f(std::countr_zero(b));
            }
    };

    struct DegreeProfile
    {
        int n2 = 0;
        int n3 = 0;
        int other = 0;

        friend auto operator==(const DegreeProfile &, const DegreeProfile &) -> bool = default;
    };

    using Edge = std::pair<int, int>;

    /**
     * Simple undirected graph on vertices 0..n-1 with n <= 64. Each row of
     * the adjacency is the open neighbourhood of one vertex. Loops and
     * multi-edges are rejected on construction.
     */
    class Graph
    {
        private:
            std::vector<VertexSet> _adj;

        public:
            Graph() = default;
            explicit Graph(int n);
            Graph(int n, const std::vector<Edge> & edges);

            /// Builds from rows, checking symmetry and irreflexivity.
            static auto from_rows(std::vector<VertexSet> rows) -> Graph;

            [[nodiscard]] auto order() const -> int { return static_cast<int>(_adj.size()); }
            [[nodiscard]] auto size() const -> int;
            [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::first_n(order()); }
            [[nodiscard]] auto neighbours(int v) const -> VertexSet { return _adj[v]; }
            [[nodiscard]] auto closed_neighbours(int v) const -> VertexSet { return _adj[v] | VertexSet::singleton(v); }
            [[nodiscard]] auto adjacent(int u, int v) const -> bool { return _adj[u].contains(v); }
            [[nodiscard]] auto rows() const -> const std::vector<VertexSet> & { return _adj; }
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;
    };

    auto degree(const Graph & g, int v) -> int;
    auto min_degree(const Graph & g) -> int;
    auto max_degree(const Graph & g) -> int;
    auto degree_profile(const Graph & g) -> DegreeProfile;
    auto vertices_of_degree(const Graph & g, int d) -> VertexSet;

    /// Every vertex has degree 2 or 3 (and so n >= 3).
    auto is_special_subcubic(const Graph & g) -> bool;
    auto is_cubic(const Graph & g) -> bool;
    auto is_connected(const Graph & g) -> bool;
    auto is_bipartite(const Graph & g) -> bool;

    /// Degree-2 vertices and degree-3 vertices form the two sides of a bipartition.
    auto is_degree_bipartite(const Graph & g) -> bool;

    struct Component
    {
        Graph graph;
        std::vector<int> to_original;
    };

    /// Connected components ordered by least original vertex id.
    auto components(const Graph & g) -> std::vector<Component>;

    auto induced_subgraph(const Graph & g, const std::vector<int> & keep) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    auto relabel(const Graph & g, const std::vector<int> & new_id_of) -> Graph;

    /**
     * Replace edge {x,y} by the path x, n, n+1, ..., n+t-1, y. The new
     * vertices are numbered in path order starting from the x end.
     */
    auto subdivide(const Graph & g, Edge e, int t) -> Graph;

    auto open_twins(const Graph & g) -> std::vector<Edge>;
    auto is_open_twin(const Graph & g, int v) -> bool;

    /// Shortest cycle length, or nullopt for a forest.
    auto girth(const Graph & g) -> std::optional<int>;

    enum class StructureKind
    {
        Handle,
        Linkage
    };

    struct Structure
    {
        StructureKind kind;
        int k;
        std::vector<int> vertices;

        friend auto operator==(const Structure &, const Structure &) -> bool = default;
    };

    /**
     * All k-handles (cycles through exactly one degree-3 vertex) and
     * k-linkages (paths of k degree-2 vertices between two distinct degree-3
     * vertices) of a special subcubic graph. Handles are listed from their
     * large vertex along the smaller-id direction; linkages start at the
     * smaller endpoint. Output is sorted.
     */
    auto find_handles_and_linkages(const Graph & g) -> std::vector<Structure>;

    /// K_4 minus an edge.
    auto is_diamond(const Graph & g) -> bool;
    /// C_6 plus one chord joining antipodal vertices.
    auto is_domino(const Graph & g) -> bool;

    namespace named
    {
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto complete(int n) -> Graph;
        auto complete_bipartite(int a, int b) -> Graph;
        auto star(int leaves) -> Graph;
        /// Outer cycle x1..x5 = 0..4, inner pentagram y1..y5 = 5..9, spokes xi-yi.
        auto petersen() -> Graph;
        auto prism(int k) -> Graph;
    }
}

#endif
