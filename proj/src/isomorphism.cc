#include <rdom/graph6.hh>
#include <rdom/isomorphism.hh>

#include <algorithm>
#include <array>
#include <cstdint>

using std::array;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace rdom
{
    namespace
    {
        struct Partition
        {
            array<uint64_t, max_certificate_order> cells{};
            int count = 0;

            [[nodiscard]] auto discrete(int n) const -> bool { return count == n; }
        };

        using Permutation = array<std::uint8_t, max_certificate_order>;

        class Canonicaliser
        {
            private:
                const Graph & _g;
                int _n;
                array<uint64_t, max_certificate_order> _adj{};

                bool _have_leaf = false;
                array<uint64_t, max_certificate_order> _first_rows{}, _best_rows{};
                Permutation _first_position{}, _best_position{};
                vector<Permutation> _automorphisms;

                auto refine(Partition & p) const -> void
                {
                    array<uint64_t, 4 * max_certificate_order> queue{};
                    int head = 0, tail = 0;
                    for (int i = 0; i < p.count; ++i)
                        queue[tail++] = p.cells[i];

                    while (head < tail && ! p.discrete(_n)) {
                        uint64_t splitter = queue[head++];
                        for (int c = 0; c < p.count; ++c) {
                            uint64_t cell = p.cells[c];
                            if (std::popcount(cell) == 1)
                                continue;

                            array<uint64_t, max_certificate_order + 1> by_count{};
                            int lowest = max_certificate_order + 1, highest = -1;
                            for (auto b = cell; b != 0; b &= b - 1) {
                                int v = std::countr_zero(b);
                                int k = std::popcount(_adj[v] & splitter);
                                by_count[k] |= uint64_t{1} << v;
                                lowest = std::min(lowest, k);
                                highest = std::max(highest, k);
                            }
                            if (lowest == highest)
                                continue;

                            array<uint64_t, max_certificate_order> parts{};
                            int part_count = 0;
                            for (int k = lowest; k <= highest; ++k)
                                if (by_count[k] != 0)
                                    parts[part_count++] = by_count[k];

                            for (int i = p.count - 1; i > c; --i)
                                p.cells[i + part_count - 1] = p.cells[i];
                            for (int i = 0; i < part_count; ++i) {
                                p.cells[c + i] = parts[i];
                                if (tail < static_cast<int>(queue.size()))
                                    queue[tail++] = parts[i];
                            }
                            p.count += part_count - 1;
                            c += part_count - 1;
                        }
                    }
                }

                auto leaf(const Partition & p) -> void
                {
                    Permutation position{};
                    for (int i = 0; i < _n; ++i)
                        position[std::countr_zero(p.cells[i])] = static_cast<std::uint8_t>(i);

                    array<uint64_t, max_certificate_order> rows{};
                    for (int i = 0; i < _n; ++i) {
                        int v = std::countr_zero(p.cells[i]);
                        uint64_t row = 0;
                        for (auto b = _adj[v]; b != 0; b &= b - 1)
                            row |= uint64_t{1} << position[std::countr_zero(b)];
                        rows[i] = row;
                    }

                    if (! _have_leaf) {
                        _have_leaf = true;
                        _first_rows = _best_rows = rows;
                        _first_position = _best_position = position;
                        return;
                    }

                    auto record = [&](const Permutation & other) {
                        // vertex v goes to the vertex holding the same label in the other leaf
                        Permutation inverse{};
                        for (int v = 0; v < _n; ++v)
                            inverse[other[v]] = static_cast<std::uint8_t>(v);
                        Permutation gamma{};
                        for (int v = 0; v < _n; ++v)
                            gamma[v] = inverse[position[v]];
                        _automorphisms.push_back(gamma);
                    };

                    if (rows == _first_rows)
                        record(_first_position);
                    else if (rows == _best_rows)
                        record(_best_position);
                    else if (rows > _best_rows) {
                        _best_rows = rows;
                        _best_position = position;
                    }
                }

                auto orbit(int v, const vector<int> & prefix) const -> uint64_t
                {
                    uint64_t seen = uint64_t{1} << v, frontier = seen;
                    while (frontier != 0) {
                        uint64_t next = 0;
                        for (auto & gamma : _automorphisms) {
                            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int u) { return gamma[u] == u; });
                            if (! fixes)
                                continue;
                            for (auto b = frontier; b != 0; b &= b - 1)
                                next |= uint64_t{1} << gamma[std::countr_zero(b)];
                        }
                        frontier = next & ~seen;
                        seen |= next;
                    }
                    return seen;
                }

                auto search(Partition p, vector<int> & prefix) -> void
                {
                    refine(p);
                    if (p.discrete(_n)) {
                        leaf(p);
                        return;
                    }

                    int target = 0;
                    while (std::popcount(p.cells[target]) == 1)
                        ++target;

                    uint64_t explored = 0;
                    for (auto b = p.cells[target]; b != 0; b &= b - 1) {
                        int v = std::countr_zero(b);
                        if (explored != 0 && (orbit(v, prefix) & explored) != 0)
                            continue;

                        Partition child = p;
                        for (int i = child.count - 1; i > target; --i)
                            child.cells[i + 1] = child.cells[i];
                        child.cells[target] = uint64_t{1} << v;
                        child.cells[target + 1] = p.cells[target] & ~(uint64_t{1} << v);
                        ++child.count;

                        prefix.push_back(v);
                        search(child, prefix);
                        prefix.pop_back();
                        explored |= uint64_t{1} << v;
                    }
                }

            public:
                explicit Canonicaliser(const Graph & g) : _g(g), _n(g.order())
                {
                    for (int v = 0; v < _n; ++v)
                        _adj[v] = _g.neighbours(v).bits();
                }

                auto run() -> CanonicalForm
                {
                    CanonicalForm result;
                    if (_n == 0) {
                        result.graph = Graph(0);
                        return result;
                    }

                    Partition initial;
                    initial.cells[0] = VertexSet::first_n(_n).bits();
                    initial.count = 1;
                    vector<int> prefix;
                    search(initial, prefix);

                    result.position_of.resize(_n);
                    vector<VertexSet> rows(_n);
                    for (int v = 0; v < _n; ++v)
                        result.position_of[v] = _best_position[v];
                    for (int i = 0; i < _n; ++i)
                        rows[i] = VertexSet{_best_rows[i]};
                    result.graph = Graph::from_rows(std::move(rows));
                    return result;
                }
        };

        auto check_order(const Graph & g) -> void
        {
            if (g.order() > max_certificate_order)
                throw GraphError{"canonical labelling supports at most " + std::to_string(max_certificate_order) + " vertices, got "
                    + std::to_string(g.order())};
        }
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        check_order(g);
        return Canonicaliser{g}.run();
    }

    auto canonical_certificate(const Graph & g) -> string
    {
        return write_graph6(canonical_form(g).graph);
    }

    auto find_isomorphism(const Graph & a, const Graph & b) -> optional<vector<int>>
    {
        check_order(a);
        check_order(b);
        if (a.order() != b.order() || a.size() != b.size())
            return std::nullopt;

        auto pa = degree_profile(a), pb = degree_profile(b);
        if (! (pa == pb))
            return std::nullopt;

        auto ca = canonical_form(a), cb = canonical_form(b);
        if (! (ca.graph == cb.graph))
            return std::nullopt;

        vector<int> vertex_at(b.order());
        for (int w = 0; w < b.order(); ++w)
            vertex_at[cb.position_of[w]] = w;
        vector<int> mapping(a.order());
        for (int v = 0; v < a.order(); ++v)
            mapping[v] = vertex_at[ca.position_of[v]];
        return mapping;
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return find_isomorphism(a, b).has_value();
    }

    auto is_isomorphism(const Graph & a, const Graph & b, const vector<int> & mapping) -> bool
    {
        if (a.order() != b.order() || static_cast<int>(mapping.size()) != a.order())
            return false;
        vector<bool> used(b.order(), false);
        for (auto w : mapping) {
            if (w < 0 || w >= b.order() || used[w])
                return false;
            used[w] = true;
        }
        for (int u = 0; u < a.order(); ++u)
            for (int v = u + 1; v < a.order(); ++v)
                if (a.adjacent(u, v) != b.adjacent(mapping[u], mapping[v]))
                    return false;
        return true;
    }
}
