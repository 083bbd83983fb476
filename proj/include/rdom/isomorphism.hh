#ifndef RDOM_ISOMORPHISM_HH
#define RDOM_ISOMORPHISM_HH 1

#include <rdom/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace rdom
{
    inline constexpr int max_certificate_order = 16;

    struct CanonicalForm
    {
        /// position_of[v] is the canonical label of vertex v.
        std::vector<int> position_of;
        Graph graph;
    };

    /**
     * Canonical labelling by equitable colour refinement and an
     * individualisation search tree, pruned with the automorphisms found at
     * equal leaves. The canonical graph is the leaf whose relabelled
     * adjacency rows are lexicographically greatest. Throws GraphError above
     * max_certificate_order vertices.
     */
    auto canonical_form(const Graph & g) -> CanonicalForm;

    /// graph6 encoding of the canonical form; equal iff isomorphic.
    auto canonical_certificate(const Graph & g) -> std::string;

    /// Returns a bijection mapping vertices of a to vertices of b, if one exists.
    auto find_isomorphism(const Graph & a, const Graph & b) -> std::optional<std::vector<int>>;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Checks that mapping is an adjacency-preserving bijection.
    auto is_isomorphism(const Graph & a, const Graph & b, const std::vector<int> & mapping) -> bool;
}

#endif
