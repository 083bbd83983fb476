#ifndef RDOM_CONSTRUCTIVE_HH
#define RDOM_CONSTRUCTIVE_HH 1

#include <rdom/graph.hh>

#include <array>
#include <string>
#include <vector>

namespace rdom
{
    /// Closed form n - 2 floor((n-1)/3), n >= 1.
    auto gamma_r_path(int n) -> int;

    /// Closed form n - 2 floor(n/3), n >= 3.
    auto gamma_r_cycle(int n) -> int;

    /**
     * Intermediate sets of the RD-set construction for graphs whose degree-2
     * vertices (small) and degree-3 vertices (large) form a bipartition.
     */
    struct Lemma1Trace
    {
        VertexSet small;
        VertexSet large;
        /// Greedy maximal independent set of the auxiliary graph on the large vertices.
        VertexSet l1;
        VertexSet l2;
        VertexSet s1;
        VertexSet s2;
        /// l2_by_count[i-1] holds large vertices outside l1 with exactly i neighbours in s1.
        std::array<VertexSet, 3> l2_by_count;
        VertexSet s11;
        VertexSet s12;
        VertexSet d;
    };

    struct Lemma1Result
    {
        VertexSet d;
        Lemma1Trace trace;
    };

    /**
     * Builds the set L1 + S11 + S2. Large vertices are adjacent in the
     * auxiliary graph when they share a small neighbour; L1 is chosen
     * greedily by ascending id, and each large vertex with three neighbours
     * in S1 contributes its lowest-id such neighbour to S11. Throws
     * GraphError if the degree classes do not form a bipartition.
     */
    auto lemma1_construct(const Graph & g) -> Lemma1Result;

    /// Checks the structural facts the construction relies on; returns one message per failed fact.
    auto check_lemma1_trace(const Graph & g, const Lemma1Trace & t) -> std::vector<std::string>;
}

#endif
