#ifndef RDOM_SOLVER_HH
#define RDOM_SOLVER_HH 1

#include <rdom/graph.hh>

namespace rdom
{
    enum class NerdVariant
    {
        /// X need not be dominated; every vertex outside S needs a neighbour outside S.
        Type1,
        /// Everything dominated, X kept outside S, and X exempt from the outside-neighbour rule.
        Type2
    };

    struct NerdQuery
    {
        VertexSet x;
        NerdVariant variant = NerdVariant::Type1;
    };

    /**
     * The constraint system every predicate in this module reduces to. A set
     * S satisfies it when S contains forced_in, avoids forced_out, every
     * vertex of must_dominate is in S or has a neighbour in S, and every
     * vertex of must_restrain outside S has a neighbour outside S.
     */
    struct Requirement
    {
        VertexSet must_dominate;
        VertexSet must_restrain;
        VertexSet forced_in;
        VertexSet forced_out;

        static auto dominating(const Graph & g) -> Requirement;
        static auto restrained(const Graph & g) -> Requirement;
        static auto nerd(const Graph & g, const NerdQuery & q) -> Requirement;
    };

    auto satisfies(const Graph & g, VertexSet s, const Requirement & r) -> bool;

    auto is_dominating(const Graph & g, VertexSet s) -> bool;
    auto is_restrained_dominating(const Graph & g, VertexSet s) -> bool;
    auto is_nerd(const Graph & g, VertexSet s, const NerdQuery & q) -> bool;

    enum class SolveStatus
    {
        Optimal,
        Infeasible
    };

    struct SolveOutcome
    {
        SolveStatus status = SolveStatus::Infeasible;
        int size = 0;
        /// Least set of minimum size, comparing sets as integers with vertex 0 least significant.
        VertexSet witness;
        long nodes = 0;
    };

    /// Minimum-size set satisfying r, with the least witness among optima.
    auto solve_minimum(const Graph & g, const Requirement & r) -> SolveOutcome;

    auto gamma_r_exact(const Graph & g) -> SolveOutcome;
    auto gamma_r_nerd_exact(const Graph & g, const NerdQuery & q) -> SolveOutcome;
    auto gamma_exact(const Graph & g) -> SolveOutcome;
}

#endif
